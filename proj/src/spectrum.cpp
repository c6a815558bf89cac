#include "lensspec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace lensspec {

Int eigenvalue(const LensSpace& space, Int k) { return k * (k + space.sphere_dimension() - 1); }

std::vector<Int> invariant_monomial_counts(const LensSpace& space, Int max_degree) {
  if (max_degree < 0) return {};
  const Int q = space.order();
  const auto K = static_cast<std::size_t>(max_degree);
  const auto Q = static_cast<std::size_t>(q);

  // Weight of each coordinate under the generator: z_i -> p_i, conj(z_i) -> -p_i,
  // padded real coordinates -> 0.
  std::vector<std::size_t> weights;
  for (Int p : space.rotations()) {
    weights.push_back(static_cast<std::size_t>(mod(p, q)));
    weights.push_back(static_cast<std::size_t>(mod(-p, q)));
  }
  for (Int w = 0; w < space.padding(); ++w) weights.push_back(0);

  // table[d * Q + r]: monomials of degree d in the coordinates processed so far
  // whose weight is r mod q. Adding a coordinate of weight w multiplies the
  // bivariate series by 1 / (1 - t x^w), i.e. an in-place forward recurrence.
  std::vector<Int> table((K + 1) * Q, 0);
  table[0] = 1;
  for (std::size_t w : weights) {
    for (std::size_t d = 1; d <= K; ++d) {
      Int* row = &table[d * Q];
      const Int* prev = &table[(d - 1) * Q];
      for (std::size_t r = 0; r < Q; ++r) {
        const std::size_t src = r >= w ? r - w : r + Q - w;
        if (__builtin_add_overflow(row[r], prev[src], &row[r]))
          throw std::overflow_error("invariant monomial count exceeds 64 bits");
      }
    }
  }
  std::vector<Int> counts(K + 1);
  for (std::size_t d = 0; d <= K; ++d) counts[d] = table[d * Q];
  return counts;
}

std::vector<Int> multiplicities(const LensSpace& space, Int kmax) {
  // P^k = H^k + r^2 P^{k-2} as representations, and r^2 is invariant.
  const std::vector<Int> counts = invariant_monomial_counts(space, kmax);
  std::vector<Int> mult(counts.size());
  for (std::size_t k = 0; k < counts.size(); ++k) mult[k] = counts[k] - (k >= 2 ? counts[k - 2] : 0);
  return mult;
}

Int multiplicity(const LensSpace& space, Int k) {
  if (k < 0) return 0;
  return multiplicities(space, k).back();
}

SpectrumTable spectrum_table(const LensSpace& space, Int kmax) {
  SpectrumTable table;
  const std::vector<Int> mult = multiplicities(space, kmax);
  table.rows.reserve(mult.size());
  for (std::size_t k = 0; k < mult.size(); ++k) {
    const auto kk = static_cast<Int>(k);
    table.rows.push_back({kk, eigenvalue(space, kk), mult[k]});
  }
  return table;
}

std::vector<Int> GeneratingFunction::taylor(Int kmax) const {
  std::vector<Int> out(static_cast<std::size_t>(kmax + 1), 0);
  const Int e = denominator_exponent();
  // 1 / (1 - z^q)^e = sum_j C(j + e - 1, e - 1) z^{qj}
  for (std::size_t i = 0; i < numerator.coefficients().size() && static_cast<Int>(i) <= kmax; ++i) {
    const Int c = numerator.coeff(i);
    if (c == 0) continue;
    for (Int j = 0; static_cast<Int>(i) + q * j <= kmax; ++j) {
      auto& slot = out[i + static_cast<std::size_t>(q * j)];
      slot = checked_add(slot, checked_mul(c, binomial(j + e - 1, e - 1)));
    }
  }
  return out;
}

std::complex<double> GeneratingFunction::evaluate(std::complex<double> z) const {
  return numerator.evaluate(z) / std::pow(1.0 - std::pow(z, static_cast<double>(q)), static_cast<double>(2 * n));
}

GeneratingFunction generating_function(const LensSpace& space) {
  if (space.padding() > 1)
    throw LensError(ErrorKind::UnsupportedPadding, "generating function supports padding 0 or 1");
  const Int q = space.order();
  const auto n = static_cast<Int>(space.rank());
  const Int K = 2 * n * q + 2;
  const std::size_t max_degree = static_cast<std::size_t>(2 * n * q - 2 * n + 2);

  const IntPolynomial series(multiplicities(space, K));
  const IntPolynomial full = series.truncated_product(IntPolynomial::one_minus_zq_pow(q, 2 * n),
                                                      static_cast<std::size_t>(K));
  for (std::size_t i = max_degree + 1; i <= static_cast<std::size_t>(K); ++i)
    if (full.coeff(i) != 0)
      throw LensError(ErrorKind::InvariantViolation, "numerator of " + space.to_string() + " exceeds degree bound");

  std::vector<Int> head(full.coefficients().begin(),
                        full.coefficients().begin() + static_cast<long>(std::min<std::size_t>(
                                                          max_degree + 1, full.coefficients().size())));
  return GeneratingFunction{IntPolynomial(std::move(head)), q, n, space.padding()};
}

Int isospectrality_bound(const LensSpace& space) {
  return 2 * static_cast<Int>(space.rank()) * space.order() + 2;
}

std::optional<Int> first_difference(const std::vector<Int>& a, const std::vector<Int>& b) {
  const std::size_t len = std::min(a.size(), b.size());
  for (std::size_t k = 0; k < len; ++k)
    if (a[k] != b[k]) return static_cast<Int>(k);
  return std::nullopt;
}

IsospectralVerdict is_isospectral(const LensSpace& first, const LensSpace& second) {
  if (first.rank() != second.rank() || first.padding() != second.padding())
    throw LensError(ErrorKind::DimensionMismatch, first.to_string() + " vs " + second.to_string());
  if (first.order() != second.order()) return {false, IsospectralReason::GroupOrdersDiffer, std::nullopt};
  const Int K = isospectrality_bound(first);
  const auto diff = first_difference(multiplicities(first, K), multiplicities(second, K));
  if (diff) return {false, IsospectralReason::MultiplicityDiffers, diff};
  return {true, IsospectralReason::Equal, std::nullopt};
}

std::complex<double> root_of_unity(Int e, Int q) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(mod(e, q)) / static_cast<double>(q);
  return std::polar(1.0, angle);
}

namespace {

template <typename T>
std::complex<T> evaluate_closed_form(const LensSpace& space, std::complex<T> z) {
  const Int q = space.order();
  const T two_pi = T(2) * std::numbers::pi_v<T>;
  auto root = [&](Int e) { return std::polar(T(1), two_pi * static_cast<T>(mod(e, q)) / static_cast<T>(q)); };
  const T eps = T(1e-13);

  std::complex<T> sum = 0;
  for (Int l = 1; l <= q; ++l) {
    std::complex<T> det = 1;
    for (Int p : space.rotations()) {
      const std::complex<T> f1 = z - root(p * l);
      const std::complex<T> f2 = z - root(-p * l);
      if (std::abs(f1) < eps || std::abs(f2) < eps)
        throw LensError(ErrorKind::PoleEvaluation, "z is a pole of the generating function");
      det *= f1 * f2;
    }
    sum += T(1) / det;
  }
  std::complex<T> prefactor;
  if (space.padding() == 0) {
    prefactor = T(1) - z * z;
  } else {
    const std::complex<T> one_minus = T(1) - z;
    if (space.padding() > 1 && std::abs(one_minus) < eps)
      throw LensError(ErrorKind::PoleEvaluation, "z = 1 is a pole of the generating function");
    prefactor = (T(1) + z) / std::pow(one_minus, static_cast<T>(space.padding() - 1));
  }
  return prefactor * sum / static_cast<T>(q);
}

void require_rank2_unpadded(const LensSpace& space) {
  if (space.rank() != 2 || space.padding() != 0)
    throw LensError(ErrorKind::PreconditionViolated, space.to_string() + " is not a 3-dimensional lens space");
}

}  // namespace

std::complex<double> evaluate_F(const LensSpace& space, std::complex<double> z) {
  return evaluate_closed_form<double>(space, z);
}

std::complex<long double> evaluate_F(const LensSpace& space, std::complex<long double> z) {
  return evaluate_closed_form<long double>(space, z);
}

ResidueProfile residue_cot_sum(const LensSpace& space) {
  require_rank2_unpadded(space);
  const Int q = space.order();
  const Int x = space.rotation(0);
  const Int second = space.rotation(1);
  const Int y = std::gcd(second, q);
  if (x <= 1 || q % x != 0 || y <= x || std::gcd(x, second) != 1)
    throw LensError(ErrorKind::PreconditionViolated,
                    space.to_string() + " is not of the form L(q : x, p*y) with 1 < x | q, y = gcd(p*y, q) > x");

  ResidueProfile profile;
  profile.x = x;
  profile.y = y;
  const Int step = q / x;
  const double pi = std::numbers::pi;
  double cot_sum = 0.0;
  for (Int t = 1; t <= x; ++t) {
    const Int alpha_t = second * (t * step - 1);
    const Int a = alpha_t + x;
    const Int b = alpha_t - x;
    profile.a.push_back(a);
    profile.b.push_back(b);
    // a, b are never 0 mod q: that would force y | x.
    cot_sum += 1.0 / std::tan(pi * static_cast<double>(mod(a, q)) / static_cast<double>(q)) -
               1.0 / std::tan(pi * static_cast<double>(mod(b, q)) / static_cast<double>(q));
  }
  if (!(std::abs(cot_sum) > 1e-12))
    throw LensError(ErrorKind::InvariantViolation, "cotangent residue vanished for " + space.to_string());
  const double scale = 2.0 * static_cast<double>(q) * std::sin(2.0 * pi * static_cast<double>(x) / static_cast<double>(q));
  profile.value = {cot_sum / scale, 0.0};
  return profile;
}

std::complex<double> residue_case3(const LensSpace& space, Int j) {
  require_rank2_unpadded(space);
  const Int q = space.order();
  const Int x = space.rotation(1);
  if (space.rotation(0) != 1 || std::gcd(x, q) <= 1 || q < 3)
    throw LensError(ErrorKind::PreconditionViolated, space.to_string() + " is not of the form L(q : 1, x), gcd(x, q) > 1");
  if (std::gcd(j, q) != 1)
    throw LensError(ErrorKind::PreconditionViolated, "residue point must be a primitive q-th root of unity");
  const std::complex<double> gamma = root_of_unity(j, q);
  const std::complex<double> d1 = 1.0 - root_of_unity(j * (1 - x), q);
  const std::complex<double> d2 = 1.0 - root_of_unity(j * (1 + x), q);
  return -2.0 * gamma / (static_cast<double>(q) * d1 * d2);
}

Int pole_order(const LensSpace& space, Int k) {
  const Int q = space.order();
  if (k < 1 || q % k != 0) throw LensError(ErrorKind::NotADivisor, std::to_string(k) + " does not divide " + std::to_string(q));
  // An eigenvalue zeta of g contributes 1 / (1 - zeta z) to 1/det(I - gz),
  // i.e. a pole at conj(zeta). Units act transitively on the primitive k-th
  // roots, so tracking the maximal multiplicity of any primitive k-th root
  // eigenvalue over all elements is enough.
  Int best = 0;
  std::vector<Int> exps;
  for (Int l = 0; l < q; ++l) {
    exps.clear();
    for (Int p : space.rotations()) {
      exps.push_back(mod(p * l, q));
      exps.push_back(mod(-p * l, q));
    }
    for (Int w = 0; w < space.padding(); ++w) exps.push_back(0);
    for (Int e : exps) {
      if (q / std::gcd(e, q) != k) continue;
      const auto m = static_cast<Int>(std::count(exps.begin(), exps.end(), e));
      best = std::max(best, m);
    }
  }
  // The factor 1 - z^2 removes one order at z = +1 and z = -1.
  return k <= 2 ? best - 1 : best;
}

Int pole_order_exact(const LensSpace& space, Int k) {
  const Int q = space.order();
  if (k < 1 || q % k != 0) throw LensError(ErrorKind::NotADivisor, std::to_string(k) + " does not divide " + std::to_string(q));
  const GeneratingFunction gf = generating_function(space);
  const IntPolynomial phi = IntPolynomial::cyclotomic(k);
  IntPolynomial rest = gf.numerator;
  Int valuation = 0;
  while (!rest.is_zero()) {
    auto [quotient, remainder] = rest.divmod_monic(phi);
    if (!remainder.is_zero()) break;
    rest = std::move(quotient);
    ++valuation;
  }
  return gf.denominator_exponent() - valuation;
}

std::vector<Int> order_spectrum(const LensSpace& space) { return divisors(space.order()); }

}  // namespace lensspec
