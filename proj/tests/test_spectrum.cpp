#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "lensspec/search.hpp"
#include "lensspec/spectrum.hpp"
#include "support/oracles.hpp"

using namespace lensspec;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const LensError& e) {
    return e.kind();
  }
  FAIL("expected a LensError");
  return ErrorKind::InvariantViolation;
}

std::vector<Int> rotations_of(const LensSpace& s) { return {s.rotations().begin(), s.rotations().end()}; }

const LensSpace kSphere(1, {0, 0});
const LensSpace kRP3(2, {1, 1});

oracle::Complex F_oracle(const LensSpace& s, oracle::Complex z) {
  return oracle::generating_sum(s.order(), rotations_of(s), s.padding(), z);
}

}  // namespace

TEST_CASE("sphere and projective space baselines") {
  const auto sphere = multiplicities(kSphere, 50);
  const auto rp3 = multiplicities(kRP3, 50);
  for (Int k = 0; k <= 50; ++k) {
    CHECK(sphere[k] == (k + 1) * (k + 1));
    CHECK(rp3[k] == (k % 2 == 0 ? (k + 1) * (k + 1) : 0));
  }
  const auto s4 = multiplicities(LensSpace(1, {0, 0}, 1), 30);
  for (Int k = 0; k <= 30; ++k) CHECK(s4[k] == oracle::sphere_multiplicity(4, k));
  CHECK(multiplicity(kSphere, 2) == 9);
  CHECK(multiplicity(LensSpace(195, {3, 5}), 0) == 1);
}

TEST_CASE("spectrum_table rows") {
  const SpectrumTable sphere = spectrum_table(kSphere, 3);
  REQUIRE(sphere.rows.size() == 4);
  CHECK(sphere.rows[3] == SpectrumRow{3, 15, 16});
  const SpectrumTable rp3 = spectrum_table(kRP3, 3);
  CHECK(rp3.rows[1] == SpectrumRow{1, 3, 0});
  CHECK(rp3.rows[2] == SpectrumRow{2, 8, 9});
  const SpectrumTable single = spectrum_table(LensSpace(195, {3, 5}), 0);
  REQUIRE(single.rows.size() == 1);
  CHECK(single.rows[0] == SpectrumRow{0, 0, 1});
  CHECK(eigenvalue(LensSpace(5, {1, 2}, 1), 3) == 18);
  CHECK(eigenvalue(LensSpace(5, {1, 2, 3}), 2) == 2 * (2 + 4));
}

TEST_CASE("multiplicities equal the tuple-enumeration oracle for every class with q <= 25") {
  for (Int padding = 0; padding <= 1; ++padding) {
    for (const LensSpace& s : enumerate(1, 25, 2, padding)) {
      const auto expected = oracle::multiplicities(s.order(), rotations_of(s), padding, 60);
      REQUIRE_MESSAGE(multiplicities(s, 60) == expected, s.to_string());
    }
  }
  // Rank 3 on S^5, a shape the sweeps never touch.
  const LensSpace r3(7, {1, 2, 3});
  CHECK(multiplicities(r3, 30) == oracle::multiplicities(7, {1, 2, 3}, 0, 30));
  CHECK(invariant_monomial_counts(LensSpace(5, {1, 2}), 20) == oracle::tuple_counts(5, {1, 2}, 20));
}

TEST_CASE("generating function") {
  const GeneratingFunction sphere = generating_function(kSphere);
  CHECK(sphere.numerator == IntPolynomial({1, 0, -1}));
  CHECK(sphere.denominator_exponent() == 4);

  // L(2:1,1): the parity series times (1 - z^2)^4.
  std::vector<Int> series(11, 0);
  for (Int k = 0; k <= 10; k += 2) series[k] = (k + 1) * (k + 1);
  const IntPolynomial expected = IntPolynomial(series).truncated_product(IntPolynomial::one_minus_zq_pow(2, 4), 10);
  const GeneratingFunction rp3 = generating_function(kRP3);
  CHECK(rp3.numerator == expected);
  CHECK(rp3.numerator.degree() <= 2 * 2 * 2 - 2 * 2 + 2);

  CHECK(kind_of([] { generating_function(LensSpace(5, {1, 2}, 2)); }) == ErrorKind::UnsupportedPadding);

  for (Int padding = 0; padding <= 1; ++padding)
    for (const LensSpace& s : enumerate(1, 30, 2, padding)) {
      const GeneratingFunction gf = generating_function(s);
      const Int n = 2;
      CHECK(gf.numerator.degree() <= 2 * n * s.order() - 2 * n + 2);
      REQUIRE_MESSAGE(gf.taylor(3 * n * s.order()) == multiplicities(s, 3 * n * s.order()), s.to_string());
      CHECK(gf.taylor(0) == std::vector<Int>{1});
    }
}

TEST_CASE("padding identity N0 = (1 - z) N1 for every class with q <= 40") {
  for (const LensSpace& s : enumerate(1, 40, 2, 0)) {
    const IntPolynomial n0 = generating_function(s).numerator;
    const IntPolynomial n1 = generating_function(pad(s, 1)).numerator;
    REQUIRE_MESSAGE(n0 == IntPolynomial({1, -1}) * n1, s.to_string());
  }
}

TEST_CASE("isospectrality decisions") {
  const auto same = is_isospectral(LensSpace(13, {2, 5}), LensSpace(13, {2, 5}));
  CHECK(same.isospectral);
  CHECK(same.reason == IsospectralReason::Equal);
  CHECK(is_isospectral(LensSpace(13, {2, 5}), LensSpace(13, {5, 2})).isospectral);

  const auto v = is_isospectral(LensSpace(195, {3, 5}), LensSpace(195, {6, 35}));
  CHECK_FALSE(v.isospectral);
  CHECK(v.reason == IsospectralReason::MultiplicityDiffers);
  REQUIRE(v.first_difference);
  CHECK(*v.first_difference == 8);
  CHECK(multiplicity(LensSpace(195, {3, 5}), 8) != multiplicity(LensSpace(195, {6, 35}), 8));
  for (Int k = 0; k < 8; ++k) CHECK(multiplicity(LensSpace(195, {3, 5}), k) == multiplicity(LensSpace(195, {6, 35}), k));

  const auto orders = is_isospectral(LensSpace(7, {1, 2}), LensSpace(8, {1, 3}));
  CHECK_FALSE(orders.isospectral);
  CHECK(orders.reason == IsospectralReason::GroupOrdersDiffer);
  CHECK(kind_of([] { is_isospectral(LensSpace(7, {1, 2}), LensSpace(7, {1, 2}, 1)); }) == ErrorKind::DimensionMismatch);
  CHECK(isospectrality_bound(LensSpace(195, {3, 5})) == 782);
  CHECK(first_difference({1, 2, 3}, {1, 2, 4}) == 2);
  CHECK_FALSE(first_difference({1, 2}, {1, 2}));
}

TEST_CASE("isometric spaces are isospectral for every reduced pair with q <= 40") {
  for (Int q = 2; q <= 40; ++q)
    for (Int a = 1; a < q; ++a)
      for (Int b = a; b < q; ++b) {
        if (std::gcd(std::gcd(a, b), q) != 1) continue;
        const LensSpace s(q, {a, b});
        REQUIRE_MESSAGE(is_isospectral(s, canonical_form(s)).isospectral, s.to_string());
      }
}

TEST_CASE("Weyl-law sanity of multiplicity sums") {
  const Int sphere_sum = [] {
    Int s = 0;
    for (Int k = 0; k <= 100; ++k) s += (k + 1) * (k + 1);
    return s;
  }();
  for (const LensSpace& s : enumerate(2, 25, 2, 0)) {
    Int total = 0;
    for (Int m : multiplicities(s, 100)) total += m;
    const double ratio = static_cast<double>(total) / static_cast<double>(sphere_sum);
    CHECK(ratio >= 0.5 / static_cast<double>(s.order()));
    CHECK(ratio <= 2.0 / static_cast<double>(s.order()));
  }
}

TEST_CASE("closed-form evaluation") {
  CHECK(std::abs(evaluate_F(LensSpace(7, {1, 2}), std::complex<double>(0.0)) - 1.0) < 1e-12);
  CHECK(std::abs(evaluate_F(kSphere, std::complex<double>(0.5)) - 12.0) < 1e-12);

  const LensSpace l7(7, {1, 2});
  const GeneratingFunction gf = generating_function(l7);
  const std::complex<double> z(0.3, 0.0);
  CHECK(std::abs(evaluate_F(l7, z) - gf.evaluate(z)) <= 1e-9 * std::abs(gf.evaluate(z)));

  for (Int padding = 0; padding <= 1; ++padding)
    for (const LensSpace& s : enumerate(2, 15, 2, padding)) {
      const GeneratingFunction g = generating_function(s);
      for (const std::complex<double> w : {std::complex<double>(0.5, 0.0), std::complex<double>(-0.3, 0.35),
                                           std::complex<double>(0.1, -0.45)}) {
        const auto exact = g.evaluate(w);
        CHECK(std::abs(evaluate_F(s, w) - exact) <= 1e-9 * std::abs(exact));
      }
    }
  CHECK(kind_of([&] { evaluate_F(l7, std::complex<double>(1.0, 0.0)); }) == ErrorKind::PoleEvaluation);
  CHECK(kind_of([&] { evaluate_F(l7, root_of_unity(3, 7)); }) == ErrorKind::PoleEvaluation);
}

TEST_CASE("residue of L(q:1,x) at primitive roots") {
  const LensSpace s(9, {1, 3});
  CHECK(std::abs(residue_case3(s, 8) - std::conj(residue_case3(s, 1))) < 1e-12);

  for (const auto& [q, x] : std::vector<std::pair<Int, Int>>{{9, 3}, {12, 2}, {12, 3}, {15, 5}, {30, 6}, {16, 4}}) {
    const LensSpace t(q, {1, x});
    for (Int j : units_mod(q)) {
      const oracle::Complex pole = std::polar(1.0L, 2 * oracle::kPi * j / q);
      const auto limit = oracle::numeric_limit([&](oracle::Complex z) { return F_oracle(t, z); }, pole);
      const auto closed = residue_case3(t, j);
      CHECK(std::abs(std::complex<double>(limit) - closed) < 1e-8);
    }
  }
  CHECK(kind_of([] { residue_case3(LensSpace(7, {1, 2})); }) == ErrorKind::PreconditionViolated);
  CHECK(kind_of([] { residue_case3(LensSpace(9, {2, 3})); }) == ErrorKind::PreconditionViolated);
  CHECK(kind_of([] { residue_case3(LensSpace(9, {1, 3}), 3); }) == ErrorKind::PreconditionViolated);
}

TEST_CASE("cotangent-sum residue for every admissible L(q:x,s) with q <= 60") {
  const ResidueProfile p = residue_cot_sum(LensSpace(30, {2, 15}));
  CHECK(p.x == 2);
  CHECK(p.y == 15);
  CHECK(p.a.size() == 2);
  CHECK(std::abs(p.value) > 1e-10);

  int shapes = 0;
  for (Int q = 3; q <= 60; ++q)
    for (Int x : divisors(q)) {
      if (x <= 1 || x == q) continue;
      for (Int second = 1; second < q; ++second) {
        if (std::gcd(second, q) <= x || std::gcd(x, second) != 1) continue;
        const LensSpace s(q, {x, second});
        const ResidueProfile r = residue_cot_sum(s);
        CHECK(std::abs(r.value) > 1e-10);
        const oracle::Complex pole = std::polar(1.0L, 2 * oracle::kPi * x / q);
        const auto limit = oracle::numeric_limit([&](oracle::Complex z) { return F_oracle(s, z); }, pole);
        CHECK_MESSAGE(std::abs(std::complex<double>(limit) - r.value) < 1e-6, s.to_string());
        ++shapes;
      }
    }
  CHECK(shapes > 100);

  CHECK(kind_of([] { residue_cot_sum(LensSpace(7, {1, 2})); }) == ErrorKind::PreconditionViolated);
  CHECK(kind_of([] { residue_cot_sum(LensSpace(30, {2, 15}, 1)); }) == ErrorKind::PreconditionViolated);
}

TEST_CASE("pole orders") {
  for (const LensSpace& s : enumerate(1, 30, 2, 0)) {
    CHECK(pole_order(s, 1) == 3);
    CHECK(pole_order_exact(s, 1) == 3);
  }
  for (const LensSpace& s : enumerate(1, 20, 2, 1)) CHECK(pole_order_exact(s, 1) == 4);

  // L(9:1,3): order-3 elements g^{3m} have eigenvalues e^{±2πi m/3} (from
  // the rotation 1) and 1, 1 (from 3), so a primitive cube root occurs once.
  CHECK(pole_order(LensSpace(9, {1, 3}), 3) == 1);
  CHECK(pole_order_exact(LensSpace(9, {1, 3}), 3) == 1);
  for (Int q = 5; q <= 30; ++q) CHECK(pole_order(LensSpace(q, {1, 2}), q) == 1);
  CHECK(kind_of([] { pole_order(LensSpace(9, {1, 3}), 2); }) == ErrorKind::NotADivisor);
  CHECK(kind_of([] { pole_order_exact(LensSpace(9, {1, 3}), 4); }) == ErrorKind::NotADivisor);

  // The eigenvalue bound never undercounts, and it is exact whenever a pole
  // is present.
  for (Int padding = 0; padding <= 1; ++padding)
    for (const LensSpace& s : enumerate(2, 18, 2, padding))
      for (Int k : divisors(s.order())) {
        const Int bound = pole_order(s, k);
        const Int exact = pole_order_exact(s, k);
        CHECK(exact <= bound);
        if (exact >= 1) CHECK_MESSAGE(exact == bound, s.to_string(), " k=", k);
      }
}

TEST_CASE("order spectrum") {
  CHECK(order_spectrum(LensSpace(12, {1, 5})) == std::vector<Int>{1, 2, 3, 4, 6, 12});
  CHECK(order_spectrum(LensSpace(195, {3, 5})) == std::vector<Int>{1, 3, 5, 13, 15, 39, 65, 195});
  CHECK(order_spectrum(kSphere) == std::vector<Int>{1});
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(IntPolynomial::cyclotomic(1) == IntPolynomial({-1, 1}));
  CHECK(IntPolynomial::cyclotomic(6) == IntPolynomial({1, -1, 1}));
  CHECK(IntPolynomial::cyclotomic(12) == IntPolynomial({1, 0, -1, 0, 1}));
  IntPolynomial product({1});
  for (Int d : divisors(30)) product = product * IntPolynomial::cyclotomic(d);
  CHECK(product == IntPolynomial::monomial(1, 30) - IntPolynomial({1}));
}
