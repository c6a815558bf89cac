#include "lensspec/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace lensspec {

IntPolynomial::IntPolynomial(std::vector<Int> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::monomial(Int coeff, std::size_t exponent) {
  std::vector<Int> c(exponent + 1, 0);
  c[exponent] = coeff;
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::one_minus_zq_pow(Int q, Int power) {
  std::vector<Int> c(static_cast<std::size_t>(q * power) + 1, 0);
  for (Int j = 0; j <= power; ++j) {
    const Int b = binomial(power, j);
    c[static_cast<std::size_t>(q * j)] = (j % 2 == 0) ? b : -b;
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::cyclotomic(Int k) {
  if (k < 1) throw std::invalid_argument("cyclotomic index must be positive");
  // z^k - 1 = prod_{d | k} Phi_d(z): divide out every proper divisor.
  IntPolynomial result = monomial(1, static_cast<std::size_t>(k)) - IntPolynomial({1});
  for (Int d : divisors(k)) {
    if (d == k) continue;
    auto [quotient, remainder] = result.divmod_monic(cyclotomic(d));
    if (!remainder.is_zero()) throw std::logic_error("cyclotomic division left a remainder");
    result = std::move(quotient);
  }
  return result;
}

Int IntPolynomial::evaluate(Int z) const {
  Int acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = checked_add(checked_mul(acc, z), *it);
  return acc;
}

std::complex<double> IntPolynomial::evaluate(std::complex<double> z) const {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + static_cast<double>(*it);
  return acc;
}

IntPolynomial IntPolynomial::truncated_product(const IntPolynomial& other, std::size_t max_degree) const {
  if (is_zero() || other.is_zero()) return {};
  const std::size_t full = coeffs_.size() + other.coeffs_.size() - 1;
  std::vector<Int> c(std::min(full, max_degree + 1), 0);
  for (std::size_t i = 0; i < coeffs_.size() && i < c.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size() && i + j < c.size(); ++j)
      c[i + j] = checked_add(c[i + j], checked_mul(coeffs_[i], other.coeffs_[j]));
  }
  return IntPolynomial(std::move(c));
}

std::pair<IntPolynomial, IntPolynomial> IntPolynomial::divmod_monic(const IntPolynomial& divisor) const {
  if (divisor.is_zero() || divisor.coeffs_.back() != 1) throw std::invalid_argument("divisor must be monic");
  if (degree() < divisor.degree()) return {IntPolynomial{}, *this};
  std::vector<Int> rem = coeffs_;
  const std::size_t dd = divisor.coeffs_.size() - 1;
  std::vector<Int> quot(rem.size() - dd, 0);
  for (std::size_t i = rem.size(); i-- > dd;) {
    const Int lead = rem[i];
    if (lead == 0) continue;
    quot[i - dd] = lead;
    for (std::size_t j = 0; j <= dd; ++j)
      rem[i - dd + j] = checked_add(rem[i - dd + j], -checked_mul(lead, divisor.coeffs_[j]));
  }
  rem.resize(dd);
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Int c = coeffs_[i];
    if (c == 0) continue;
    const Int mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || i == 0) os << mag;
    if (i > 0) os << (mag != 1 ? "*" : "") << 'z';
    if (i > 1) os << '^' << i;
    first = false;
  }
  return os.str();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Int> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_add(a.coeff(i), b.coeff(i));
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Int> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_add(a.coeff(i), -b.coeff(i));
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return a.truncated_product(b, a.coeffs_.size() + b.coeffs_.size());
}

}  // namespace lensspec
