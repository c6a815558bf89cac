#pragma once

#include <complex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lensspec/arith.hpp"

namespace lensspec {

/// Dense polynomial with 64-bit integer coefficients; arithmetic throws
/// std::overflow_error instead of wrapping. Trailing zero coefficients are
/// trimmed, so the zero polynomial has no coefficients.
class IntPolynomial {
public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> coefficients);

  /// Sum of coeff * z^exponent terms.
  static IntPolynomial monomial(Int coeff, std::size_t exponent);
  /// 1 - z^q raised to `power`.
  static IntPolynomial one_minus_zq_pow(Int q, Int power);
  /// k-th cyclotomic polynomial.
  static IntPolynomial cyclotomic(Int k);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree, -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  Int coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
  std::span<const Int> coefficients() const noexcept { return coeffs_; }

  Int evaluate(Int z) const;
  std::complex<double> evaluate(std::complex<double> z) const;

  /// Product truncated to terms of degree <= max_degree.
  IntPolynomial truncated_product(const IntPolynomial& other, std::size_t max_degree) const;

  /// Quotient and remainder on division by a monic polynomial.
  std::pair<IntPolynomial, IntPolynomial> divmod_monic(const IntPolynomial& divisor) const;

  std::string to_string() const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
  void trim();
  std::vector<Int> coeffs_;
};

}  // namespace lensspec
