#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "lensspec/lens_space.hpp"
#include "lensspec/polynomial.hpp"

namespace lensspec {

struct SpectrumRow {
  Int k = 0;
  Int eigenvalue = 0;
  Int multiplicity = 0;

  friend bool operator==(const SpectrumRow&, const SpectrumRow&) = default;
};

/// Rows k = 0..kmax of the Laplace spectrum, zero multiplicities included.
struct SpectrumTable {
  std::vector<SpectrumRow> rows;

  friend bool operator==(const SpectrumTable&, const SpectrumTable&) = default;
};

/// N(z) / (1 - z^q)^{2n}; its Taylor coefficients are the multiplicities.
struct GeneratingFunction {
  IntPolynomial numerator;
  Int q = 1;
  Int n = 0;
  Int padding = 0;

  Int denominator_exponent() const noexcept { return 2 * n; }
  /// Taylor coefficients 0..kmax by exact series division.
  std::vector<Int> taylor(Int kmax) const;
  std::complex<double> evaluate(std::complex<double> z) const;
};

/// Harmonic degree k carries eigenvalue k(k + d - 1) on S^d.
Int eigenvalue(const LensSpace& space, Int k);

/// Number of invariant monomials of each total degree 0..max_degree:
/// exponent tuples over z_i, conj(z_i) and the padded real coordinates with
/// sum_i p_i (a_i - b_i) == 0 (mod q).
std::vector<Int> invariant_monomial_counts(const LensSpace& space, Int max_degree);

/// dim of G-invariant harmonic polynomials of degree k, for all k <= kmax.
std::vector<Int> multiplicities(const LensSpace& space, Int kmax);
Int multiplicity(const LensSpace& space, Int k);

SpectrumTable spectrum_table(const LensSpace& space, Int kmax);

/// Exact rational generating function; padding must be 0 or 1.
GeneratingFunction generating_function(const LensSpace& space);

/// Number of Taylor coefficients that decide isospectrality: 2nq + 2.
Int isospectrality_bound(const LensSpace& space);

enum class IsospectralReason { Equal, GroupOrdersDiffer, MultiplicityDiffers };

struct IsospectralVerdict {
  bool isospectral = false;
  IsospectralReason reason = IsospectralReason::Equal;
  /// Smallest k with differing multiplicity, when one was computed.
  std::optional<Int> first_difference;
};

IsospectralVerdict is_isospectral(const LensSpace& first, const LensSpace& second);

/// Compares two precomputed multiplicity sequences (same length).
std::optional<Int> first_difference(const std::vector<Int>& a, const std::vector<Int>& b);

/// Closed-form finite sum over the group; valid off the unit-circle poles.
/// Throws PoleEvaluation when z is within 1e-13 of a pole factor.
std::complex<double> evaluate_F(const LensSpace& space, std::complex<double> z);
std::complex<long double> evaluate_F(const LensSpace& space, std::complex<long double> z);

/// e^{2 pi i e / q}, reduced exactly before the trig call.
std::complex<double> root_of_unity(Int e, Int q);

struct ResidueProfile {
  Int x = 0;
  Int y = 0;
  std::vector<Int> a;
  std::vector<Int> b;
  /// Residue of F at gamma^x.
  std::complex<double> value;
};

/// Residue at gamma^x for L(q : x, p*y) with 1 < x | q, gcd(second, q) = y > x
/// and gcd(x, second) = 1, as a cotangent sum.
ResidueProfile residue_cot_sum(const LensSpace& space);

/// Residue at gamma^j (gcd(j, q) = 1) for L(q : 1, x) with gcd(x, q) > 1.
std::complex<double> residue_case3(const LensSpace& space, Int j = 1);

/// Pole order at a primitive k-th root of unity from the eigenvalue data of
/// the group elements. Throws NotADivisor unless k | q.
Int pole_order(const LensSpace& space, Int k);

/// The same quantity read off exactly from the cyclotomic factorisation of the
/// generating-function numerator. Non-positive values mean no pole (a zero of
/// that order).
Int pole_order_exact(const LensSpace& space, Int k);

/// Element orders of the cyclic group: the divisors of q.
std::vector<Int> order_spectrum(const LensSpace& space);

}  // namespace lensspec
