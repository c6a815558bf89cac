#pragma once

#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "lensspec/lens_space.hpp"

namespace lensspec {

using Rational = boost::rational<Int>;

/// "num/den", or just "num" when den = 1.
std::string to_string(const Rational& r);
/// Inverse of to_string; throws std::invalid_argument on malformed text.
Rational parse_rational(const std::string& text);
double to_double(const Rational& r);

/// An exact real number inv_pi / pi + sqrt_pi * sqrt(pi).
struct HeatCoefficient {
  Rational inv_pi{0};
  Rational sqrt_pi{0};

  double value() const;
  /// e.g. "1/6240 · 1/π + 28/45 · √π"; "0" when both parts vanish.
  std::string to_string() const;

  friend bool operator==(const HeatCoefficient&, const HeatCoefficient&) = default;
};

struct HeatTerm {
  /// Half-integer power of t.
  Rational exponent{0};
  HeatCoefficient coefficient;
  bool exact = true;

  friend bool operator==(const HeatTerm&, const HeatTerm&) = default;
};

/// Curvature data of the round sphere at the fixed-set representative point,
/// in the normal coordinates along the fixed circle.
struct CurvatureContext {
  Int sphere_dimension = 3;
  Rational r1313{1};
  Rational r2323{1};
  Rational scalar{6};
  std::vector<Rational> ricci;
  /// Keep the curvature factor R1313 + R2323 symbolic in rendered output.
  bool symbolic = false;

  Rational curvature_sum() const { return r1313 + r2323; }

  /// S^3 at psi = theta = pi/2.
  static CurvatureContext three_sphere();
  /// S^4 at psi = theta = phi = pi/2.
  static CurvatureContext four_sphere();
};

struct Sphere3Curvature {
  double r1212, r1313, r2323;
  double ricci_psi, ricci_theta, ricci_phi;
  double scalar;
};

/// Curvature components of S^3 in (psi, theta, phi) coordinates; the scalar
/// curvature is the metric trace and is 6 everywhere.
Sphere3Curvature sphere3_curvature(double psi, double theta);

/// sum_{r=1}^{m-1} csc^2(pi r / m) = (m^2 - 1) / 3.
Rational csc2_sum(Int m);
/// sum_{r=1}^{m-1} csc^4(pi r / m) = (m^4 + 10 m^2 - 11) / 45.
Rational csc4_sum(Int m);
/// Direct trigonometric sums, for cross-checks.
double csc2_sum_direct(Int m);
double csc4_sum_direct(Int m);

/// (I - A)^{-1} for the normal action of a plane rotation by 2 pi w r / m.
struct DonnellyMatrix {
  /// entries[i][j]; diagonal 1/2, off-diagonal -/+ cot(pi w r / m) / 2.
  double entries[2][2];
  /// w r / m, the rotation half-angle in units of pi.
  Rational angle_over_pi{0};
  double abs_det;
};

DonnellyMatrix donnelly_B_matrix(Int m, Int r, Int w);

/// Contribution of one singular stratum with isotropy order m.
struct StratumTerm {
  std::string label;
  Int isotropy_order = 1;
  Rational b0{0};
  Rational b1{0};
  /// Term-by-term trig evaluation of the same sums with rotation weight w.
  double b0_trig = 0.0;
  double b1_trig = 0.0;
};

StratumTerm stratum_b01(Int m, const CurvatureContext& ctx, Int weight = 1);

struct HeatExpansion {
  LensSpace space;
  std::vector<HeatTerm> terms;
  std::vector<StratumTerm> strata;
  Int requested_order = 3;
  /// True when fewer terms than requested could be produced.
  bool truncated = false;
};

/// Small-t expansion of the heat trace of L(q : p1, p2) (rank 2, no padding).
/// Orbifolds yield at most the exponents -3/2, -1/2, 1/2; manifolds (no
/// singular strata) yield every requested term.
HeatExpansion heat_expansion_3d(const LensSpace& space, Int order = 3,
                                const CurvatureContext& ctx = CurvatureContext::three_sphere());

/// Rotation classes of the group elements that fix only the padded axis
/// (every rotation angle nonzero). Each entry lists min(l p_i, q - l p_i)
/// sorted, one entry per element, entries sorted. Empty when W = 0.
std::vector<std::vector<Int>> isolated_fixed_point_classes(const LensSpace& space);

/// t^0 coefficient contributed by those elements on S^4 (two fixed poles):
/// (2 / q) sum 1 / |det(I - A_g)|. Zero when W = 0.
double isolated_fixed_point_b0(const LensSpace& space);

enum class HeatVerdict { GuaranteedEqual, Unknown };

std::string_view to_string(HeatVerdict v) noexcept;

/// Sufficient test for identical heat-trace expansions of same-order rank-2
/// spaces with padding 0 (3D) or 1 (4D). Never claims inequality.
///
/// Non-isometric pairs need p1 != +-p2 and matching {alpha, beta}. In 4D the
/// elements fixing only the poles contribute from t^0 on, so their rotation
/// classes must coincide as well.
HeatVerdict same_heat_expansion(const LensSpace& first, const LensSpace& second);

}  // namespace lensspec
