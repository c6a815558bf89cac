#include "lensspec/heat.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "lensspec/spectrum.hpp"

namespace lensspec {

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(const std::string& text) {
  std::size_t pos = 0;
  const auto slash = text.find('/');
  try {
    const Int num = std::stoll(text.substr(0, slash), &pos);
    if (pos != (slash == std::string::npos ? text.size() : slash)) throw std::invalid_argument("trailing characters");
    if (slash == std::string::npos) return Rational(num);
    const std::string den_text = text.substr(slash + 1);
    const Int den = std::stoll(den_text, &pos);
    if (pos != den_text.size() || den == 0) throw std::invalid_argument("bad denominator");
    return Rational(num, den);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("malformed rational '" + text + "'");
  }
}

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

double HeatCoefficient::value() const {
  return to_double(inv_pi) / std::numbers::pi + to_double(sqrt_pi) * std::sqrt(std::numbers::pi);
}

std::string HeatCoefficient::to_string() const {
  std::string out;
  if (inv_pi.numerator() != 0) out = lensspec::to_string(inv_pi) + " · 1/π";
  if (sqrt_pi.numerator() != 0) {
    if (!out.empty()) out += sqrt_pi.numerator() < 0 ? " - " : " + ";
    else if (sqrt_pi.numerator() < 0) out += "-";
    out += lensspec::to_string(sqrt_pi.numerator() < 0 ? -sqrt_pi : sqrt_pi) + " · √π";
  }
  return out.empty() ? "0" : out;
}

CurvatureContext CurvatureContext::three_sphere() {
  CurvatureContext ctx;
  ctx.sphere_dimension = 3;
  ctx.r1313 = 1;
  ctx.r2323 = 1;
  ctx.scalar = 6;
  ctx.ricci = {Rational(2), Rational(2), Rational(2)};
  return ctx;
}

CurvatureContext CurvatureContext::four_sphere() {
  CurvatureContext ctx;
  ctx.sphere_dimension = 4;
  ctx.r1313 = 1;
  ctx.r2323 = 1;
  ctx.scalar = 12;
  ctx.ricci = {Rational(3), Rational(3), Rational(3), Rational(3)};
  return ctx;
}

Sphere3Curvature sphere3_curvature(double psi, double theta) {
  const double s_psi = std::sin(psi);
  const double s_theta = std::sin(theta);
  Sphere3Curvature c{};
  c.r1212 = s_psi * s_psi;
  c.r1313 = s_psi * s_psi * s_theta * s_theta;
  c.r2323 = s_psi * s_psi * s_psi * s_psi * s_theta * s_theta;
  c.ricci_psi = 2.0;
  c.ricci_theta = 2.0 * s_psi * s_psi;
  c.ricci_phi = 2.0 * s_psi * s_psi * s_theta * s_theta;
  // g^{psi psi} = 1, g^{theta theta} = 1/sin^2 psi, g^{phi phi} = 1/(sin^2 psi sin^2 theta)
  c.scalar = c.ricci_psi + c.ricci_theta / (s_psi * s_psi) + c.ricci_phi / (s_psi * s_psi * s_theta * s_theta);
  return c;
}

namespace {

void require_positive(Int m) {
  if (m < 1) throw LensError(ErrorKind::PreconditionViolated, "isotropy order must be positive");
}

double sin_pi_ratio(Int num, Int den) {
  return std::sin(std::numbers::pi * static_cast<double>(mod(num, 2 * den)) / static_cast<double>(den));
}

}  // namespace

Rational csc2_sum(Int m) {
  require_positive(m);
  return Rational(m * m - 1, 3);
}

Rational csc4_sum(Int m) {
  require_positive(m);
  return Rational(checked_add(checked_mul(m * m, m * m), 10 * m * m - 11), 45);
}

double csc2_sum_direct(Int m) {
  require_positive(m);
  double s = 0.0;
  for (Int r = 1; r < m; ++r) {
    const double v = sin_pi_ratio(r, m);
    s += 1.0 / (v * v);
  }
  return s;
}

double csc4_sum_direct(Int m) {
  require_positive(m);
  double s = 0.0;
  for (Int r = 1; r < m; ++r) {
    const double v = sin_pi_ratio(r, m);
    s += 1.0 / (v * v * v * v);
  }
  return s;
}

DonnellyMatrix donnelly_B_matrix(Int m, Int r, Int w) {
  if (m < 2 || r < 1 || r >= m)
    throw LensError(ErrorKind::PreconditionViolated, "need m >= 2 and 1 <= r <= m - 1");
  if (mod(w * r, m) == 0) throw LensError(ErrorKind::SingularRotation, "rotation by a multiple of 2π has no normal inverse");
  if (std::gcd(w, m) != 1) throw LensError(ErrorKind::PreconditionViolated, "weight must be coprime to the isotropy order");
  const Int wr = mod(w * r, 2 * m);
  const double theta = std::numbers::pi * static_cast<double>(wr) / static_cast<double>(m);
  const double cot = std::cos(theta) / std::sin(theta);
  const double s = std::sin(theta);
  DonnellyMatrix b{};
  b.entries[0][0] = 0.5;
  b.entries[0][1] = -0.5 * cot;
  b.entries[1][0] = 0.5 * cot;
  b.entries[1][1] = 0.5;
  b.angle_over_pi = Rational(wr, m);
  b.abs_det = 1.0 / (4.0 * s * s);
  return b;
}

StratumTerm stratum_b01(Int m, const CurvatureContext& ctx, Int weight) {
  if (m < 2) throw LensError(ErrorKind::PreconditionViolated, "a singular stratum has isotropy order >= 2");
  StratumTerm term;
  term.isotropy_order = m;
  const Int m2 = m * m;
  term.b0 = Rational(m2 - 1, 12);
  term.b1 = -ctx.curvature_sum() * Rational(checked_mul(m2 - 29, m2 - 1), 720);

  const double curvature = to_double(ctx.curvature_sum());
  for (Int r = 1; r < m; ++r) {
    const DonnellyMatrix b = donnelly_B_matrix(m, r, weight);
    const double csc2 = 4.0 * b.abs_det;
    term.b0_trig += b.abs_det;
    term.b1_trig += curvature * (csc2 / 6.0 - csc2 * csc2 / 16.0);
  }
  return term;
}

HeatExpansion heat_expansion_3d(const LensSpace& space, Int order, const CurvatureContext& ctx) {
  if (space.rank() != 2 || space.padding() != 0)
    throw LensError(ErrorKind::UnsupportedShape, "3D heat expansion needs L(q : p1, p2) without padding");
  if (order < 1) throw LensError(ErrorKind::PreconditionViolated, "order must be at least 1");

  const Int q = space.order();
  const SingularDecomposition d = decompose_singular(space);
  HeatExpansion out{space, {}, {}, order, false};

  // N_a is fixed by gamma^{alpha_hat} (isotropy beta, normal weight p2 * alpha);
  // N_b by gamma^{beta_hat} (isotropy alpha, normal weight p1 * beta).
  if (d.beta >= 2) {
    StratumTerm t = stratum_b01(d.beta, ctx, (space.rotation(1) / d.q2) * d.alpha);
    t.label = "N_a";
    out.strata.push_back(std::move(t));
  }
  if (d.alpha >= 2) {
    StratumTerm t = stratum_b01(d.alpha, ctx, (space.rotation(0) / d.q1) * d.beta);
    t.label = "N_b";
    out.strata.push_back(std::move(t));
  }

  Int available = order;
  if (!out.strata.empty() && order > 3) {
    available = 3;
    out.truncated = true;
  }

  // I_0 = t^{-3/2} e^t / (32 q pi) contributes 1 / (32 q pi j!) at t^{-3/2 + j}.
  Int factorial = 1;
  for (Int j = 0; j < available; ++j) {
    if (j > 0) factorial = checked_mul(factorial, j);
    HeatTerm term;
    term.exponent = Rational(2 * j - 3, 2);
    term.coefficient.inv_pi = Rational(1, checked_mul(32 * q, factorial));
    for (const StratumTerm& s : out.strata) {
      if (j == 1) term.coefficient.sqrt_pi += s.b0 / s.isotropy_order;
      if (j == 2) term.coefficient.sqrt_pi += s.b1 / s.isotropy_order;
    }
    out.terms.push_back(term);
  }
  return out;
}

std::vector<std::vector<Int>> isolated_fixed_point_classes(const LensSpace& space) {
  std::vector<std::vector<Int>> classes;
  if (space.padding() == 0) return classes;
  const Int q = space.order();
  for (Int l = 1; l < q; ++l) {
    std::vector<Int> angles;
    for (Int p : space.rotations()) {
      const Int v = mod(l * p, q);
      if (v == 0) break;
      angles.push_back(std::min(v, q - v));
    }
    if (angles.size() != space.rank()) continue;
    std::sort(angles.begin(), angles.end());
    classes.push_back(std::move(angles));
  }
  std::sort(classes.begin(), classes.end());
  return classes;
}

double isolated_fixed_point_b0(const LensSpace& space) {
  double sum = 0.0;
  for (const auto& angles : isolated_fixed_point_classes(space)) {
    // |1 - e^{i theta}|^2 = 4 sin^2(theta / 2)
    double det = 1.0;
    for (Int a : angles) {
      const double s = sin_pi_ratio(a, space.order());
      det *= 4.0 * s * s;
    }
    sum += 1.0 / det;
  }
  return 2.0 * sum / static_cast<double>(space.order());
}

std::string_view to_string(HeatVerdict v) noexcept {
  return v == HeatVerdict::GuaranteedEqual ? "GuaranteedEqual" : "Unknown";
}

HeatVerdict same_heat_expansion(const LensSpace& first, const LensSpace& second) {
  auto shape_ok = [](const LensSpace& s) { return s.rank() == 2 && (s.padding() == 0 || s.padding() == 1); };
  if (!shape_ok(first) || !shape_ok(second) || first.padding() != second.padding() || first.order() != second.order())
    throw LensError(ErrorKind::ShapeMismatch, first.to_string() + " vs " + second.to_string());

  if (is_isometric(first, second)) return HeatVerdict::GuaranteedEqual;

  const Int q = first.order();
  auto opposite_rotations = [q](const LensSpace& s) {
    return mod(s.rotation(0) - s.rotation(1), q) == 0 || mod(s.rotation(0) + s.rotation(1), q) == 0;
  };
  if (opposite_rotations(first) || opposite_rotations(second)) return HeatVerdict::Unknown;

  const SingularDecomposition a = decompose_singular(first);
  const SingularDecomposition b = decompose_singular(second);
  // Swapping the two rotations is an isometry that exchanges alpha and beta.
  const bool same = (a.alpha == b.alpha && a.beta == b.beta) || (a.alpha == b.beta && a.beta == b.alpha);
  if (!same) return HeatVerdict::Unknown;
  if (first.padding() == 1 && isolated_fixed_point_classes(first) != isolated_fixed_point_classes(second))
    return HeatVerdict::Unknown;
  return HeatVerdict::GuaranteedEqual;
}

}  // namespace lensspec
