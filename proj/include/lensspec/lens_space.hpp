#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lensspec/arith.hpp"
#include "lensspec/error.hpp"

namespace lensspec {

/// Quotient of S^{2n+W-1} by the cyclic group of order q generated by the
/// block rotation diag(R(p_1/q), ..., R(p_n/q), I_W).
///
/// Instances are always reduced: gcd(p_1, ..., p_n, q) = 1 and every p_i lies
/// in [1, q-1]. The trivial group q = 1 is the single exception to the range
/// rule; its rotations are stored as 0, the only residue mod 1.
class LensSpace {
public:
  /// Validates an already reduced descriptor. Use `reduce` for raw input.
  LensSpace(Int q, std::vector<Int> rotations, Int padding = 0);

  Int order() const noexcept { return q_; }
  std::span<const Int> rotations() const noexcept { return rotations_; }
  Int rotation(std::size_t i) const { return rotations_.at(i); }
  std::size_t rank() const noexcept { return rotations_.size(); }
  Int padding() const noexcept { return padding_; }

  /// Dimension d of the covering sphere S^d.
  Int sphere_dimension() const noexcept { return 2 * static_cast<Int>(rank()) + padding_ - 1; }

  bool is_manifold() const;

  /// "L(q:p1,...,pn)" with one trailing 0 per padded coordinate.
  std::string to_string() const;

  friend bool operator==(const LensSpace&, const LensSpace&) = default;
  friend auto operator<=>(const LensSpace&, const LensSpace&) = default;

private:
  Int q_;
  std::vector<Int> rotations_;
  Int padding_;
};

/// Proof object for an isometry: sign[i] * l * first.rotation(i) is congruent
/// to second.rotation(permutation[i]) modulo q.
struct IsometryWitness {
  Int l = 1;
  std::vector<int> signs;
  std::vector<std::size_t> permutation;

  friend bool operator==(const IsometryWitness&, const IsometryWitness&) = default;
};

struct SingularDecomposition {
  Int q1 = 1;
  Int q2 = 1;
  Int alpha_hat = 1;
  Int beta_hat = 1;
  Int g = 1;
  Int alpha = 1;
  Int beta = 1;

  friend bool operator==(const SingularDecomposition&, const SingularDecomposition&) = default;
};

/// Divides out gcd(raw..., q) and reduces every entry into [1, q-1].
/// Throws InvalidOrder for q <= 0 and ZeroRotation for an entry that is 0
/// modulo the reduced order (such a coordinate pair must be modelled as padding).
LensSpace reduce(Int q, std::span<const Int> raw, Int padding = 0);

/// Exhaustive search over units l, sign vectors and permutations.
/// Returns std::nullopt when the orders differ. Throws DimensionMismatch when
/// rank or padding differ.
std::optional<IsometryWitness> is_isometric(const LensSpace& first, const LensSpace& second);

/// True when `witness` maps the rotations of `first` onto those of `second`.
bool verify_witness(const LensSpace& first, const LensSpace& second, const IsometryWitness& witness);

/// Lexicographically smallest sorted rotation vector over the whole isometry
/// orbit. Two spaces are isometric iff their canonical forms coincide.
LensSpace canonical_form(const LensSpace& space);

/// gcd structure of the two rotation numerators (rank 2 only).
SingularDecomposition decompose_singular(const LensSpace& space);

/// Appends `extra` fixed coordinates (extra >= 1).
LensSpace pad(const LensSpace& space, Int extra);

}  // namespace lensspec
