#include "lensspec/lens_space.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lensspec {

LensSpace::LensSpace(Int q, std::vector<Int> rotations, Int padding)
    : q_(q), rotations_(std::move(rotations)), padding_(padding) {
  if (q_ <= 0) throw LensError(ErrorKind::InvalidOrder, "group order must be positive, got " + std::to_string(q_));
  if (rotations_.empty()) throw LensError(ErrorKind::PreconditionViolated, "at least one rotation is required");
  if (padding_ < 0) throw LensError(ErrorKind::PreconditionViolated, "padding must be non-negative");
  if (q_ == 1) {
    for (Int p : rotations_)
      if (p != 0) throw LensError(ErrorKind::PreconditionViolated, "rotations of the trivial group are stored as 0");
    return;
  }
  Int g = q_;
  for (Int p : rotations_) {
    if (p == 0) throw LensError(ErrorKind::ZeroRotation, "rotation 0 must be expressed as padding");
    if (p < 1 || p >= q_)
      throw LensError(ErrorKind::PreconditionViolated, "rotation " + std::to_string(p) + " outside [1, q-1]");
    g = std::gcd(g, p);
  }
  if (g != 1) throw LensError(ErrorKind::PreconditionViolated, "descriptor is not reduced (common gcd " + std::to_string(g) + ")");
}

bool LensSpace::is_manifold() const {
  if (padding_ > 0 && q_ > 1) return false;
  return std::all_of(rotations_.begin(), rotations_.end(), [&](Int p) { return std::gcd(p, q_) == 1; });
}

std::string LensSpace::to_string() const {
  std::ostringstream os;
  os << "L(" << q_ << ':';
  for (std::size_t i = 0; i < rotations_.size(); ++i) os << (i ? "," : "") << rotations_[i];
  for (Int w = 0; w < padding_; ++w) os << ",0";
  os << ')';
  return os.str();
}

LensSpace reduce(Int q, std::span<const Int> raw, Int padding) {
  if (q <= 0) throw LensError(ErrorKind::InvalidOrder, "group order must be positive, got " + std::to_string(q));
  if (raw.empty()) throw LensError(ErrorKind::PreconditionViolated, "at least one rotation is required");
  Int g = q;
  for (Int p : raw) g = std::gcd(g, p < 0 ? -p : p);
  const Int reduced_q = q / g;
  std::vector<Int> rotations;
  rotations.reserve(raw.size());
  for (Int p : raw) {
    const Int r = mod(p / g, reduced_q);
    if (r == 0 && reduced_q > 1)
      throw LensError(ErrorKind::ZeroRotation,
                      "rotation " + std::to_string(p) + " vanishes modulo " + std::to_string(reduced_q) +
                          "; model it as padding");
    rotations.push_back(r);
  }
  return LensSpace(reduced_q, std::move(rotations), padding);
}

namespace {

void require_same_shape(const LensSpace& a, const LensSpace& b) {
  if (a.rank() != b.rank() || a.padding() != b.padding())
    throw LensError(ErrorKind::DimensionMismatch, a.to_string() + " vs " + b.to_string());
}

}  // namespace

bool verify_witness(const LensSpace& first, const LensSpace& second, const IsometryWitness& w) {
  const Int q = first.order();
  if (q != second.order() || first.rank() != second.rank()) return false;
  const std::size_t n = first.rank();
  if (w.signs.size() != n || w.permutation.size() != n || std::gcd(w.l, q) != 1) return false;
  std::vector<bool> used(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = w.permutation[i];
    if (j >= n || used[j]) return false;
    used[j] = true;
    if (w.signs[i] != 1 && w.signs[i] != -1) return false;
    if (mod(w.signs[i] * w.l * first.rotation(i) - second.rotation(j), q) != 0) return false;
  }
  return true;
}

std::optional<IsometryWitness> is_isometric(const LensSpace& first, const LensSpace& second) {
  require_same_shape(first, second);
  const Int q = first.order();
  if (q != second.order()) return std::nullopt;
  const std::size_t n = first.rank();

  std::vector<std::size_t> perm(n);
  for (Int l : units_mod(q)) {
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    do {
      IsometryWitness w{l, std::vector<int>(n, 1), perm};
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) {
        const Int image = mod(l * first.rotation(i), q);
        const Int target = second.rotation(perm[i]);
        if (image == target) {
          w.signs[i] = 1;
        } else if (mod(-image, q) == target) {
          w.signs[i] = -1;
        } else {
          ok = false;
        }
      }
      if (ok) return w;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return std::nullopt;
}

LensSpace canonical_form(const LensSpace& space) {
  const Int q = space.order();
  if (q == 1) return space;
  // Signs act independently on each entry, so the minimum over sign patterns
  // and permutations for a fixed l is the sorted vector of per-entry minima.
  std::vector<Int> best;
  std::vector<Int> candidate(space.rank());
  for (Int l : units_mod(q)) {
    for (std::size_t i = 0; i < space.rank(); ++i) {
      const Int r = mod(l * space.rotation(i), q);
      candidate[i] = std::min(r, q - r);
    }
    std::sort(candidate.begin(), candidate.end());
    if (best.empty() || candidate < best) best = candidate;
  }
  return LensSpace(q, std::move(best), space.padding());
}

SingularDecomposition decompose_singular(const LensSpace& space) {
  if (space.rank() != 2)
    throw LensError(ErrorKind::UnsupportedRank, "singular decomposition needs two rotations, got " +
                                                    std::to_string(space.rank()));
  const Int q = space.order();
  SingularDecomposition d;
  d.q1 = std::gcd(space.rotation(0), q);
  d.q2 = std::gcd(space.rotation(1), q);
  d.alpha_hat = q / d.q1;
  d.beta_hat = q / d.q2;
  d.g = std::gcd(d.alpha_hat, d.beta_hat);
  d.alpha = d.alpha_hat / d.g;
  d.beta = d.beta_hat / d.g;
  return d;
}

LensSpace pad(const LensSpace& space, Int extra) {
  if (extra < 1) throw LensError(ErrorKind::PreconditionViolated, "padding increment must be positive");
  return LensSpace(space.order(), std::vector<Int>(space.rotations().begin(), space.rotations().end()),
                   space.padding() + extra);
}

}  // namespace lensspec
