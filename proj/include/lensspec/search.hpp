#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "lensspec/heat.hpp"
#include "lensspec/lens_space.hpp"

namespace lensspec {

struct PairReport {
  PairReport(LensSpace a, LensSpace b) : first(std::move(a)), second(std::move(b)) {}

  LensSpace first;
  LensSpace second;
  bool isometric = false;
  std::optional<IsometryWitness> witness;
  bool isospectral = false;
  std::optional<Int> first_difference;
  std::optional<HeatVerdict> heat;
};

struct QRecord {
  Int q = 0;
  Int classes = 0;
  Int pairs = 0;
  Int isospectral_pairs = 0;
  Int counterexamples = 0;
};

struct SweepSummary {
  Int qmin = 1;
  Int qmax = 1;
  Int n = 2;
  Int padding = 0;
  /// One space per isometry class, so this is also the class count.
  Int spaces = 0;
  Int pairs = 0;
  Int isospectral_pairs = 0;
  /// Isospectral non-isometric pairs with q >= 8.
  std::vector<PairReport> counterexamples;
  /// The same, for q < 8, where the rigidity argument does not apply.
  std::vector<PairReport> small_q_anomalies;
  Int spot_checks = 0;
  Int spot_check_failures = 0;
  std::vector<QRecord> per_q;
  double wall_ms = 0.0;
};

/// Smallest q covered by the rigidity argument.
inline constexpr Int kRigidityMinOrder = 8;

/// Spot re-verification depth for isometric pairs.
inline constexpr Int kSpotCheckDegree = 100;

/// One canonical representative per isometry class, ascending q then rotations.
/// Requires 1 <= qmin <= qmax, n = 2 and W in {0, 1} (PreconditionViolated).
std::vector<LensSpace> enumerate(Int qmin, Int qmax, Int n = 2, Int padding = 0);

/// Receives each finished q in ascending order, with its violating pairs.
using RigiditySink = std::function<void(const QRecord&, const std::vector<PairReport>&)>;
using PairSink = std::function<void(Int q, const std::vector<PairReport>&)>;

/// Compares every same-q pair of classes for isospectrality. Work is split per
/// q over `threads` workers; results do not depend on the thread count.
SweepSummary verify_rigidity(Int qmin, Int qmax, Int padding = 0, std::size_t threads = 1,
                             const RigiditySink& sink = {});

/// Same-q pairs with nontrivial singular strata whose heat expansions are
/// guaranteed equal although the spectra differ. Manifold pairs are skipped:
/// their expansions agree trivially.
std::vector<PairReport> find_heat_degenerate(Int qmin, Int qmax, Int padding = 0, std::size_t threads = 1,
                                             const PairSink& sink = {});

/// LENSSPEC_THREADS when set to a positive integer, else the hardware count.
std::size_t default_thread_count();

}  // namespace lensspec
