#include "lensspec/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <string>
#include <thread>

#include "lensspec/spectrum.hpp"

namespace lensspec {

namespace {

void check_range(Int qmin, Int qmax, Int n, Int padding) {
  if (qmin < 1 || qmin > qmax)
    throw LensError(ErrorKind::PreconditionViolated,
                    "need 1 <= qmin <= qmax, got " + std::to_string(qmin) + ".." + std::to_string(qmax));
  if (n != 2) throw LensError(ErrorKind::PreconditionViolated, "sweeps are implemented for n = 2 only");
  if (padding != 0 && padding != 1) throw LensError(ErrorKind::PreconditionViolated, "sweeps need W in {0, 1}");
}

std::vector<LensSpace> classes_for_order(Int q, Int padding) {
  std::vector<LensSpace> out;
  if (q == 1) {
    out.emplace_back(1, std::vector<Int>{0, 0}, padding);
    return out;
  }
  for (Int a = 1; a <= q / 2; ++a) {
    for (Int b = a; b <= q / 2; ++b) {
      if (std::gcd(std::gcd(a, b), q) != 1) continue;
      LensSpace space(q, {a, b}, padding);
      if (canonical_form(space) == space) out.push_back(std::move(space));
    }
  }
  return out;
}

// Runs task(i) for i in [0, count) on up to `threads` workers and calls
// emit(i) in ascending i as soon as every earlier slot is done. Each task
// writes only its own slot, so the output is independent of scheduling.
template <class Task, class Emit>
void parallel_for(std::size_t count, std::size_t threads, Task task, Emit emit) {
  threads = std::max<std::size_t>(1, std::min(threads, count));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) {
      task(i);
      emit(i);
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex mutex;
  std::exception_ptr failure;
  std::vector<char> done(count, 0);
  std::size_t emitted = 0;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          task(i);
          std::lock_guard lock(mutex);
          done[i] = 1;
          while (!failure && emitted < count && done[emitted]) emit(emitted++);
        } catch (...) {
          std::lock_guard lock(mutex);
          if (!failure) failure = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& worker : pool) worker.join();
  if (failure) std::rethrow_exception(failure);
}

// An isometric copy of `space` with different rotation labels.
LensSpace relabel(const LensSpace& space) {
  const Int q = space.order();
  if (q == 1) return space;
  const std::vector<Int> units = units_mod(q);
  const Int l = units[units.size() / 2];
  return LensSpace(q, {mod(l * space.rotation(1), q), mod(-l * space.rotation(0), q)}, space.padding());
}

struct OrderResult {
  QRecord record;
  std::vector<PairReport> violations;
  Int spot_checks = 0;
  Int spot_check_failures = 0;
};

OrderResult rigidity_for_order(Int q, Int padding) {
  OrderResult out;
  out.record.q = q;
  const std::vector<LensSpace> classes = classes_for_order(q, padding);
  out.record.classes = static_cast<Int>(classes.size());

  const Int bound = isospectrality_bound(classes.front());
  std::vector<std::vector<Int>> spectra;
  spectra.reserve(classes.size());
  for (const LensSpace& space : classes) spectra.push_back(multiplicities(space, std::max(bound, kSpotCheckDegree)));

  for (std::size_t i = 0; i < classes.size(); ++i) {
    const LensSpace copy = relabel(classes[i]);
    const auto witness = is_isometric(classes[i], copy);
    std::vector<Int> reference(spectra[i].begin(), spectra[i].begin() + kSpotCheckDegree + 1);
    ++out.spot_checks;
    if (!witness || !verify_witness(classes[i], copy, *witness) || multiplicities(copy, kSpotCheckDegree) != reference)
      ++out.spot_check_failures;
    spectra[i].resize(static_cast<std::size_t>(bound) + 1);
  }

  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      ++out.record.pairs;
      if (first_difference(spectra[i], spectra[j])) continue;
      ++out.record.isospectral_pairs;
      PairReport report(classes[i], classes[j]);
      report.isospectral = true;
      report.witness = is_isometric(classes[i], classes[j]);
      report.isometric = report.witness.has_value();
      if (!report.isometric) {
        ++out.record.counterexamples;
        out.violations.push_back(std::move(report));
      }
    }
  }
  return out;
}

std::vector<PairReport> heat_degenerate_for_order(Int q, Int padding) {
  std::vector<PairReport> out;
  const std::vector<LensSpace> classes = classes_for_order(q, padding);

  // Group candidates by {alpha, beta}; only equal keys can pass the predicate.
  std::map<std::pair<Int, Int>, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const LensSpace& s = classes[i];
    if (q < 3 || mod(s.rotation(0) - s.rotation(1), q) == 0 || mod(s.rotation(0) + s.rotation(1), q) == 0) continue;
    const SingularDecomposition d = decompose_singular(s);
    if (d.alpha * d.beta == 1) continue;
    buckets[{std::min(d.alpha, d.beta), std::max(d.alpha, d.beta)}].push_back(i);
  }

  std::vector<std::optional<std::vector<Int>>> spectra(classes.size());
  auto spectrum_of = [&](std::size_t i) -> const std::vector<Int>& {
    if (!spectra[i]) spectra[i] = multiplicities(classes[i], isospectrality_bound(classes[i]));
    return *spectra[i];
  };

  std::vector<std::pair<std::size_t, std::size_t>> hits;
  for (const auto& [key, members] : buckets) {
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        hits.emplace_back(std::min(members[a], members[b]), std::max(members[a], members[b]));
      }
    }
  }
  std::sort(hits.begin(), hits.end());

  for (const auto& [i, j] : hits) {
    const HeatVerdict verdict = same_heat_expansion(classes[i], classes[j]);
    if (verdict != HeatVerdict::GuaranteedEqual) continue;
    const auto diff = first_difference(spectrum_of(i), spectrum_of(j));
    if (!diff) continue;
    PairReport report(classes[i], classes[j]);
    report.isospectral = false;
    report.first_difference = diff;
    report.heat = verdict;
    out.push_back(std::move(report));
  }
  return out;
}

}  // namespace

std::vector<LensSpace> enumerate(Int qmin, Int qmax, Int n, Int padding) {
  check_range(qmin, qmax, n, padding);
  std::vector<LensSpace> out;
  for (Int q = qmin; q <= qmax; ++q) {
    auto classes = classes_for_order(q, padding);
    out.insert(out.end(), std::make_move_iterator(classes.begin()), std::make_move_iterator(classes.end()));
  }
  return out;
}

SweepSummary verify_rigidity(Int qmin, Int qmax, Int padding, std::size_t threads, const RigiditySink& sink) {
  check_range(qmin, qmax, 2, padding);
  const auto start = std::chrono::steady_clock::now();

  const std::size_t count = static_cast<std::size_t>(qmax - qmin + 1);
  std::vector<OrderResult> results(count);
  parallel_for(
      count, threads, [&](std::size_t i) { results[i] = rigidity_for_order(qmin + static_cast<Int>(i), padding); },
      [&](std::size_t i) {
        if (sink) sink(results[i].record, results[i].violations);
      });

  SweepSummary summary;
  summary.qmin = qmin;
  summary.qmax = qmax;
  summary.padding = padding;
  for (OrderResult& r : results) {
    summary.spaces += r.record.classes;
    summary.pairs += r.record.pairs;
    summary.isospectral_pairs += r.record.isospectral_pairs;
    summary.spot_checks += r.spot_checks;
    summary.spot_check_failures += r.spot_check_failures;
    auto& sink = r.record.q >= kRigidityMinOrder ? summary.counterexamples : summary.small_q_anomalies;
    for (PairReport& p : r.violations) sink.push_back(std::move(p));
    summary.per_q.push_back(r.record);
  }
  summary.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

std::vector<PairReport> find_heat_degenerate(Int qmin, Int qmax, Int padding, std::size_t threads,
                                             const PairSink& sink) {
  check_range(qmin, qmax, 2, padding);
  const std::size_t count = static_cast<std::size_t>(qmax - qmin + 1);
  std::vector<std::vector<PairReport>> results(count);
  parallel_for(
      count, threads,
      [&](std::size_t i) { results[i] = heat_degenerate_for_order(qmin + static_cast<Int>(i), padding); },
      [&](std::size_t i) {
        if (sink) sink(qmin + static_cast<Int>(i), results[i]);
      });
  std::vector<PairReport> out;
  for (auto& chunk : results)
    out.insert(out.end(), std::make_move_iterator(chunk.begin()), std::make_move_iterator(chunk.end()));
  return out;
}

std::size_t default_thread_count() {
  if (const char* env = std::getenv("LENSSPEC_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace lensspec
