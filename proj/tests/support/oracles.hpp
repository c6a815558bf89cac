#pragma once

// Reference implementations used only by the tests. None of them calls into
// the library, so agreement is evidence and not tautology.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

namespace oracle {

using Int = std::int64_t;

/// Counts exponent tuples (a_1, b_1, ..., a_n, b_n) of each total degree s
/// with sum p_i (a_i - b_i) = 0 mod q, by walking every tuple.
inline std::vector<Int> tuple_counts(Int q, const std::vector<Int>& rotations, Int max_degree) {
  std::vector<Int> weights;
  for (Int p : rotations) {
    weights.push_back(p);
    weights.push_back(-p);
  }
  std::vector<Int> counts(max_degree + 1, 0);
  std::function<void(std::size_t, Int, Int)> walk = [&](std::size_t slot, Int degree, Int residue) {
    if (slot == weights.size()) {
      if (((residue % q) + q) % q == 0) ++counts[degree];
      return;
    }
    for (Int e = 0; degree + e <= max_degree; ++e) walk(slot + 1, degree + e, residue + e * weights[slot]);
  };
  walk(0, 0, 0);
  return counts;
}

inline Int choose(Int n, Int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (Int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Harmonic multiplicities P(k) - P(k-2), where the W padded coordinates
/// carry the remaining degree freely.
inline std::vector<Int> multiplicities(Int q, const std::vector<Int>& rotations, Int padding, Int kmax) {
  const std::vector<Int> c = tuple_counts(q, rotations, kmax);
  std::vector<Int> p(kmax + 1, 0);
  for (Int m = 0; m <= kmax; ++m) {
    for (Int s = 0; s <= m; ++s) {
      const Int free = padding == 0 ? (s == m ? 1 : 0) : choose(m - s + padding - 1, padding - 1);
      p[m] += c[s] * free;
    }
  }
  std::vector<Int> out(kmax + 1);
  for (Int k = 0; k <= kmax; ++k) out[k] = p[k] - (k >= 2 ? p[k - 2] : 0);
  return out;
}

/// dim of degree-k harmonics on S^d.
inline Int sphere_multiplicity(Int d, Int k) {
  return choose(k + d, d) - choose(k + d - 2, d);
}

/// Every rotation vector isometric to the input: all units l, all signs, all
/// orders. Entries reduced into [0, q - 1].
inline std::vector<std::vector<Int>> full_orbit(Int q, const std::vector<Int>& rotations) {
  std::vector<std::vector<Int>> orbit;
  const std::size_t n = rotations.size();
  for (Int l = 1; l <= q; ++l) {
    if (std::gcd(l, q) != 1) continue;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<Int> v(n);
      for (std::size_t i = 0; i < n; ++i) {
        const Int s = (mask >> i) & 1u ? -1 : 1;
        v[i] = (((s * l * rotations[i]) % q) + q) % q;
      }
      std::vector<std::size_t> idx(n);
      std::iota(idx.begin(), idx.end(), 0);
      do {
        std::vector<Int> w(n);
        for (std::size_t i = 0; i < n; ++i) w[i] = v[idx[i]];
        orbit.push_back(std::move(w));
      } while (std::next_permutation(idx.begin(), idx.end()));
    }
  }
  std::sort(orbit.begin(), orbit.end());
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  return orbit;
}

/// Smallest sorted vector in the orbit.
inline std::vector<Int> canonical(Int q, const std::vector<Int>& rotations) {
  std::vector<Int> best;
  for (auto v : full_orbit(q, rotations)) {
    std::sort(v.begin(), v.end());
    if (best.empty() || v < best) best = v;
  }
  return best;
}

inline bool isometric(Int q, const std::vector<Int>& a, const std::vector<Int>& b) {
  std::vector<Int> target(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) target[i] = ((b[i] % q) + q) % q;
  for (const auto& v : full_orbit(q, a))
    if (v == target) return true;
  return false;
}

using Complex = std::complex<long double>;

inline const long double kPi = std::acos(-1.0L);

/// Closed-form sum over the group of (1 - z^2) / det(I - g z) on S^{2n-1}
/// (W = 0), or (1 + z) / ((1 - z)^{W-1} det) with W padded coordinates.
inline Complex generating_sum(Int q, const std::vector<Int>& rotations, Int padding, Complex z) {
  Complex total = 0;
  for (Int l = 0; l < q; ++l) {
    Complex det = 1;
    for (Int p : rotations) {
      const long double angle = 2 * kPi * static_cast<long double>((l * p) % q) / static_cast<long double>(q);
      const Complex g = std::polar(1.0L, angle);
      det *= (1.0L - g * z) * (1.0L - std::conj(g) * z);
    }
    total += 1.0L / det;
  }
  Complex front = 1.0L - z * z;
  if (padding >= 1) front = (1.0L + z) / std::pow(1.0L - z, static_cast<int>(padding - 1));
  return front * total / static_cast<long double>(q);
}

/// Neville extrapolation to h = 0 of samples (h_i, y_i).
inline Complex extrapolate_to_zero(const std::vector<long double>& h, std::vector<Complex> y) {
  const std::size_t n = h.size();
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = 0; i + level < n; ++i)
      y[i] = (h[i + level] * y[i] - h[i] * y[i + 1]) / (h[i + level] - h[i]);
  return y[0];
}

/// lim_{z -> pole} (z - pole)^order f(z), approached along
/// z = pole (1 - 10^{-m}) for m = first..last.
inline Complex numeric_limit(const std::function<Complex(Complex)>& f, Complex pole, int order = 1, int first = 4,
                             int last = 7) {
  std::vector<long double> h;
  std::vector<Complex> y;
  for (int m = first; m <= last; ++m) {
    const long double eps = std::pow(10.0L, -m);
    const Complex z = pole * (1.0L - eps);
    h.push_back(eps);
    y.push_back(std::pow(z - pole, order) * f(z));
  }
  return extrapolate_to_zero(h, y);
}

}  // namespace oracle
