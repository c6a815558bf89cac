#include "lensspec/arith.hpp"

namespace lensspec {

std::vector<Int> units_mod(Int q) {
  std::vector<Int> out;
  if (q == 1) return {1};
  for (Int l = 1; l < q; ++l)
    if (std::gcd(l, q) == 1) out.push_back(l);
  return out;
}

std::vector<Int> divisors(Int q) {
  std::vector<Int> low, high;
  for (Int d = 1; d * d <= q; ++d) {
    if (q % d != 0) continue;
    low.push_back(d);
    if (d != q / d) high.push_back(q / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

Int binomial(Int n, Int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int result = 1;
  for (Int i = 1; i <= k; ++i) {
    // result * (n - k + i) is divisible by i at every step; divide first by
    // the common factor to delay overflow.
    const Int num = n - k + i;
    const Int g = std::gcd(result, i);
    result = checked_mul(result / g, num / (i / g));
  }
  return result;
}

}  // namespace lensspec
