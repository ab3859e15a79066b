#pragma once

#include "test_support.hpp"

namespace tropopt::testing {

/// Independent spectral-radius oracle: maximum over all simple cycles of the
/// k-th root of the cycle weight, by exhaustive enumeration. Exponential in
/// the order; intended for n <= 6.
inline Scalar cycle_mean_maximum(const Semifield& sf, const TropMatrix& a) {
  const std::size_t n = a.rows();
  Scalar best = Scalar::zero();
  std::vector<bool> used(n, false);

  auto extend = [&](auto&& self, std::size_t start, std::size_t node, const Scalar& weight,
                    std::size_t length) -> void {
    if (!a.at(node, start).is_zero()) {
      Scalar cycle = sf.mul(weight, a.at(node, start));
      best = sf.add(best, sf.power(cycle, 1, static_cast<std::int64_t>(length + 1)));
    }
    for (std::size_t next = start + 1; next < n; ++next) {
      if (used[next] || a.at(node, next).is_zero()) continue;
      used[next] = true;
      self(self, start, next, sf.mul(weight, a.at(node, next)), length + 1);
      used[next] = false;
    }
  };
  for (std::size_t start = 0; start < n; ++start) {
    used.assign(n, false);
    used[start] = true;
    extend(extend, start, start, sf.one(), 0);
  }
  return best;
}

}  // namespace tropopt::testing
