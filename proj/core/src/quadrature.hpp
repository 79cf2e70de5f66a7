#pragma once

#include <cstddef>
#include <vector>

namespace contnorm::detail {

// Composite Simpson weights for m uniform cells of width h (m + 1 nodes).
// An odd cell count ends with the 3/8 rule, keeping O(h^4) throughout.
// Requires m >= 2.
inline std::vector<double> simpson_weights(std::size_t m, double h) {
  std::vector<double> w(m + 1, 0.0);
  const std::size_t even_end = (m % 2 == 0) ? m : m - 3;
  for (std::size_t i = 0; i + 2 <= even_end; i += 2) {
    w[i] += h / 3.0;
    w[i + 1] += 4.0 * h / 3.0;
    w[i + 2] += h / 3.0;
  }
  if (m % 2 != 0) {
    const std::size_t i = even_end;
    w[i] += 3.0 * h / 8.0;
    w[i + 1] += 9.0 * h / 8.0;
    w[i + 2] += 9.0 * h / 8.0;
    w[i + 3] += 3.0 * h / 8.0;
  }
  return w;
}

inline double simpson(const std::vector<double>& g, double h) {
  const std::size_t m = g.size() - 1;
  const std::vector<double> w = simpson_weights(m, h);
  double sum = 0.0;
  for (std::size_t i = 0; i <= m; ++i) sum += w[i] * g[i];
  return sum;
}

}  // namespace contnorm::detail
