#pragma once

// Test-side reference computations, kept deliberately independent of the
// library's algorithms: positive roots via the full reflection orbit of the
// simple roots, and lattice membership via exhaustive coefficient search.

#include <cstdint>
#include <set>
#include <vector>

#include "liedelta/exact.hpp"

namespace liedelta::testing {

// Orbit of the simple roots under all simple reflections (acting on
// simple-root coordinates), intersected with the positive cone.
inline std::set<std::vector<std::int64_t>> orbit_positive_roots(const IntMatrix& cartan) {
  const int l = static_cast<int>(cartan.size());
  std::set<std::vector<std::int64_t>> orbit;
  std::vector<std::vector<std::int64_t>> frontier;
  for (int i = 0; i < l; ++i) {
    std::vector<std::int64_t> e(l, 0);
    e[i] = 1;
    orbit.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& r : frontier) {
      for (int i = 0; i < l; ++i) {
        // s_i changes only coordinate i: r_i -> r_i - sum_j r_j c[j][i]
        std::int64_t pairing = 0;
        for (int j = 0; j < l; ++j) pairing += r[j] * cartan[j][i];
        std::vector<std::int64_t> image = r;
        image[i] -= pairing;
        if (orbit.insert(image).second) next.push_back(image);
      }
    }
    frontier = std::move(next);
  }
  std::set<std::vector<std::int64_t>> positive;
  for (const auto& r : orbit) {
    bool nonneg = true;
    for (std::int64_t c : r) nonneg = nonneg && c >= 0;
    if (nonneg) positive.insert(r);
  }
  return positive;
}

// Whether v is an integer combination of the columns of m with all
// coefficients in [-bound, bound].
inline bool in_column_lattice_exhaustive(const IntMatrix& m, const std::vector<std::int64_t>& v,
                                         std::int64_t bound) {
  const int n = static_cast<int>(m.size());
  std::vector<std::int64_t> x(n, -bound);
  for (;;) {
    bool match = true;
    for (int r = 0; r < n && match; ++r) {
      std::int64_t s = 0;
      for (int c = 0; c < n; ++c) s += m[r][c] * x[c];
      match = s == v[r];
    }
    if (match) return true;
    int pos = 0;
    while (pos < n && x[pos] == bound) {
      x[pos] = -bound;
      ++pos;
    }
    if (pos == n) return false;
    ++x[pos];
  }
}

}  // namespace liedelta::testing
