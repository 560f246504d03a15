#pragma once

// Brute-force oracles for the test suites. They are written from the
// inequality formulas directly over nested vectors and never call into the
// kernels they check.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "protometric/labeled_matrix.hpp"

namespace oracle {

using Grid = std::vector<std::vector<double>>;
using Relation = std::vector<std::vector<bool>>;

inline Grid to_grid(const protometric::LabeledMatrix& m) {
  Grid g(m.size(), std::vector<double>(m.size()));
  for (std::size_t x = 0; x < m.size(); ++x)
    for (std::size_t y = 0; y < m.size(); ++y) g[x][y] = m(x, y);
  return g;
}

inline double lhs_of(const Grid& d, char ty, std::size_t x, std::size_t y, std::size_t z) {
  switch (ty) {
    case 'o': return d[x][y] + d[x][z];
    case 'i': return d[y][x] + d[z][x];
    case 't': return d[y][x] + d[x][z];
    default: return d[z][x] + d[x][y];
  }
}

/// Smallest lhs - rhs over all ordered triples.
inline double min_slack(const Grid& d, char ty, bool with_diagonal) {
  double best = INFINITY;
  const std::size_t n = d.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const double rhs = d[y][z] + (with_diagonal ? d[x][x] : 0.0);
        best = std::min(best, lhs_of(d, ty, x, y, z) - rhs);
      }
  return best;
}

inline bool triangle(const Grid& d, char ty, double eps = 1e-9) {
  return min_slack(d, ty, false) >= -eps;
}

inline bool prequad(const Grid& d, char ty, double eps = 1e-9) {
  return min_slack(d, ty, true) >= -eps;
}

inline std::size_t violations(const Grid& d, char ty, bool with_diagonal, double eps = 1e-9) {
  std::size_t count = 0;
  const std::size_t n = d.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const double rhs = d[y][z] + (with_diagonal ? d[x][x] : 0.0);
        if (lhs_of(d, ty, x, y, z) - rhs < -eps) ++count;
      }
  return count;
}

inline bool is_metric(const Grid& d, double eps = 1e-9) {
  const std::size_t n = d.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y && std::abs(d[x][y]) > eps) return false;
      if (x != y && !(d[x][y] > eps)) return false;
      if (std::abs(d[x][y] - d[y][x]) > eps) return false;
      for (std::size_t z = 0; z < n; ++z)
        if (d[x][z] > d[x][y] + d[y][z] + eps) return false;
    }
  return true;
}

/// Least C with C - G nonnegative and triangle-consistent, by bisection on
/// C using the plain loops (no closed form).
inline double farris_constant_by_bisection(const Grid& g) {
  const std::size_t n = g.size();
  auto ok = [&](double c) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        if (c - g[x][y] < 0.0) return false;
        for (std::size_t z = 0; z < n; ++z)
          if ((c - g[x][y]) + (c - g[x][z]) < (c - g[y][z])) return false;
      }
    return true;
  };
  double lo = 0.0, hi = 1.0;
  if (ok(0.0)) return 0.0;
  while (!ok(hi)) hi *= 2.0;
  for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
    const double mid = 0.5 * (lo + hi);
    (ok(mid) ? hi : lo) = mid;
  }
  return hi;
}

/// Warshall's boolean transitive closure.
inline Relation transitive_closure(Relation r) {
  const std::size_t n = r.size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = true;
  return r;
}

/// Class id per point: smallest index mutually related to it.
inline std::vector<std::size_t> mutual_classes(const Relation& r) {
  std::vector<std::size_t> id(r.size());
  for (std::size_t x = 0; x < r.size(); ++x) {
    id[x] = x;
    for (std::size_t y = 0; y < x; ++y)
      if (r[x][y] && r[y][x]) {
        id[x] = id[y];
        break;
      }
  }
  return id;
}

}  // namespace oracle
