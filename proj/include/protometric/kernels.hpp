#pragma once

// Index-level O(n^3) kernels. Every kernel exists twice: a plain serial loop
// kept as the reference, and an OpenMP version that must produce
// bit-identical results (same min, same counts, same witnesses in the same
// row-major order).

#include <algorithm>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "protometric/labeled_matrix.hpp"

namespace protometric::kernels {

/// One instance of an inequality; `slack < -eps` is a violation.
struct Instance {
  double lhs;
  double rhs;
  double slack;
};

struct IndexWitness {
  std::size_t x, y, z;
  double lhs, rhs, deficit;

  bool operator==(const IndexWitness&) const = default;
};

struct ScanResult {
  double min_slack = std::numeric_limits<double>::infinity();
  std::size_t checked = 0;
  std::size_t violations = 0;
  std::vector<IndexWitness> witnesses;

  bool operator==(const ScanResult&) const = default;
};

/// lhs of the triangle inequality of type `ty`; rhs is m(y,z), plus m(x,x)
/// for the pre-quadrangle form.
struct TriangleTerm {
  const double* m;
  std::size_t n;
  InequalityType ty;
  bool with_diagonal;

  double at(std::size_t a, std::size_t b) const noexcept { return m[a * n + b]; }

  Instance operator()(std::size_t x, std::size_t y, std::size_t z) const noexcept {
    double lhs = 0.0;
    switch (ty) {
      case InequalityType::o: lhs = at(x, y) + at(x, z); break;
      case InequalityType::i: lhs = at(y, x) + at(z, x); break;
      case InequalityType::t: lhs = at(y, x) + at(x, z); break;
      case InequalityType::c: lhs = at(z, x) + at(x, y); break;
    }
    const double rhs = with_diagonal ? at(y, z) + at(x, x) : at(y, z);
    return {lhs, rhs, lhs - rhs};
  }
};

/// s(y,x) s(x,z) <= s(y,z) s(x,x), with the multiplicative band
/// lhs <= rhs (1 + eps) + eps expressed as slack = rhs (1 + eps) - lhs.
struct TransitionTerm {
  const double* s;
  std::size_t n;
  double eps;

  double at(std::size_t a, std::size_t b) const noexcept { return s[a * n + b]; }

  Instance operator()(std::size_t x, std::size_t y, std::size_t z) const noexcept {
    const double lhs = at(y, x) * at(x, z);
    const double rhs = at(y, z) * at(x, x);
    return {lhs, rhs, rhs * (1.0 + eps) - lhs};
  }
};

namespace detail {

template <class Term>
void scan_row(std::size_t x, std::size_t n, double eps, std::size_t cap,
              const Term& term, ScanResult& out) {
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t z = 0; z < n; ++z) {
      const Instance inst = term(x, y, z);
      out.min_slack = std::min(out.min_slack, inst.slack);
      ++out.checked;
      if (inst.slack < -eps) {
        ++out.violations;
        if (out.witnesses.size() < cap)
          out.witnesses.push_back({x, y, z, inst.lhs, inst.rhs, -inst.slack});
      }
    }
  }
}

inline void merge_into(ScanResult& acc, const ScanResult& row, std::size_t cap) {
  acc.min_slack = std::min(acc.min_slack, row.min_slack);
  acc.checked += row.checked;
  acc.violations += row.violations;
  for (const auto& w : row.witnesses) {
    if (acc.witnesses.size() >= cap) break;
    acc.witnesses.push_back(w);
  }
}

// One Floyd-Warshall sweep; returns whether any entry decreased.
inline bool relax_pivot_row(std::span<double> d, std::size_t n, std::size_t k,
                            std::size_t i) {
  bool changed = false;
  const double dik = d[i * n + k];
  for (std::size_t j = 0; j < n; ++j) {
    const double via = dik + d[k * n + j];
    if (via < d[i * n + j]) {
      d[i * n + j] = via;
      changed = true;
    }
  }
  return changed;
}

}  // namespace detail

namespace serial {

template <class Term>
ScanResult scan_triples(std::size_t n, double eps, std::size_t cap, const Term& term) {
  ScanResult result;
  for (std::size_t x = 0; x < n; ++x) detail::scan_row(x, n, eps, cap, term, result);
  return result;
}

/// Min-plus closure iterated to a floating-point fixpoint, so that afterwards
/// d[i][j] <= d[i][k] + d[k][j] holds exactly as computed. Requires a zero
/// diagonal and nonnegative entries. Returns the number of sweeps.
inline std::size_t min_plus_closure(std::span<double> d, std::size_t n) {
  std::size_t sweeps = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    ++sweeps;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        changed = detail::relax_pivot_row(d, n, k, i) || changed;
  }
  return sweeps;
}

}  // namespace serial

namespace parallel {

template <class Term>
ScanResult scan_triples(std::size_t n, double eps, std::size_t cap, const Term& term) {
  std::vector<ScanResult> rows(n);
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(static)
  for (long long x = 0; x < count; ++x) {
    const auto ux = static_cast<std::size_t>(x);
    detail::scan_row(ux, n, eps, cap, term, rows[ux]);
  }
  ScanResult result;
  for (const auto& row : rows) detail::merge_into(result, row, cap);
  return result;
}

/// Same contract as serial::min_plus_closure. With a zero diagonal, row k and
/// column k are fixed while pivot k is processed, so rows relax independently.
inline std::size_t min_plus_closure(std::span<double> d, std::size_t n) {
  std::size_t sweeps = 0;
  bool changed = true;
  const auto count = static_cast<long long>(n);
  while (changed) {
    changed = false;
    ++sweeps;
    for (std::size_t k = 0; k < n; ++k) {
      bool pivot_changed = false;
#pragma omp parallel for schedule(static) reduction(|| : pivot_changed)
      for (long long i = 0; i < count; ++i)
        pivot_changed = detail::relax_pivot_row(d, n, k, static_cast<std::size_t>(i)) ||
                        pivot_changed;
      changed = changed || pivot_changed;
    }
  }
  return sweeps;
}

}  // namespace parallel

}  // namespace protometric::kernels
