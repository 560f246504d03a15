#include "protometric/checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "protometric/kernels.hpp"

namespace protometric {

namespace {

template <class Term>
kernels::ScanResult run_scan(std::size_t n, double eps, const CheckOptions& opts,
                             const Term& term) {
  return opts.parallel ? kernels::parallel::scan_triples(n, eps, opts.witness_cap, term)
                       : kernels::serial::scan_triples(n, eps, opts.witness_cap, term);
}

PropertyVerdict to_verdict(const LabeledMatrix& m, const kernels::ScanResult& scan) {
  PropertyVerdict v;
  v.status = scan.violations == 0 ? VerdictStatus::pass : VerdictStatus::fail;
  v.min_slack = scan.min_slack;
  v.count_checked = scan.checked;
  v.violation_count = scan.violations;
  const auto& labels = m.labels();
  v.witnesses.reserve(scan.witnesses.size());
  for (const auto& w : scan.witnesses)
    v.witnesses.push_back(
        {labels[w.x], labels[w.y], labels[w.z], w.x, w.y, w.z, w.lhs, w.rhs, w.deficit});
  return v;
}

PropertyVerdict check_triangle_family(const LabeledMatrix& m, InequalityType ty,
                                      bool with_diagonal, const ToleranceConfig& tol,
                                      const CheckOptions& opts) {
  tol.validate();
  const kernels::TriangleTerm term{m.data(), m.size(), ty, with_diagonal};
  return to_verdict(m, run_scan(m.size(), tol.eps_ineq, opts, term));
}

}  // namespace

PropertyVerdict check_triangle(const LabeledMatrix& m, InequalityType ty,
                               const ToleranceConfig& tol, const CheckOptions& opts) {
  return check_triangle_family(m, ty, false, tol, opts);
}

PropertyVerdict check_prequadrangle(const LabeledMatrix& m, InequalityType ty,
                                    const ToleranceConfig& tol, const CheckOptions& opts) {
  return check_triangle_family(m, ty, true, tol, opts);
}

PropertyVerdict check_strict(const LabeledMatrix& m, InequalityType ty,
                             const ToleranceConfig& tol, const CheckOptions& opts) {
  tol.validate();
  const std::size_t n = m.size();
  const kernels::TriangleTerm term{m.data(), n, ty, true};
  PropertyVerdict v;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      const auto inst = term(x, y, y);
      v.min_slack = std::min(v.min_slack, inst.slack);
      ++v.count_checked;
      if (!(inst.slack > tol.eps_strict)) {
        ++v.violation_count;
        if (v.witnesses.size() < opts.witness_cap)
          v.witnesses.push_back({m.labels()[x], m.labels()[y], m.labels()[y], x, y, y, inst.lhs,
                                 inst.rhs, inst.rhs - inst.lhs});
      }
    }
  }
  v.status = v.violation_count == 0 ? VerdictStatus::pass : VerdictStatus::fail;
  return v;
}

std::vector<DiagonalBound> diagonal_bounds(const LabeledMatrix& m, InequalityType ty,
                                           const ToleranceConfig& tol) {
  tol.validate();
  const std::size_t n = m.size();
  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<DiagonalBound> out;
  out.reserve(n);
  for (std::size_t x = 0; x < n; ++x) {
    double lo = -inf;
    double hi = inf;
    for (std::size_t y = 0; y < n; ++y) {
      const double out_xy = m(x, y);
      const double in_xy = m(y, x);
      switch (ty) {
        case InequalityType::o:
          lo = std::max(lo, in_xy - out_xy);
          hi = std::min(hi, 2.0 * in_xy);
          break;
        case InequalityType::i:
          lo = std::max(lo, out_xy - in_xy);
          hi = std::min(hi, 2.0 * out_xy);
          break;
        case InequalityType::t:
          lo = 0.0;
          hi = std::min(hi, out_xy + in_xy);
          break;
        case InequalityType::c:
          lo = std::max(lo, std::abs(out_xy - in_xy));
          hi = std::min(hi, out_xy + in_xy);
          break;
      }
    }
    const double diag = m(x, x);
    DiagonalBound b;
    b.label = m.labels()[x];
    b.interval = {lo, hi, lo <= hi + tol.eps_eq};
    b.member = diag >= lo - tol.eps_eq && diag <= hi + tol.eps_eq;
    out.push_back(std::move(b));
  }
  return out;
}

PropertyVerdict check_transition(const LabeledMatrix& s, const ToleranceConfig& tol,
                                 const CheckOptions& opts, bool require_positive) {
  tol.validate();
  if (require_positive) {
    const auto e = s.entries();
    if (std::any_of(e.begin(), e.end(), [](double v) { return v <= 0.0; })) {
      PropertyVerdict v;
      v.status = VerdictStatus::not_applicable;
      return v;
    }
  }
  const kernels::TransitionTerm term{s.data(), s.size(), tol.eps_ineq};
  return to_verdict(s, run_scan(s.size(), tol.eps_ineq, opts, term));
}

}  // namespace protometric
