#pragma once

#include <vector>

#include "protometric/labeled_matrix.hpp"
#include "protometric/verdict.hpp"

namespace protometric {

/// Exhaustive check of the type-`ty` triangle inequality over all n^3
/// ordered triples, degenerate ones included:
///   o: m(x,y) + m(x,z) >= m(y,z)      i: m(y,x) + m(z,x) >= m(y,z)
///   t: m(y,x) + m(x,z) >= m(y,z)      c: m(z,x) + m(x,y) >= m(y,z)
PropertyVerdict check_triangle(const LabeledMatrix& m, InequalityType ty,
                               const ToleranceConfig& tol = {},
                               const CheckOptions& opts = {});

/// The pre-quadrangle inequality: the triangle inequality of the same type
/// with m(x,x) added to the right-hand side. Passing type t means `m` is a
/// protometric.
PropertyVerdict check_prequadrangle(const LabeledMatrix& m, InequalityType ty,
                                    const ToleranceConfig& tol = {},
                                    const CheckOptions& opts = {});

/// Strictness of the pre-quadrangle inequality on the degenerate triples
/// (x, y, y), x != y: passes iff lhs - rhs > eps_strict on each of them.
/// min_slack is the smallest lhs - rhs; witnesses record pairs that are not
/// strict, with z == y.
PropertyVerdict check_strict(const LabeledMatrix& m, InequalityType ty,
                             const ToleranceConfig& tol = {},
                             const CheckOptions& opts = {});

/// Per-label interval that the diagonal must lie in whenever the type-`ty`
/// triangle inequality holds. Min/max range over every y, including y = x.
std::vector<DiagonalBound> diagonal_bounds(const LabeledMatrix& m, InequalityType ty,
                                           const ToleranceConfig& tol = {});

/// s(y,x) s(x,z) <= s(y,z) s(x,x) for every ordered triple, accepted when
/// lhs <= rhs (1 + eps_ineq) + eps_ineq. With `require_positive`, any entry
/// <= 0 yields NOT_APPLICABLE (the -ln transform is undefined there).
PropertyVerdict check_transition(const LabeledMatrix& s, const ToleranceConfig& tol = {},
                                 const CheckOptions& opts = {},
                                 bool require_positive = false);

}  // namespace protometric
