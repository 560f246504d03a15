#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "protometric/labeled_matrix.hpp"

namespace protometric {

/// A protometric split into its difference protometric d (zero diagonal)
/// and its diagonal gauge f(x) = p(x,x).
struct Decomposition {
  LabeledMatrix d;
  LabelFunction f;
};

/// Coordinates of a 0-protometric p(x,y) = a(x) + b(y) in the basis
/// q'_u(x,y) = [x == u], q''_u(x,y) = [y == u], gauge-fixed by b(ref) = 0.
struct ZeroCoordinates {
  LabelFunction a;
  LabelFunction b;
  std::string ref;
};

/// Specialization preorder x <= y iff d(x,y) == 0 of a quasi-semi-metric.
struct PreorderResult {
  std::vector<std::string> labels;
  std::vector<char> relation;                      // n x n, row-major
  std::vector<std::vector<std::size_t>> classes;   // ordered by first member
  std::vector<std::size_t> class_of;
  std::vector<std::pair<std::size_t, std::size_t>> quotient_order;  // (i, j): class i <= class j, i != j

  bool related(std::size_t x, std::size_t y) const {
    return relation[x * labels.size() + y] != 0;
  }
};

LabeledMatrix transpose(const LabeledMatrix& m);

/// Entrywise sum. `b` is realigned to the label order of `a`; the label sets
/// must coincide.
LabeledMatrix add(const LabeledMatrix& a, const LabeledMatrix& b);

/// p'(x,y) = alpha p(x,y) + f(x) + f(y), alpha > 0. Preserves the
/// pre-quadrangle verdict of every type.
LabeledMatrix affine_gauge(const LabeledMatrix& p, double alpha, const LabelFunction& f);

/// f(x) = -(alpha / 2) p(x,x): with this gauge affine_gauge zeroes the
/// diagonal and turns each pre-quadrangle inequality into the triangle one.
LabelFunction diagonal_cancelling_gauge(const LabeledMatrix& p, double alpha);

/// d(x,y) = alpha (p(x,y) + p(y,x) - p(x,x) - p(y,y)). Throws
/// PreconditionError (with the witness) unless p is a protometric.
LabeledMatrix metrize(const LabeledMatrix& p, double alpha, const ToleranceConfig& tol = {});

/// p(x,y) = (d(x,y) + f(x) + f(y)) / 2 for a difference protometric d.
LabeledMatrix compose(const LabeledMatrix& d, const LabelFunction& f,
                      const ToleranceConfig& tol = {});
LabeledMatrix compose(const Decomposition& parts, const ToleranceConfig& tol = {});

/// f(x) = p(x,x), d(x,y) = 2 p(x,y) - p(x,x) - p(y,y) for a protometric p.
Decomposition decompose(const LabeledMatrix& p, const ToleranceConfig& tol = {});

/// q'_u and q''_u on the given labels.
LabeledMatrix outgoing_basis(const std::vector<std::string>& labels, std::size_t u);
LabeledMatrix incoming_basis(const std::vector<std::string>& labels, std::size_t u);

/// (d + sum_u f(u) (q'_u + q''_u)) / 2, expanded term by term over the basis.
LabeledMatrix symmetric_representation(const Decomposition& parts);

ZeroCoordinates zero_coordinates(const LabeledMatrix& p, const ToleranceConfig& tol = {});

/// sum_u a(u) q'_u + sum_u b(u) q''_u.
LabeledMatrix from_zero_coordinates(const ZeroCoordinates& coords);

/// h with d(x,y) = h(x) - h(y), gauge h(ref) = d(ref,ref) for the first
/// label. Throws PreconditionError when d is not a potential difference.
LabelFunction potential_of(const LabeledMatrix& d, const ToleranceConfig& tol = {});
std::optional<LabelFunction> try_potential_of(const LabeledMatrix& d,
                                              const ToleranceConfig& tol = {});

/// d(x,y) = h(x) - h(y).
LabeledMatrix potential_difference(const LabelFunction& h);

PreorderResult specialization_preorder(const LabeledMatrix& d, const ToleranceConfig& tol = {});

/// (x.y)_{x0} = (d(x,x0) + d(y,x0) - d(x,y)) / 2 for a metric d.
LabeledMatrix gromov_product(const LabeledMatrix& d, std::string_view base,
                             const ToleranceConfig& tol = {});

/// C - (x.y)_{x0}.
LabeledMatrix farris_transform(const LabeledMatrix& d, std::string_view base, double constant,
                               const ToleranceConfig& tol = {});

/// Least C >= 0 for which the Farris transform is nonnegative and satisfies
/// the triangle inequality.
double min_farris_constant(const LabeledMatrix& d, std::string_view base,
                           const ToleranceConfig& tol = {});

/// Entrywise -ln s; every entry must be strictly positive.
LabeledMatrix log_transform(const LabeledMatrix& s);

}  // namespace protometric
