#include "protometric/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "protometric/checks.hpp"
#include "protometric/classify.hpp"
#include "protometric/errors.hpp"

namespace protometric {

namespace {

void require_positive_alpha(double alpha) {
  if (!std::isfinite(alpha) || !(alpha > 0.0))
    throw InputError("alpha must be a finite positive number");
}

void require_protometric(const LabeledMatrix& p, const ToleranceConfig& tol,
                         std::string_view operation) {
  auto verdict = check_prequadrangle(p, InequalityType::t, tol);
  if (!verdict.passed())
    throw PreconditionError(std::string(operation) +
                                ": input is not a protometric (type t pre-quadrangle fails)",
                            std::move(verdict));
}

void require_difference_protometric(const LabeledMatrix& d, const ToleranceConfig& tol,
                                    std::string_view operation) {
  for (std::size_t x = 0; x < d.size(); ++x)
    if (std::abs(d(x, x)) > tol.eps_eq)
      throw PreconditionError(std::string(operation) + ": d(" + d.labels()[x] + "," +
                              d.labels()[x] + ") is not zero");
  require_protometric(d, tol, operation);
}

void require_metric(const LabeledMatrix& d, const ToleranceConfig& tol,
                    std::string_view operation) {
  const auto report = classify(d, tol);
  if (report.metric) return;
  std::optional<PropertyVerdict> witness;
  if (!report.prequad_t) witness = report.prequadrangle[2];
  throw PreconditionError(std::string(operation) + ": input is not a metric", std::move(witness));
}

}  // namespace

LabeledMatrix transpose(const LabeledMatrix& m) {
  return LabeledMatrix::from_function(m.labels(), [&](auto x, auto y) { return m(y, x); });
}

LabeledMatrix add(const LabeledMatrix& a, const LabeledMatrix& b) {
  if (a.size() != b.size()) throw InputError("add: matrices have different label sets");
  std::vector<std::size_t> order;
  order.reserve(a.size());
  for (const auto& label : a.labels()) {
    auto k = b.index_of(label);
    if (!k) throw InputError("add: label '" + label + "' missing from second matrix");
    order.push_back(*k);
  }
  const LabeledMatrix aligned = b.permuted(order);
  return LabeledMatrix::from_function(a.labels(),
                                      [&](auto x, auto y) { return a(x, y) + aligned(x, y); });
}

LabeledMatrix affine_gauge(const LabeledMatrix& p, double alpha, const LabelFunction& f) {
  require_positive_alpha(alpha);
  const auto fv = f.aligned_to(p.labels());
  return LabeledMatrix::from_function(
      p.labels(), [&](auto x, auto y) { return alpha * p(x, y) + (fv[x] + fv[y]); });
}

LabelFunction diagonal_cancelling_gauge(const LabeledMatrix& p, double alpha) {
  require_positive_alpha(alpha);
  std::vector<double> values(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) values[x] = -0.5 * (alpha * p(x, x));
  return LabelFunction(p.labels(), std::move(values));
}

LabeledMatrix metrize(const LabeledMatrix& p, double alpha, const ToleranceConfig& tol) {
  require_positive_alpha(alpha);
  require_protometric(p, tol, "metrize");
  return LabeledMatrix::from_function(p.labels(), [&](auto x, auto y) {
    return alpha * ((p(x, y) + p(y, x)) - (p(x, x) + p(y, y)));
  });
}

LabeledMatrix compose(const LabeledMatrix& d, const LabelFunction& f, const ToleranceConfig& tol) {
  require_difference_protometric(d, tol, "compose");
  const auto fv = f.aligned_to(d.labels());
  return LabeledMatrix::from_function(
      d.labels(), [&](auto x, auto y) { return 0.5 * (d(x, y) + (fv[x] + fv[y])); });
}

LabeledMatrix compose(const Decomposition& parts, const ToleranceConfig& tol) {
  return compose(parts.d, parts.f, tol);
}

Decomposition decompose(const LabeledMatrix& p, const ToleranceConfig& tol) {
  require_protometric(p, tol, "decompose");
  const std::size_t n = p.size();
  std::vector<double> f(n);
  for (std::size_t x = 0; x < n; ++x) f[x] = p(x, x);
  auto d = LabeledMatrix::from_function(
      p.labels(), [&](auto x, auto y) { return 2.0 * p(x, y) - (f[x] + f[y]); });
  return {std::move(d), LabelFunction(p.labels(), std::move(f))};
}

LabeledMatrix outgoing_basis(const std::vector<std::string>& labels, std::size_t u) {
  return LabeledMatrix::from_function(labels, [u](auto x, auto) { return x == u ? 1.0 : 0.0; });
}

LabeledMatrix incoming_basis(const std::vector<std::string>& labels, std::size_t u) {
  return LabeledMatrix::from_function(labels, [u](auto, auto y) { return y == u ? 1.0 : 0.0; });
}

LabeledMatrix symmetric_representation(const Decomposition& parts) {
  const auto& labels = parts.d.labels();
  const std::size_t n = labels.size();
  const auto f = parts.f.aligned_to(labels);
  std::vector<double> acc(parts.d.entries().begin(), parts.d.entries().end());
  for (std::size_t u = 0; u < n; ++u) {
    const auto q_out = outgoing_basis(labels, u);
    const auto q_in = incoming_basis(labels, u);
    for (std::size_t k = 0; k < n * n; ++k)
      acc[k] += f[u] * (q_out.entries()[k] + q_in.entries()[k]);
  }
  for (double& v : acc) v *= 0.5;
  return LabeledMatrix(labels, std::move(acc));
}

ZeroCoordinates zero_coordinates(const LabeledMatrix& p, const ToleranceConfig& tol) {
  tol.validate();
  const std::size_t n = p.size();
  const auto& labels = p.labels();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const double defect = (p(x, y) + p(y, x)) - (p(x, x) + p(y, y));
      if (std::abs(defect) > tol.eps_eq)
        throw PreconditionError("zerocoords: not a 0-protometric, p(x,y)+p(y,x)-p(x,x)-p(y,y) = " +
                                std::to_string(defect) + " at (" + labels[x] + "," + labels[y] +
                                ")");
    }
  std::vector<double> a(n), b(n);
  for (std::size_t x = 0; x < n; ++x) a[x] = p(x, 0);
  for (std::size_t y = 0; y < n; ++y) b[y] = p(0, y) - p(0, 0);
  b[0] = 0.0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (std::abs(p(x, y) - (a[x] + b[y])) > tol.eps_eq)
        throw PreconditionError("zerocoords: p is not of the form a(x) + b(y); residual at (" +
                                labels[x] + "," + labels[y] + ")");
  return {LabelFunction(labels, std::move(a)), LabelFunction(labels, std::move(b)), labels[0]};
}

LabeledMatrix from_zero_coordinates(const ZeroCoordinates& coords) {
  const auto& labels = coords.a.labels();
  const std::size_t n = labels.size();
  const auto b = coords.b.aligned_to(labels);
  std::vector<double> acc(n * n, 0.0);
  for (std::size_t u = 0; u < n; ++u) {
    const auto q_out = outgoing_basis(labels, u);
    const auto q_in = incoming_basis(labels, u);
    for (std::size_t k = 0; k < n * n; ++k)
      acc[k] += coords.a[u] * q_out.entries()[k] + b[u] * q_in.entries()[k];
  }
  return LabeledMatrix(labels, std::move(acc));
}

std::optional<LabelFunction> try_potential_of(const LabeledMatrix& d, const ToleranceConfig& tol) {
  const std::size_t n = d.size();
  std::vector<double> h(n);
  for (std::size_t x = 0; x < n; ++x) h[x] = d(x, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (std::abs(d(x, y) - (h[x] - h[y])) > tol.eps_eq) return std::nullopt;
  return LabelFunction(d.labels(), std::move(h));
}

LabelFunction potential_of(const LabeledMatrix& d, const ToleranceConfig& tol) {
  tol.validate();
  if (auto h = try_potential_of(d, tol)) return *std::move(h);
  throw PreconditionError("potential: d is not a potential difference h(x) - h(y)");
}

LabeledMatrix potential_difference(const LabelFunction& h) {
  return LabeledMatrix::from_function(h.labels(), [&](auto x, auto y) { return h[x] - h[y]; });
}

PreorderResult specialization_preorder(const LabeledMatrix& d, const ToleranceConfig& tol) {
  tol.validate();
  const std::size_t n = d.size();
  const auto& labels = d.labels();
  for (std::size_t x = 0; x < n; ++x) {
    if (std::abs(d(x, x)) > tol.eps_eq)
      throw PreconditionError("preorder: input is not a quasi-semi-metric (nonzero diagonal at " +
                              labels[x] + ")");
    for (std::size_t y = 0; y < n; ++y)
      if (d(x, y) < -tol.eps_ineq)
        throw PreconditionError("preorder: input is not a quasi-semi-metric (negative entry at (" +
                                labels[x] + "," + labels[y] + "))");
  }
  require_protometric(d, tol, "preorder");

  PreorderResult r;
  r.labels = labels;
  r.relation.assign(n * n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) r.relation[x * n + y] = d(x, y) <= tol.eps_eq ? 1 : 0;

  for (std::size_t x = 0; x < n; ++x) {
    if (!r.related(x, x))
      throw ToleranceInconsistencyError("preorder: relation is not reflexive at " + labels[x]);
    for (std::size_t y = 0; y < n; ++y) {
      if (!r.related(x, y)) continue;
      for (std::size_t z = 0; z < n; ++z)
        if (r.related(y, z) && !r.related(x, z))
          throw ToleranceInconsistencyError("preorder: relation is not transitive on (" +
                                            labels[x] + "," + labels[y] + "," + labels[z] +
                                            "); tolerances are inconsistent with the input");
    }
  }

  constexpr auto unassigned = std::numeric_limits<std::size_t>::max();
  r.class_of.assign(n, unassigned);
  for (std::size_t x = 0; x < n; ++x) {
    if (r.class_of[x] != unassigned) continue;
    const std::size_t id = r.classes.size();
    r.classes.emplace_back();
    for (std::size_t y = x; y < n; ++y)
      if (r.related(x, y) && r.related(y, x)) {
        r.class_of[y] = id;
        r.classes.back().push_back(y);
      }
  }
  for (std::size_t i = 0; i < r.classes.size(); ++i)
    for (std::size_t j = 0; j < r.classes.size(); ++j)
      if (i != j && r.related(r.classes[i].front(), r.classes[j].front()))
        r.quotient_order.emplace_back(i, j);
  return r;
}

LabeledMatrix gromov_product(const LabeledMatrix& d, std::string_view base,
                             const ToleranceConfig& tol) {
  const std::size_t b = d.require_index(base);
  require_metric(d, tol, "gromov");
  const std::size_t n = d.size();
  std::vector<double> g(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x; y < n; ++y) {
      const double v = 0.5 * ((d(x, b) + d(y, b)) - d(x, y));
      g[x * n + y] = v;
      g[y * n + x] = v;
    }
  return LabeledMatrix(d.labels(), std::move(g));
}

LabeledMatrix farris_transform(const LabeledMatrix& d, std::string_view base, double constant,
                               const ToleranceConfig& tol) {
  if (!std::isfinite(constant)) throw InputError("farris: constant must be finite");
  const auto g = gromov_product(d, base, tol);
  return LabeledMatrix::from_function(g.labels(),
                                      [&](auto x, auto y) { return constant - g(x, y); });
}

double min_farris_constant(const LabeledMatrix& d, std::string_view base,
                           const ToleranceConfig& tol) {
  const auto g = gromov_product(d, base, tol);
  const std::size_t n = g.size();
  double best = 0.0;
  for (double v : g.entries()) best = std::max(best, v);
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(static) reduction(max : best)
  for (long long sx = 0; sx < count; ++sx) {
    const auto x = static_cast<std::size_t>(sx);
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) best = std::max(best, (g(x, y) + g(x, z)) - g(y, z));
  }
  return best;
}

LabeledMatrix log_transform(const LabeledMatrix& s) {
  const std::size_t n = s.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (!(s(x, y) > 0.0))
        throw PreconditionError("log: entry at (" + s.labels()[x] + "," + s.labels()[y] +
                                ") is not strictly positive");
  return LabeledMatrix::from_function(s.labels(), [&](auto x, auto y) { return 0.0 - std::log(s(x, y)); });
}

}  // namespace protometric
