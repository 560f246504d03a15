#include "protometric/generators.hpp"

#include <cmath>
#include <limits>

#include "protometric/checks.hpp"
#include "protometric/errors.hpp"
#include "protometric/kernels.hpp"
#include "protometric/transforms.hpp"

namespace protometric {

void GenSpec::validate() const {
  if (n < 1) throw InputError("generator size n must be at least 1");
  if (!std::isfinite(scale) || !(scale > 0.0)) throw InputError("scale must be positive");
  if (!(tie_probability >= 0.0 && tie_probability <= 1.0))
    throw InputError("tie probability must lie in [0, 1]");
}

Rng::Rng(std::uint64_t seed, double scale)
    : engine_(seed), quantum_(std::ldexp(1.0, std::ilogb(scale) - 30)) {}

double Rng::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::snap(double value) const { return std::round(value / quantum_) * quantum_; }

double Rng::uniform(double lo, double hi) { return snap(lo + (hi - lo) * unit()); }

double Rng::positive(double hi) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    const double v = snap(hi * (1.0 - unit()));
    if (v > kPositiveFloor) return v;
  }
  throw InputError("scale too small to draw entries above the positive floor");
}

bool Rng::bernoulli(double p) { return unit() < p; }

std::size_t Rng::index(std::size_t bound) {
  return static_cast<std::size_t>(unit() * static_cast<double>(bound)) % bound;
}

namespace {

LabeledMatrix closed(std::size_t n, std::vector<double> raw) {
  kernels::parallel::min_plus_closure(raw, n);
  return LabeledMatrix(LabeledMatrix::default_labels(n), std::move(raw));
}

// Raw off-diagonal draw: 0 with probability `ties`, else in (floor, scale].
double raw_draw(Rng& rng, const GenSpec& spec, double ties) {
  if (ties > 0.0 && rng.bernoulli(ties)) return 0.0;
  return rng.positive(spec.scale);
}

LabeledMatrix symmetric_base(const GenSpec& spec, double ties) {
  spec.validate();
  const std::size_t n = spec.n;
  Rng rng(spec.seed, spec.scale);
  std::vector<double> raw(n * n, 0.0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) raw[x * n + y] = raw[y * n + x] = raw_draw(rng, spec, ties);
  return closed(n, std::move(raw));
}

LabeledMatrix directed_base(const GenSpec& spec, double ties) {
  spec.validate();
  const std::size_t n = spec.n;
  Rng rng(spec.seed, spec.scale);
  std::vector<double> raw(n * n, 0.0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (x != y) raw[x * n + y] = raw_draw(rng, spec, ties);
  return closed(n, std::move(raw));
}

// Derived stream so the gauge does not reuse the base's draws.
GenSpec gauge_spec(const GenSpec& spec) {
  GenSpec g = spec;
  g.seed = spec.seed ^ 0x9e3779b97f4a7c15ULL;
  return g;
}

}  // namespace

LabeledMatrix gen_uniform(const GenSpec& spec, bool symmetric) {
  spec.validate();
  const std::size_t n = spec.n;
  Rng rng(spec.seed, spec.scale);
  std::vector<double> v(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = symmetric ? x : 0; y < n; ++y) {
      v[x * n + y] = rng.uniform(-spec.scale, spec.scale);
      if (symmetric) v[y * n + x] = v[x * n + y];
    }
  return LabeledMatrix(LabeledMatrix::default_labels(n), std::move(v));
}

LabelFunction gen_function(const GenSpec& spec, double lo, double hi) {
  spec.validate();
  Rng rng(spec.seed, spec.scale);
  std::vector<double> v(spec.n);
  for (double& value : v) value = rng.uniform(lo, hi);
  return LabelFunction(LabeledMatrix::default_labels(spec.n), std::move(v));
}

LabeledMatrix gen_metric(const GenSpec& spec) { return symmetric_base(spec, 0.0); }

LabeledMatrix gen_semi_metric(const GenSpec& spec) {
  return symmetric_base(spec, spec.tie_probability);
}

LabeledMatrix gen_quasi_semi_metric(const GenSpec& spec) {
  return directed_base(spec, spec.tie_probability);
}

LabeledMatrix gen_potential_difference(const GenSpec& spec) {
  return potential_difference(gen_function(spec, -spec.scale, spec.scale));
}

LabeledMatrix gen_protometric(const GenSpec& spec, InequalityType ty, bool strict) {
  const double ties = strict ? 0.0 : spec.tie_probability;
  const LabeledMatrix base =
      ty == InequalityType::t ? directed_base(spec, ties) : symmetric_base(spec, ties);
  return compose(base, gen_function(gauge_spec(spec), -spec.scale, spec.scale));
}

LabeledMatrix gen_zero_protometric(const GenSpec& spec) {
  spec.validate();
  const std::size_t n = spec.n;
  Rng rng(spec.seed, spec.scale);
  std::vector<double> a(n), b(n);
  for (double& v : a) v = rng.uniform(-spec.scale, spec.scale);
  for (double& v : b) v = rng.uniform(-spec.scale, spec.scale);
  return LabeledMatrix::from_function(LabeledMatrix::default_labels(n),
                                      [&](auto x, auto y) { return a[x] + b[y]; });
}

LabeledMatrix perturb_violation(const LabeledMatrix& m, InequalityType ty, double magnitude,
                                const ToleranceConfig& tol) {
  if (!std::isfinite(magnitude) || !(magnitude > 0.0))
    throw InputError("perturbation magnitude must be positive");
  const std::size_t n = m.size();
  if (n < 2) throw InputError("perturbation needs at least two points");
  if (!check_prequadrangle(m, ty, tol).passed())
    throw PreconditionError("perturb: input already fails the type " + std::string(to_string(ty)) +
                            " pre-quadrangle inequality");

  // Entry positions of the lhs terms, mirroring kernels::TriangleTerm.
  auto lhs_entries = [ty](std::size_t x, std::size_t y, std::size_t z) {
    using P = std::pair<std::size_t, std::size_t>;
    switch (ty) {
      case InequalityType::o: return std::pair<P, P>{{x, y}, {x, z}};
      case InequalityType::i: return std::pair<P, P>{{y, x}, {z, x}};
      case InequalityType::t: return std::pair<P, P>{{y, x}, {x, z}};
      case InequalityType::c: return std::pair<P, P>{{z, x}, {x, y}};
    }
    return std::pair<P, P>{};
  };

  const kernels::TriangleTerm term{m.data(), n, ty, true};
  struct Choice {
    double slack = std::numeric_limits<double>::infinity();
    std::size_t y = 0, z = 0;
    bool found = false;
  };
  Choice off_diagonal, diagonal;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const std::pair<std::size_t, std::size_t> target{y, z};
        const auto [first, second] = lhs_entries(x, y, z);
        if (target == first || target == second || (y == x && z == x)) continue;
        const double slack = term(x, y, z).slack;
        Choice& slot = y == z ? diagonal : off_diagonal;
        if (!slot.found || slack < slot.slack) slot = {slack, y, z, true};
      }
  const Choice& pick = off_diagonal.found ? off_diagonal : diagonal;
  if (!pick.found) throw InputError("perturb: no eligible triple");

  LabeledMatrix out = m;
  out.set(pick.y, pick.z, m(pick.y, pick.z) + (std::max(pick.slack, 0.0) + magnitude));
  return out;
}

}  // namespace protometric
