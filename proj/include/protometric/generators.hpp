#pragma once

#include <cstdint>
#include <random>

#include "protometric/labeled_matrix.hpp"

namespace protometric {

/// Parameters shared by all generators.
///
/// Randomness comes from std::mt19937_64 seeded with `seed` (the standard
/// fixes its output sequence). A unit draw is (next() >> 11) * 2^-53. Drawn
/// values are then snapped to a dyadic grid of step 2^(ilogb(scale) - 30),
/// which keeps min-plus closures, gauges and the decompose/compose pair exact
/// in double precision.
struct GenSpec {
  std::size_t n = 1;
  std::uint64_t seed = 0;
  double scale = 10.0;
  /// Probability that a raw off-diagonal draw is exactly 0 (bases that are
  /// allowed to have ties: semi-metrics, quasi-semi-metrics, non-strict
  /// protometrics).
  double tie_probability = 0.0;

  void validate() const;
};

/// Draws below this are rejected when a strictly positive entry is required.
inline constexpr double kPositiveFloor = 1e-9;

class Rng {
 public:
  explicit Rng(std::uint64_t seed, double scale);

  double unit();                          // [0, 1)
  double uniform(double lo, double hi);   // grid-snapped, in [lo, hi]
  double positive(double hi);             // grid-snapped, in (kPositiveFloor, hi]
  bool bernoulli(double p);
  std::size_t index(std::size_t bound);   // [0, bound)
  double snap(double value) const;

 private:
  std::mt19937_64 engine_;
  double quantum_;
};

/// Entries uniform in [-scale, scale]; optionally exactly symmetric.
LabeledMatrix gen_uniform(const GenSpec& spec, bool symmetric);
LabelFunction gen_function(const GenSpec& spec, double lo, double hi);

/// Symmetric positive draws, zero diagonal, min-plus closure.
LabeledMatrix gen_metric(const GenSpec& spec);
/// Like gen_metric but with ties allowed (tie_probability).
LabeledMatrix gen_semi_metric(const GenSpec& spec);
/// Asymmetric draws, zero diagonal, directed min-plus closure.
LabeledMatrix gen_quasi_semi_metric(const GenSpec& spec);
/// h(x) - h(y) with h uniform in [-scale, scale].
LabeledMatrix gen_potential_difference(const GenSpec& spec);

/// compose(base, f), f uniform in [-scale, scale]. Type t uses a
/// quasi-semi-metric base; o, i, c use a symmetric base. `strict` forces a
/// strictly positive base (no ties).
LabeledMatrix gen_protometric(const GenSpec& spec, InequalityType ty, bool strict);

/// a(x) + b(y) with a, b uniform in [-scale, scale].
LabeledMatrix gen_zero_protometric(const GenSpec& spec);

/// Raises one right-hand-side entry p(y,z) of the tightest eligible triple
/// by (slack + magnitude) so that the type-`ty` pre-quadrangle check fails.
/// Eligible triples are those whose rhs entry does not also occur on the
/// left or as p(x,x); off-diagonal targets are preferred when n >= 3.
LabeledMatrix perturb_violation(const LabeledMatrix& m, InequalityType ty, double magnitude,
                                const ToleranceConfig& tol = {});

}  // namespace protometric
