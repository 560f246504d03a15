#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

namespace protometric {

enum class VerdictStatus { pass, fail, not_applicable };

std::string_view to_string(VerdictStatus status);

/// One violated instance (x, y, z) of an inequality `lhs >= rhs`.
/// deficit = rhs - lhs for the additive checks. The transition check reads
/// `lhs <= rhs`, so there deficit = lhs - rhs * (1 + eps_ineq).
struct ViolationWitness {
  std::string x, y, z;
  std::size_t ix = 0, iy = 0, iz = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double deficit = 0.0;
};

struct PropertyVerdict {
  VerdictStatus status = VerdictStatus::pass;
  std::vector<ViolationWitness> witnesses;  // first `witness_cap`, row-major
  double min_slack = std::numeric_limits<double>::infinity();
  std::size_t count_checked = 0;
  std::size_t violation_count = 0;

  bool passed() const noexcept { return status == VerdictStatus::pass; }
};

struct CheckOptions {
  std::size_t witness_cap = 10;
  bool parallel = true;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool nonempty = true;
};

struct DiagonalBound {
  std::string label;
  Interval interval;
  bool member = true;
};

}  // namespace protometric
