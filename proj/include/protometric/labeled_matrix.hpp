#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace protometric {

/// Orientation of a triangle or pre-quadrangle inequality.
enum class InequalityType { o, i, t, c };

inline constexpr std::array<InequalityType, 4> kAllTypes = {
    InequalityType::o, InequalityType::i, InequalityType::t, InequalityType::c};

std::string_view to_string(InequalityType ty);
std::optional<InequalityType> parse_inequality_type(std::string_view text);

/// Absolute tolerances. `a >= b` passes iff a >= b - eps_ineq, `a == b` iff
/// |a - b| <= eps_eq, and `a > b` (strictly) iff a - b > eps_strict.
struct ToleranceConfig {
  double eps_ineq = 1e-9;
  double eps_eq = 1e-9;
  double eps_strict = 1e-9;

  void validate() const;
};

/// A finite set of distinct labels together with a dense, row-major n x n
/// matrix of finite reals. Holds d, p, s or any other X x X -> R function.
class LabeledMatrix {
 public:
  LabeledMatrix(std::vector<std::string> labels, std::vector<double> entries);

  static LabeledMatrix filled(std::vector<std::string> labels, double value);
  static LabeledMatrix from_function(
      std::vector<std::string> labels,
      const std::function<double(std::size_t, std::size_t)>& entry);
  static std::vector<std::string> default_labels(std::size_t n);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::span<const double> entries() const noexcept { return entries_; }
  const double* data() const noexcept { return entries_.data(); }

  double operator()(std::size_t x, std::size_t y) const noexcept {
    return entries_[x * labels_.size() + y];
  }
  double at(std::string_view x, std::string_view y) const;
  void set(std::size_t x, std::size_t y, double value);

  std::optional<std::size_t> index_of(std::string_view label) const;
  /// Like index_of, but throws InputError naming the missing label.
  std::size_t require_index(std::string_view label) const;

  /// Relabels rows and columns: result(i, j) = (*this)(order[i], order[j]).
  LabeledMatrix permuted(std::span<const std::size_t> order) const;

  /// Equality of labels and of the bit patterns of every entry.
  bool bitwise_equal(const LabeledMatrix& other) const;

 private:
  std::vector<std::string> labels_;
  std::vector<double> entries_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

/// A real-valued function on a finite label set (gauges f, potentials h,
/// basis coordinates).
class LabelFunction {
 public:
  LabelFunction(std::vector<std::string> labels, std::vector<double> values);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<double>& values() const noexcept { return values_; }
  double operator[](std::size_t i) const noexcept { return values_[i]; }
  double at(std::string_view label) const;

  /// Values reordered to match `labels`. Throws InputError unless both label
  /// sets coincide.
  std::vector<double> aligned_to(const std::vector<std::string>& labels) const;

  bool bitwise_equal(const LabelFunction& other) const;

 private:
  std::vector<std::string> labels_;
  std::vector<double> values_;
};

}  // namespace protometric
