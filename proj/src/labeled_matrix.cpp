#include "protometric/labeled_matrix.hpp"

#include <bit>
#include <cmath>
#include <cstdint>

#include "protometric/errors.hpp"

namespace protometric {

std::string_view to_string(InequalityType ty) {
  switch (ty) {
    case InequalityType::o: return "o";
    case InequalityType::i: return "i";
    case InequalityType::t: return "t";
    case InequalityType::c: return "c";
  }
  return "?";
}

std::optional<InequalityType> parse_inequality_type(std::string_view text) {
  if (text == "o") return InequalityType::o;
  if (text == "i") return InequalityType::i;
  if (text == "t") return InequalityType::t;
  if (text == "c") return InequalityType::c;
  return std::nullopt;
}

std::string_view to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::pass: return "PASS";
    case VerdictStatus::fail: return "FAIL";
    case VerdictStatus::not_applicable: return "NOT_APPLICABLE";
  }
  return "?";
}

void ToleranceConfig::validate() const {
  for (double eps : {eps_ineq, eps_eq, eps_strict})
    if (!std::isfinite(eps) || eps < 0.0)
      throw InputError("tolerances must be finite and nonnegative");
}

ParseError::ParseError(const std::string& what, std::size_t row, std::size_t column)
    : InputError(row == 0 ? what
                          : what + " (row " + std::to_string(row) +
                                (column == 0 ? "" : ", column " + std::to_string(column)) + ")"),
      row_(row),
      column_(column) {}

namespace {

bool same_bits(double a, double b) {
  return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
}

}  // namespace

LabeledMatrix::LabeledMatrix(std::vector<std::string> labels, std::vector<double> entries)
    : labels_(std::move(labels)), entries_(std::move(entries)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw InputError("a matrix needs at least one label");
  if (entries_.size() != n * n)
    throw InputError("matrix has " + std::to_string(entries_.size()) + " entries but " +
                     std::to_string(n) + " labels");
  for (std::size_t k = 0; k < n; ++k) {
    if (labels_[k].empty()) throw InputError("labels must be nonempty");
    if (!index_.emplace(labels_[k], k).second)
      throw InputError("duplicate label '" + labels_[k] + "'");
  }
  for (std::size_t k = 0; k < entries_.size(); ++k)
    if (!std::isfinite(entries_[k]))
      throw InputError("non-finite entry at (" + labels_[k / n] + ", " + labels_[k % n] + ")");
}

LabeledMatrix LabeledMatrix::filled(std::vector<std::string> labels, double value) {
  const std::size_t n = labels.size();
  return LabeledMatrix(std::move(labels), std::vector<double>(n * n, value));
}

LabeledMatrix LabeledMatrix::from_function(
    std::vector<std::string> labels,
    const std::function<double(std::size_t, std::size_t)>& entry) {
  const std::size_t n = labels.size();
  std::vector<double> values(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) values[x * n + y] = entry(x, y);
  return LabeledMatrix(std::move(labels), std::move(values));
}

std::vector<std::string> LabeledMatrix::default_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) labels.push_back("x" + std::to_string(k));
  return labels;
}

double LabeledMatrix::at(std::string_view x, std::string_view y) const {
  return (*this)(require_index(x), require_index(y));
}

void LabeledMatrix::set(std::size_t x, std::size_t y, double value) {
  if (!std::isfinite(value)) throw InputError("matrix entries must be finite");
  entries_[x * size() + y] = value;
}

std::optional<std::size_t> LabeledMatrix::index_of(std::string_view label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t LabeledMatrix::require_index(std::string_view label) const {
  if (auto k = index_of(label)) return *k;
  throw InputError("unknown label '" + std::string(label) + "'");
}

LabeledMatrix LabeledMatrix::permuted(std::span<const std::size_t> order) const {
  const std::size_t n = size();
  if (order.size() != n) throw InputError("permutation size does not match matrix");
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t k : order) labels.push_back(labels_.at(k));
  std::vector<double> values(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) values[x * n + y] = (*this)(order[x], order[y]);
  return LabeledMatrix(std::move(labels), std::move(values));
}

bool LabeledMatrix::bitwise_equal(const LabeledMatrix& other) const {
  if (labels_ != other.labels_) return false;
  for (std::size_t k = 0; k < entries_.size(); ++k)
    if (!same_bits(entries_[k], other.entries_[k])) return false;
  return true;
}

LabelFunction::LabelFunction(std::vector<std::string> labels, std::vector<double> values)
    : labels_(std::move(labels)), values_(std::move(values)) {
  if (labels_.size() != values_.size())
    throw InputError("label function has " + std::to_string(values_.size()) + " values for " +
                     std::to_string(labels_.size()) + " labels");
  std::map<std::string_view, int> seen;
  for (std::size_t k = 0; k < labels_.size(); ++k) {
    if (!seen.emplace(labels_[k], 0).second)
      throw InputError("duplicate label '" + labels_[k] + "'");
    if (!std::isfinite(values_[k]))
      throw InputError("non-finite value for label '" + labels_[k] + "'");
  }
}

double LabelFunction::at(std::string_view label) const {
  for (std::size_t k = 0; k < labels_.size(); ++k)
    if (labels_[k] == label) return values_[k];
  throw InputError("unknown label '" + std::string(label) + "'");
}

std::vector<double> LabelFunction::aligned_to(const std::vector<std::string>& labels) const {
  if (labels.size() != labels_.size())
    throw InputError("label function covers " + std::to_string(labels_.size()) +
                     " labels, matrix has " + std::to_string(labels.size()));
  if (labels == labels_) return values_;
  std::vector<double> out;
  out.reserve(labels.size());
  for (const auto& label : labels) out.push_back(at(label));
  return out;
}

bool LabelFunction::bitwise_equal(const LabelFunction& other) const {
  if (labels_ != other.labels_) return false;
  for (std::size_t k = 0; k < values_.size(); ++k)
    if (!same_bits(values_[k], other.values_[k])) return false;
  return true;
}

}  // namespace protometric
