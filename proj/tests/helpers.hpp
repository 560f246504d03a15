#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "protometric/labeled_matrix.hpp"

namespace testing_support {

inline protometric::LabeledMatrix mat(std::initializer_list<std::initializer_list<double>> rows,
                                      std::vector<std::string> labels = {}) {
  std::vector<double> values;
  for (const auto& row : rows) values.insert(values.end(), row.begin(), row.end());
  if (labels.empty()) labels = protometric::LabeledMatrix::default_labels(rows.size());
  return protometric::LabeledMatrix(std::move(labels), std::move(values));
}

inline protometric::LabelFunction fn(std::initializer_list<double> values,
                                     std::vector<std::string> labels = {}) {
  if (labels.empty()) labels = protometric::LabeledMatrix::default_labels(values.size());
  return protometric::LabelFunction(std::move(labels), std::vector<double>(values));
}

inline bool all_entries(const protometric::LabeledMatrix& m, double expected, double tol = 0.0) {
  for (double v : m.entries())
    if (!(v >= expected - tol && v <= expected + tol)) return false;
  return true;
}

}  // namespace testing_support
