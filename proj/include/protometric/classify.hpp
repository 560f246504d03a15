#pragma once

#include <array>
#include <string>
#include <vector>

#include "protometric/labeled_matrix.hpp"
#include "protometric/verdict.hpp"

namespace protometric {

/// Membership of one matrix in every class of the taxonomy.
struct ClassificationReport {
  std::vector<std::string> labels;
  ToleranceConfig tolerances;

  bool symmetric = false;
  bool nonnegative = false;
  bool zero_diagonal = false;
  bool identity_of_indiscernibles = false;
  bool triangle_o = false;
  bool triangle_i = false;
  bool triangle_t = false;
  bool triangle_c = false;
  bool prequad_o = false;
  bool prequad_i = false;
  bool prequad_t = false;
  bool prequad_c = false;
  bool strict_protometric = false;
  bool zero_protometric = false;
  bool difference_protometric = false;
  bool quasi_semi_metric = false;
  bool semi_metric = false;
  bool metric = false;
  bool potential_difference = false;
  bool symmetric_protometric = false;
  bool weak_partial_pseudo_metric = false;

  // Indexed like kAllTypes.
  std::array<PropertyVerdict, 4> triangle;
  std::array<PropertyVerdict, 4> prequadrangle;
  PropertyVerdict strict;  // type t

  /// (name, value) pairs in the canonical serialization order.
  std::vector<std::pair<std::string, bool>> flags() const;
};

ClassificationReport classify(const LabeledMatrix& m, const ToleranceConfig& tol = {},
                              const CheckOptions& opts = {});

}  // namespace protometric
