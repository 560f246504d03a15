#include "protometric/classify.hpp"

#include <cmath>

#include "protometric/checks.hpp"
#include "protometric/transforms.hpp"

namespace protometric {

std::vector<std::pair<std::string, bool>> ClassificationReport::flags() const {
  return {
      {"symmetric", symmetric},
      {"nonnegative", nonnegative},
      {"zero_diagonal", zero_diagonal},
      {"identity_of_indiscernibles", identity_of_indiscernibles},
      {"triangle_o", triangle_o},
      {"triangle_i", triangle_i},
      {"triangle_t", triangle_t},
      {"triangle_c", triangle_c},
      {"prequad_o", prequad_o},
      {"prequad_i", prequad_i},
      {"prequad_t", prequad_t},
      {"prequad_c", prequad_c},
      {"strict_protometric", strict_protometric},
      {"zero_protometric", zero_protometric},
      {"difference_protometric", difference_protometric},
      {"quasi_semi_metric", quasi_semi_metric},
      {"semi_metric", semi_metric},
      {"metric", metric},
      {"potential_difference", potential_difference},
      {"symmetric_protometric", symmetric_protometric},
      {"weak_partial_pseudo_metric", weak_partial_pseudo_metric},
  };
}

ClassificationReport classify(const LabeledMatrix& m, const ToleranceConfig& tol,
                              const CheckOptions& opts) {
  tol.validate();
  const std::size_t n = m.size();
  ClassificationReport r;
  r.labels = m.labels();
  r.tolerances = tol;

  r.symmetric = true;
  r.nonnegative = true;
  r.zero_diagonal = true;
  bool separated = true;
  bool zero_defect = true;  // p(x,y) + p(y,x) - p(x,x) - p(y,y) == 0
  bool diagonal_nonnegative = true;
  for (std::size_t x = 0; x < n; ++x) {
    if (std::abs(m(x, x)) > tol.eps_eq) r.zero_diagonal = false;
    if (m(x, x) < -tol.eps_ineq) diagonal_nonnegative = false;
    for (std::size_t y = 0; y < n; ++y) {
      if (std::abs(m(x, y) - m(y, x)) > tol.eps_eq) r.symmetric = false;
      if (m(x, y) < -tol.eps_ineq) r.nonnegative = false;
      if (x != y && !(std::abs(m(x, y)) > tol.eps_strict)) separated = false;
      if (std::abs((m(x, y) + m(y, x)) - (m(x, x) + m(y, y))) > tol.eps_eq) zero_defect = false;
    }
  }
  r.identity_of_indiscernibles = r.zero_diagonal && separated;

  for (std::size_t k = 0; k < kAllTypes.size(); ++k) {
    r.triangle[k] = check_triangle(m, kAllTypes[k], tol, opts);
    r.prequadrangle[k] = check_prequadrangle(m, kAllTypes[k], tol, opts);
  }
  r.triangle_o = r.triangle[0].passed();
  r.triangle_i = r.triangle[1].passed();
  r.triangle_t = r.triangle[2].passed();
  r.triangle_c = r.triangle[3].passed();
  r.prequad_o = r.prequadrangle[0].passed();
  r.prequad_i = r.prequadrangle[1].passed();
  r.prequad_t = r.prequadrangle[2].passed();
  r.prequad_c = r.prequadrangle[3].passed();

  r.strict = check_strict(m, InequalityType::t, tol, opts);
  r.strict_protometric = r.prequad_t && r.strict.passed();
  r.zero_protometric = r.prequad_t && zero_defect;
  r.difference_protometric = r.prequad_t && r.zero_diagonal;
  r.quasi_semi_metric = r.difference_protometric && r.nonnegative;
  r.semi_metric = r.quasi_semi_metric && r.symmetric;
  r.metric = r.semi_metric && r.identity_of_indiscernibles;
  r.potential_difference = try_potential_of(m, tol).has_value();
  r.symmetric_protometric = r.symmetric && r.prequad_o && r.prequad_i && r.prequad_t && r.prequad_c;
  r.weak_partial_pseudo_metric = r.symmetric_protometric && diagonal_nonnegative;
  return r;
}

}  // namespace protometric
