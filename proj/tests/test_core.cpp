#include <doctest.h>

#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "protometric/checks.hpp"
#include "protometric/classify.hpp"
#include "protometric/errors.hpp"
#include "protometric/generators.hpp"
#include "protometric/transforms.hpp"

using namespace protometric;
using testing_support::mat;

namespace {

const LabeledMatrix kPath = mat({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});
const LabeledMatrix kPotential = mat({{0, -1, -3}, {1, 0, -2}, {3, 2, 0}});

char letter(InequalityType ty) { return to_string(ty)[0]; }

}  // namespace

TEST_CASE("LabeledMatrix rejects invalid input") {
  CHECK_THROWS_AS(LabeledMatrix({}, {}), InputError);
  CHECK_THROWS_AS(LabeledMatrix({"a", "b"}, {1, 2, 3}), InputError);
  CHECK_THROWS_AS(LabeledMatrix({"a", "a"}, {0, 0, 0, 0}), InputError);
  CHECK_THROWS_AS(LabeledMatrix({"a"}, {NAN}), InputError);
  CHECK_THROWS_AS(LabeledMatrix({"a"}, {INFINITY}), InputError);
  CHECK_THROWS_AS(LabeledMatrix({""}, {0}), InputError);

  auto m = mat({{1, 2}, {3, 4}}, {"a", "b"});
  CHECK(m.at("b", "a") == 3);
  CHECK_THROWS_AS(m.at("c", "a"), InputError);
  CHECK_THROWS_AS(m.set(0, 0, NAN), InputError);
  const std::vector<std::size_t> order{1, 0};
  auto p = m.permuted(order);
  CHECK(p.labels() == std::vector<std::string>{"b", "a"});
  CHECK(p.at("a", "b") == 2);
}

TEST_CASE("ToleranceConfig validation") {
  CHECK_NOTHROW(ToleranceConfig{}.validate());
  CHECK_THROWS_AS((ToleranceConfig{-1.0, 0, 0}.validate()), InputError);
  CHECK_THROWS_AS((ToleranceConfig{0, NAN, 0}.validate()), InputError);
}

TEST_CASE("check_triangle on the worked examples") {
  SUBCASE("zero function") {
    auto v = check_triangle(LabeledMatrix::filled(LabeledMatrix::default_labels(3), 0.0),
                            InequalityType::t);
    CHECK(v.passed());
    CHECK(v.min_slack == 0.0);
    CHECK(v.count_checked == 27);
  }
  SUBCASE("path metric passes every type") {
    for (auto ty : kAllTypes) CHECK(check_triangle(kPath, ty).passed());
  }
  SUBCASE("potential difference passes t at equality and fails o") {
    auto t = check_triangle(kPotential, InequalityType::t);
    CHECK(t.passed());
    CHECK(t.min_slack == 0.0);

    auto o = check_triangle(kPotential, InequalityType::o);
    REQUIRE(o.status == VerdictStatus::fail);
    CHECK(o.violation_count == 9);
    CHECK(o.min_slack == -6.0);
    // first violation in row-major order (frozen from the brute-force oracle)
    CHECK(o.witnesses.front().x == "x1");
    CHECK(o.witnesses.front().y == "x2");
    CHECK(o.witnesses.front().z == "x1");
    CHECK(o.witnesses.front().lhs == -1.0);
    CHECK(o.witnesses.front().rhs == 1.0);
    CHECK(o.witnesses.front().deficit == 2.0);
    // the (1st, 3rd, 3rd) triple is among the witnesses with lhs -6, rhs 0
    bool found = false;
    for (const auto& w : o.witnesses)
      if (w.ix == 0 && w.iy == 2 && w.iz == 2) {
        found = true;
        CHECK(w.lhs == -6.0);
        CHECK(w.rhs == 0.0);
      }
    CHECK(found);
  }
}

TEST_CASE("witness cap keeps the first k in row-major order") {
  GenSpec spec{6, 11, 10.0};
  auto m = gen_uniform(spec, false);
  auto all = check_triangle(m, InequalityType::o, {}, {1000, true});
  auto capped = check_triangle(m, InequalityType::o, {}, {3, true});
  REQUIRE(all.violation_count > 3);
  CHECK(capped.violation_count == all.violation_count);
  REQUIRE(capped.witnesses.size() == 3);
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(capped.witnesses[k].ix == all.witnesses[k].ix);
    CHECK(capped.witnesses[k].iy == all.witnesses[k].iy);
    CHECK(capped.witnesses[k].iz == all.witnesses[k].iz);
  }
  for (std::size_t k = 1; k < all.witnesses.size(); ++k) {
    const auto& a = all.witnesses[k - 1];
    const auto& b = all.witnesses[k];
    CHECK(std::tie(a.ix, a.iy, a.iz) < std::tie(b.ix, b.iy, b.iz));
  }
}

TEST_CASE("verdict invariants") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    GenSpec spec{2 + static_cast<std::size_t>(trial % 5), rng(), 10.0};
    auto m = gen_uniform(spec, trial % 2 == 0);
    for (auto ty : kAllTypes) {
      for (const auto& v : {check_triangle(m, ty), check_prequadrangle(m, ty)}) {
        CHECK((v.status == VerdictStatus::fail) == !v.witnesses.empty());
        CHECK((v.min_slack >= -1e-9) == v.passed());
        for (const auto& w : v.witnesses) CHECK(w.deficit > 1e-9);
      }
    }
  }
}

TEST_CASE("check_prequadrangle on the worked examples") {
  auto sep = LabeledMatrix::from_function(LabeledMatrix::default_labels(3), [](auto x, auto y) {
    const double f[] = {1, 2, 3};
    return f[x] + f[y];
  });
  auto constant = LabeledMatrix::filled(LabeledMatrix::default_labels(3), 5.0);
  for (auto ty : kAllTypes) {
    auto a = check_prequadrangle(sep, ty);
    CHECK(a.passed());
    CHECK(a.min_slack == 0.0);
    auto b = check_prequadrangle(constant, ty);
    CHECK(b.passed());
    CHECK(b.min_slack == 0.0);
    CHECK(check_prequadrangle(kPath, ty).passed());
  }
}

TEST_CASE("check_strict") {
  CHECK(check_strict(mat({{0, 1}, {1, 0}}), InequalityType::t).passed());
  auto zero = check_strict(mat({{0, 0}, {0, 0}}), InequalityType::t);
  CHECK(zero.status == VerdictStatus::fail);
  CHECK(zero.witnesses.front().y == zero.witnesses.front().z);
  auto v = check_strict(mat({{1, 3}, {3, 2}}), InequalityType::t);
  CHECK(v.passed());
  CHECK(v.min_slack == 3.0);  // 3 + 3 - (1 + 2)
  auto single = check_strict(mat({{4}}), InequalityType::t);
  CHECK(single.passed());
  CHECK(single.count_checked == 0);
}

TEST_CASE("diagonal_bounds") {
  SUBCASE("two-point metric, type t") {
    for (const auto& b : diagonal_bounds(mat({{0, 1}, {1, 0}}), InequalityType::t)) {
      CHECK(b.interval.lo == 0.0);
      CHECK(b.interval.hi == 0.0);
      CHECK(b.member);
    }
  }
  SUBCASE("zero function, every type") {
    auto zero = LabeledMatrix::filled(LabeledMatrix::default_labels(3), 0.0);
    for (auto ty : kAllTypes)
      for (const auto& b : diagonal_bounds(zero, ty)) {
        CHECK(b.interval.lo == 0.0);
        CHECK(b.interval.hi == 0.0);
        CHECK(b.member);
      }
  }
  SUBCASE("potential difference, type t") {
    for (const auto& b : diagonal_bounds(kPotential, InequalityType::t)) {
      CHECK(b.interval.lo == 0.0);
      CHECK(b.interval.hi == 0.0);
      CHECK(b.member);
    }
  }
  SUBCASE("non-membership is reported, not thrown") {
    auto bounds = diagonal_bounds(mat({{-1, 1}, {1, 0}}), InequalityType::t);
    CHECK_FALSE(bounds[0].member);
    CHECK(bounds[1].member);
  }
  SUBCASE("type o interval, asymmetric") {
    // m = metric + g(y): o-triangle holds; d(x,x) = g(x)
    auto m = mat({{1, 3}, {2, 2}});
    REQUIRE(check_triangle(m, InequalityType::o).passed());
    auto b = diagonal_bounds(m, InequalityType::o);
    CHECK(b[0].interval.lo == 0.0);   // max(1-1, 2-3)
    CHECK(b[0].interval.hi == 2.0);   // 2 min(1, 2)
    CHECK(b[1].interval.lo == 1.0);   // max(3-2, 2-2)
    CHECK(b[1].interval.hi == 4.0);   // 2 min(3, 2)
    CHECK(b[0].member);
    CHECK(b[1].member);
  }
}

TEST_CASE("check_transition") {
  auto ones = LabeledMatrix::filled(LabeledMatrix::default_labels(3), 1.0);
  auto v = check_transition(ones);
  CHECK(v.passed());

  auto separable = LabeledMatrix::from_function(LabeledMatrix::default_labels(3), [](auto x, auto y) {
    const double f[] = {0, 1, 2};
    return std::exp(-(f[x] + f[y]));
  });
  CHECK(check_transition(separable).passed());

  auto s = LabeledMatrix::from_function(kPath.labels(),
                                        [&](auto x, auto y) { return std::exp(-kPath(x, y)); });
  CHECK(check_transition(s).passed());

  auto with_zero = mat({{1, 0}, {1, 1}});
  CHECK(check_transition(with_zero, {}, {}, true).status == VerdictStatus::not_applicable);
  CHECK(check_transition(with_zero, {}, {}, true).witnesses.empty());
  CHECK(check_transition(with_zero).status != VerdictStatus::not_applicable);

  // s(y,x) s(x,z) > s(y,z) s(x,x) for x=2, y=1, z=1: 2*2 > 1*1
  auto bad = mat({{1, 2}, {2, 1}});
  auto f = check_transition(bad);
  CHECK(f.status == VerdictStatus::fail);
  CHECK(f.witnesses.front().deficit > 1e-9);

  // The absolute term of the band hides violations among tiny products: the
  // same ratio as `bad`, scaled by 1e-6, passes at the default tolerance.
  auto tiny = mat({{1e-6, 2e-6}, {2e-6, 1e-6}});
  CHECK(check_transition(tiny).passed());
  CHECK_FALSE(check_transition(tiny, {0.0, 1e-9, 1e-9}).passed());
}

TEST_CASE("classify on the worked examples") {
  SUBCASE("path metric") {
    auto r = classify(kPath);
    CHECK(r.metric);
    CHECK(r.triangle_o);
    CHECK(r.triangle_i);
    CHECK(r.triangle_t);
    CHECK(r.triangle_c);
    CHECK(r.prequad_o);
    CHECK(r.prequad_i);
    CHECK(r.prequad_t);
    CHECK(r.prequad_c);
    CHECK(r.strict_protometric);
    CHECK_FALSE(r.zero_protometric);
    CHECK_FALSE(r.potential_difference);
  }
  SUBCASE("potential difference") {
    auto r = classify(kPotential);
    CHECK(r.difference_protometric);
    CHECK(r.zero_protometric);
    CHECK(r.potential_difference);
    CHECK_FALSE(r.quasi_semi_metric);
    CHECK_FALSE(r.symmetric);
  }
  SUBCASE("symmetric protometric with positive diagonal") {
    auto r = classify(mat({{1, 3}, {3, 2}}));
    CHECK(r.symmetric_protometric);
    CHECK(r.weak_partial_pseudo_metric);
    CHECK_FALSE(r.metric);
    CHECK(r.prequadrangle[2].count_checked == 8);
  }
  SUBCASE("cyclic antisymmetric matrix satisfies the 0-identity but is no protometric") {
    auto r = classify(mat({{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}}));
    CHECK_FALSE(r.prequad_t);
    CHECK_FALSE(r.zero_protometric);
    CHECK_FALSE(r.potential_difference);
  }
}

namespace {

void check_chain(const ClassificationReport& r) {
  CHECK((!r.metric || r.semi_metric));
  CHECK((!r.semi_metric || r.quasi_semi_metric));
  CHECK((!r.quasi_semi_metric || r.difference_protometric));
  CHECK((!r.difference_protometric || r.prequad_t));
  if (r.symmetric)
    CHECK(r.symmetric_protometric == (r.prequad_o && r.prequad_i && r.prequad_t && r.prequad_c));
  CHECK((!r.weak_partial_pseudo_metric || r.symmetric_protometric));
}

std::vector<LabeledMatrix> mixed_corpus(std::uint64_t seed, std::size_t count) {
  std::vector<LabeledMatrix> out;
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < count; ++k) {
    GenSpec spec{2 + k % 6, rng(), 10.0, 0.25};
    switch (k % 7) {
      case 0: out.push_back(gen_uniform(spec, false)); break;
      case 1: out.push_back(gen_uniform(spec, true)); break;
      case 2: out.push_back(gen_metric(spec)); break;
      case 3: out.push_back(gen_quasi_semi_metric(spec)); break;
      case 4: out.push_back(gen_protometric(spec, kAllTypes[k % 4], k % 2 == 0)); break;
      case 5: out.push_back(gen_potential_difference(spec)); break;
      default: out.push_back(gen_zero_protometric(spec)); break;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("checkers agree with the brute-force oracle") {
  for (const auto& m : mixed_corpus(17, 140)) {
    const auto g = oracle::to_grid(m);
    for (auto ty : kAllTypes) {
      const auto t = check_triangle(m, ty);
      const auto p = check_prequadrangle(m, ty);
      CHECK(t.passed() == oracle::triangle(g, letter(ty)));
      CHECK(p.passed() == oracle::prequad(g, letter(ty)));
      CHECK(t.min_slack == oracle::min_slack(g, letter(ty), false));
      CHECK(p.min_slack == oracle::min_slack(g, letter(ty), true));
      CHECK(t.violation_count == oracle::violations(g, letter(ty), false));
    }
  }
}

TEST_CASE("classification invariants on a mixed corpus") {
  for (const auto& m : mixed_corpus(23, 140)) {
    const auto r = classify(m);
    check_chain(r);

    // symmetry collapse
    if (r.symmetric && m.bitwise_equal(transpose(m))) {
      for (std::size_t k = 1; k < 4; ++k) {
        CHECK(r.triangle[k].status == r.triangle[0].status);
        CHECK(r.prequadrangle[k].status == r.prequadrangle[0].status);
      }
    }

    // transpose duality
    const auto rt = classify(transpose(m));
    CHECK(rt.triangle[1].status == r.triangle[0].status);
    CHECK(rt.triangle[0].status == r.triangle[1].status);
    CHECK(rt.triangle[2].status == r.triangle[2].status);
    CHECK(rt.triangle[3].status == r.triangle[3].status);
    CHECK(rt.prequadrangle[1].status == r.prequadrangle[0].status);
    CHECK(rt.prequadrangle[0].status == r.prequadrangle[1].status);
    CHECK(rt.prequadrangle[2].status == r.prequadrangle[2].status);
    CHECK(rt.prequadrangle[3].status == r.prequadrangle[3].status);

    // sign consequences
    if (r.triangle_t || r.triangle_c)
      for (std::size_t x = 0; x < m.size(); ++x) CHECK(m(x, x) >= -1e-9);
    if (r.triangle_o || r.triangle_i)
      for (double v : m.entries()) CHECK(v >= -1e-9);

    // symmetric-protometric facts
    for (std::size_t k : {0u, 1u, 3u}) {
      if (!r.prequadrangle[k].passed()) continue;
      for (std::size_t x = 0; x < m.size(); ++x)
        for (std::size_t y = 0; y < m.size(); ++y) {
          CHECK(std::abs(m(x, y) - m(y, x)) <= 1e-9);
          CHECK(m(x, y) >= 0.5 * (m(x, x) + m(y, y)) - 1e-9);
        }
    }
    if (r.prequad_t)
      for (std::size_t x = 0; x < m.size(); ++x)
        for (std::size_t y = 0; y < m.size(); ++y)
          CHECK(m(x, y) + m(y, x) >= m(x, x) + m(y, y) - 1e-9);

    // reduction on a zero diagonal
    bool zero_diag = true;
    for (std::size_t x = 0; x < m.size(); ++x) zero_diag = zero_diag && m(x, x) == 0.0;
    if (zero_diag)
      for (std::size_t k = 0; k < 4; ++k) CHECK(r.prequadrangle[k].status == r.triangle[k].status);

    // metric recognition
    if (zero_diag && r.identity_of_indiscernibles && r.nonnegative &&
        (r.triangle_o || r.triangle_i || r.triangle_c)) {
      CHECK(r.symmetric);
      CHECK(r.metric);
    }
  }
}

TEST_CASE("classify is deterministic and permutation invariant") {
  std::mt19937_64 rng(99);
  for (const auto& m : mixed_corpus(31, 70)) {
    std::vector<std::size_t> order(m.size());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    const auto a = classify(m);
    const auto b = classify(m);
    const auto p = classify(m.permuted(order));
    CHECK(a.flags() == b.flags());
    CHECK(a.flags() == p.flags());
    for (std::size_t k = 0; k < 4; ++k) {
      CHECK(a.triangle[k].violation_count == p.triangle[k].violation_count);
      CHECK(a.triangle[k].min_slack == p.triangle[k].min_slack);
    }
    // witness triples map through the permutation
    const auto perm = m.permuted(order);
    for (const auto& w : p.triangle[0].witnesses) {
      CHECK(w.lhs == m(order[w.ix], order[w.iy]) + m(order[w.ix], order[w.iz]));
      CHECK(w.x == perm.labels()[w.ix]);
    }
  }
}
