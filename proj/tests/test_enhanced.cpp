#include "gzl/enhanced.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace gzl;

namespace {

GZPattern base_pattern(const Partition& lambda, std::vector<std::vector<int>> free_rows) {
  GZPattern z = top_row_pattern(lambda);
  REQUIRE(free_rows.size() + 1 == z.rows.size());
  for (size_t i = 0; i < free_rows.size(); ++i) z.rows[i + 1] = free_rows[i];
  REQUIRE(pattern_is_valid(z));
  return z;
}

EnhancedPattern make(const GZPattern& base, std::set<Pos> circled, std::set<Pos> left,
                     std::set<Pos> right) {
  EnhancedPattern p;
  p.base = base;
  p.circled = std::move(circled);
  p.edge_left = std::move(left);
  p.edge_right = std::move(right);
  return p;
}

// the example bases used throughout: (0,1,2 / 1,2 / 2) and (0,1,2 / 1,1 / 1)
GZPattern base_simple() { return base_pattern({2, 1, 0}, {{1, 2}, {2}}); }
GZPattern base_nonsimple() { return base_pattern({2, 1, 0}, {{1, 1}, {1}}); }

// the worked four-dimensional pattern with rows (3,4,9 / 3,5 / 4)
EnhancedPattern pattern_dim4() {
  return make(base_pattern({9, 7, 3, 1}, {{3, 4, 9}, {3, 5}, {4}}), {{1, 3}, {2, 1}}, {{2, 1}},
              {{1, 3}});
}

} // namespace

TEST_CASE("the simple base has eight enhancements, one per circle subset") {
  auto all = enumerate_enhancements(base_simple());
  REQUIRE(all.size() == 8);
  std::set<std::set<Pos>> circle_sets;
  for (const EnhancedPattern& p : all) {
    CHECK(validate(p).empty());
    CHECK(is_efficient(p));
    CHECK(p.edge_left.empty()); // every edge in these enhancements points up-right
    CHECK(p.edge_right == p.circled);
    circle_sets.insert(p.circled);
  }
  CHECK(circle_sets.size() == 8);
}

TEST_CASE("the nonsimple base has four enhancements, two of them inefficient") {
  auto all = enumerate_enhancements(base_nonsimple());
  REQUIRE(all.size() == 4);
  int efficient = 0;
  for (const EnhancedPattern& p : all) {
    CHECK(validate(p).empty());
    CHECK(p.has_circle(1, 2)); // forced by the (a,b/a) triangle
    CHECK(p.has_left(1, 2));
    if (is_efficient(p)) ++efficient;
  }
  CHECK(efficient == 2);
}

TEST_CASE("validation pinpoints the violated condition") {
  // bottom of an all-equal triangle encircled but unjoined
  EnhancedPattern p = make(base_nonsimple(), {{1, 2}, {2, 1}}, {{1, 2}}, {});
  auto v = validate(p);
  REQUIRE_FALSE(v.empty());
  bool found = false;
  for (const Violation& viol : v)
    if (viol.condition == 8 && viol.pos == Pos{2, 1}) found = true;
  CHECK(found);
  // an edge between unequal entries
  EnhancedPattern q = make(base_simple(), {{1, 1}}, {{1, 1}}, {});
  bool cond2 = false;
  for (const Violation& viol : validate(q))
    if (viol.condition == 2) cond2 = true;
  CHECK(cond2);
}

TEST_CASE("rank") {
  auto all = enumerate_enhancements(base_simple());
  for (const EnhancedPattern& p : all)
    CHECK(rank(p) == 3 - static_cast<int>(p.circled.size()));
  EnhancedPattern final58 = make(base_simple(), {{2, 1}}, {}, {{2, 1}});
  REQUIRE(validate(final58).empty());
  CHECK(rank(final58) == 2);
}

TEST_CASE("rank-zero patterns are efficient") {
  for (const Partition& lambda : {Partition{2, 1, 0}, {2, 2, 0}})
    for (const EnhancedPattern& p : enumerate_all(lambda))
      if (rank(p) == 0) CHECK(is_efficient(p));
}

TEST_CASE("connected components of the worked pattern") {
  auto comps = connected_components(pattern_dim4());
  // {9-chain}, {3-chain y21-y11}, and six singletons
  REQUIRE(comps.size() == 8);
  int nine_chain = 0, var_chain = 0, singletons = 0;
  for (const Component& c : comps) {
    if (c.members == std::vector<Pos>{{0, 4}, {1, 3}}) {
      CHECK(c.constant);
      CHECK(c.value == 9);
      ++nine_chain;
    } else if (c.members == std::vector<Pos>{{1, 1}, {2, 1}}) {
      CHECK_FALSE(c.constant);
      CHECK(c.top == Pos{1, 1});
      ++var_chain;
    } else {
      CHECK(c.members.size() == 1);
      ++singletons;
    }
  }
  CHECK(nine_chain == 1);
  CHECK(var_chain == 1);
  CHECK(singletons == 6);
}

TEST_CASE("variable components count the rank") {
  for (const EnhancedPattern& p : enumerate_all({2, 1, 0})) {
    int variable = 0;
    for (const Component& c : connected_components(p))
      if (!c.constant) ++variable;
    CHECK(variable == rank(p));
  }
}

TEST_CASE("pattern monomials") {
  // rank zero reduces to the weight projection
  for (const EnhancedPattern& p : enumerate_all({2, 1, 0}))
    if (rank(p) == 0) {
      BetaPolynomial m = pattern_monomial(p);
      REQUIRE(m.term_count() == 1);
      CHECK(m.terms().begin()->first.beta == 0);
      CHECK(m == BetaPolynomial::x_power(project_weight({2, 1, 0}, p.base)));
    }
  EnhancedPattern final58 = make(base_simple(), {{2, 1}}, {}, {{2, 1}});
  CHECK(pattern_monomial(final58) == BetaPolynomial::term(Monomial{2, {2, 1, 2}}, 1));
  // inefficient enhancements carry the zero monomial
  for (const EnhancedPattern& p : enumerate_enhancements(base_nonsimple()))
    if (!is_efficient(p)) CHECK(pattern_monomial(p).is_zero());
}

TEST_CASE("grading of the pattern monomial") {
  for (const EnhancedPattern& p : enumerate_efficient({2, 1, 0})) {
    BetaPolynomial m = pattern_monomial(p);
    REQUIRE(m.term_count() == 1);
    const Monomial& mm = m.terms().begin()->first;
    CHECK(mm.beta == rank(p));
    int total = 0;
    for (int e : mm.exps) total += e;
    CHECK(total == 3 + rank(p)); // |lambda| + rank
  }
}

TEST_CASE("edge reconstruction") {
  EnhancedPattern p = pattern_dim4();
  EnhancedPattern q = reconstruct_edges(p.base, p.circled);
  CHECK(q == p);
  // all-circled integer point reconstructs to the rank-0 enhancement
  for (const EnhancedPattern& r : enumerate_all({2, 1, 0}))
    if (rank(r) == 0) CHECK(reconstruct_edges(r.base, r.circled) == r);
  // a circle set that admits no enhancement: the nonsimple base requires a
  // circle at (1,2)
  CHECK_THROWS_AS(reconstruct_edges(base_nonsimple(), {}), ReconstructError);
}

TEST_CASE("reconstruction round-trips over every efficient pattern") {
  for (const Partition& lambda : {Partition{2, 1, 0}, {2, 2, 0}, {3, 2, 0}})
    for (const EnhancedPattern& p : enumerate_efficient(lambda))
      CHECK(reconstruct_edges(p.base, p.circled) == p);
}

TEST_CASE("circles determine efficient patterns injectively") {
  for (const Partition& lambda : {Partition{2, 1, 0}, {2, 2, 0}}) {
    std::set<std::pair<GZPattern, std::set<Pos>>> seen;
    for (const EnhancedPattern& p : enumerate_efficient(lambda))
      CHECK(seen.insert({p.base, p.circled}).second);
  }
}

TEST_CASE("full enumeration") {
  CHECK(enumerate_all({1, 0}).size() == 3); // two 0-cells and the open segment
  int rank1 = 0;
  for (const EnhancedPattern& p : enumerate_all({1, 0}))
    if (rank(p) == 1) ++rank1;
  CHECK(rank1 == 1);
  CHECK(enumerate_all({2, 1, 0}).size() == 29);
  CHECK(enumerate_efficient({2, 1, 0}).size() == 27);
}

TEST_CASE("rank-zero patterns biject with integer points") {
  for (const Partition& lambda : {Partition{2, 1, 0}, {3, 2, 0}, {2, 2, 0}, {2, 1, 1, 0}}) {
    std::set<GZPattern> bases;
    for (const EnhancedPattern& p : enumerate_all(lambda))
      if (rank(p) == 0) CHECK(bases.insert(p.base).second);
    CHECK(Int(static_cast<long>(bases.size())) == weyl_dimension(lambda));
  }
}

TEST_CASE("two-variable closed form") {
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= a; ++b) {
      auto all = enumerate_all({a, b});
      size_t expected = a == b ? 1 : static_cast<size_t>(2 * (a - b) + 1);
      CHECK(all.size() == expected);
      CHECK(enumerate_efficient({a, b}).size() == expected);
      // cross-check the term count of pi_1(x^lambda)
      BetaPolynomial g = demazure_lascoux(BetaPolynomial::x_power({a, b}), 1);
      CHECK(g.term_count() == expected);
    }
}

TEST_CASE("pattern sums give the operator Grothendieck polynomial") {
  CHECK(grothendieck_via_patterns({1, 0}) ==
        demazure_lascoux(BetaPolynomial::x_power({1, 0}), 1));
  CHECK(grothendieck_via_patterns({0, 0, 0}) == BetaPolynomial::one(3));
  CHECK(grothendieck_via_patterns({3, 2, 0}) ==
        apply_word(BetaPolynomial::x_power({3, 2, 0}), w0_word_coxeter(3)));
}
