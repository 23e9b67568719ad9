#include "gzl/json_io.hpp"

#include <doctest.h>

#include <random>

using namespace gzl;

namespace {

BetaPolynomial random_poly(std::mt19937_64& gen, int n) {
  BetaPolynomial p(n);
  for (int t = 0; t < 5; ++t) {
    Monomial m;
    m.beta = static_cast<int>(gen() % 3);
    m.exps.resize(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) m.exps[static_cast<size_t>(k)] = static_cast<int>(gen() % 4);
    p.add_term(m, static_cast<long>(gen() % 7) - 3);
  }
  return p;
}

} // namespace

TEST_CASE("polynomial json round-trip and canonical order") {
  std::mt19937_64 gen(11);
  for (int it = 0; it < 30; ++it) {
    BetaPolynomial p = random_poly(gen, 3);
    json j = poly_to_json(p);
    CHECK(poly_from_json(j) == p);
    // serialized terms come in the canonical order
    Monomial prev{-1, {}};
    bool first = true;
    for (const auto& t : j.at("terms")) {
      Monomial m{t.at("beta").get<int>(), t.at("exps").get<std::vector<int>>()};
      if (!first) CHECK(prev < m);
      prev = m;
      first = false;
    }
  }
  // big coefficients survive as strings
  BetaPolynomial big = BetaPolynomial::term(Monomial{0, {1, 0}}, Int("123456789012345678901234567890"));
  CHECK(poly_from_json(poly_to_json(big)) == big);
}

TEST_CASE("pattern and point json") {
  Partition lambda{2, 1, 0};
  for (const GZPattern& z : enumerate_gz_patterns(lambda)) {
    Partition back;
    CHECK(pattern_from_json(pattern_to_json(lambda, z), &back) == z);
    CHECK(back == lambda);
  }
  RationalPoint y = parse_point("5/2,31/10,9;5/2,19/5;37/10");
  CHECK(point_from_json(point_to_json(y)) == y);
}

TEST_CASE("diagram and enhanced-pattern json") {
  for (const FaceDiagram& f : enumerate_reduced_faces(3))
    CHECK(diagram_from_json(diagram_to_json(f)) == f);
  for (const EnhancedPattern& p : enumerate_all({2, 1, 0})) {
    json j = enhanced_to_json(p);
    CHECK(enhanced_from_json(j) == p);
    CHECK(j.at("rank").get<int>() == rank(p));
    CHECK(j.at("efficient").get<bool>() == is_efficient(p));
    if (!is_efficient(p)) CHECK(j.at("monomial").is_null());
  }
}

TEST_CASE("parsing permutations") {
  CHECK(parse_permutation("312", 3) == Permutation({3, 1, 2}));
  CHECK(parse_permutation("3,1,2", 3) == Permutation({3, 1, 2}));
  CHECK(parse_permutation("s1 s2", 3) == Permutation({2, 3, 1}));
  CHECK(parse_permutation("1,2", 3) == Permutation({2, 3, 1})); // word: not a one-line form
  CHECK(parse_permutation("s2 s1 s2", 3) == Permutation::longest(3));
  CHECK_THROWS_AS(parse_permutation("s5", 3), std::invalid_argument);
}

TEST_CASE("parsing partitions, points and rationals") {
  CHECK(parse_partition("3,2,0") == Partition{3, 2, 0});
  CHECK_THROWS_AS(parse_partition("1,2,3"), std::invalid_argument);
  CHECK(parse_rational("-7/2") == Rat(-7, 2));
  CHECK(rational_str(Rat(6, 4)) == "3/2");
  CHECK(rational_str(Rat(4, 2)) == "2");
  RationalPoint y = parse_point("0,2;1");
  CHECK(y.rows.size() == 2);
  CHECK(y.at(2, 1) == 1);
}
