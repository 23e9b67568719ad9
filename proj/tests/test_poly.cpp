#include "gzl/poly.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace gzl;

namespace {

BetaPolynomial xp(std::vector<int> e) { return BetaPolynomial::x_power(e); }
BetaPolynomial bterm(int beta, std::vector<int> e, long c = 1) {
  return BetaPolynomial::term(Monomial{beta, std::move(e)}, c);
}

// Fig-4 values for lambda = (3,2,0), frozen
BetaPolynomial fig4_s1() { return xp({3, 2, 0}) + xp({2, 3, 0}) + bterm(1, {3, 3, 0}); }
BetaPolynomial fig4_s2() {
  return xp({3, 2, 0}) + bterm(1, {3, 2, 1}) + xp({3, 1, 1}) + bterm(1, {3, 1, 2}) + xp({3, 0, 2});
}

// independent oracle: long division of p by (x_i - x_{i+1}) in the variable x_i
BetaPolynomial divide_by_difference(BetaPolynomial p, int i) {
  const int n = p.vars();
  BetaPolynomial q(n);
  while (!p.is_zero()) {
    // leading term in x_i-degree (any tie)
    auto lead = p.terms().begin();
    for (auto it = p.terms().begin(); it != p.terms().end(); ++it)
      if (it->first.exps[static_cast<size_t>(i) - 1] > lead->first.exps[static_cast<size_t>(i) - 1])
        lead = it;
    Monomial m = lead->first;
    Int c = lead->second;
    REQUIRE(m.exps[static_cast<size_t>(i) - 1] > 0); // exact division
    Monomial t = m;
    t.exps[static_cast<size_t>(i) - 1]--;
    q.add_term(t, c);
    // p -= t * (x_i - x_{i+1})
    p.add_term(m, -c);
    Monomial other = t;
    other.exps[static_cast<size_t>(i)]++;
    p.add_term(other, c);
  }
  return q;
}

BetaPolynomial random_poly(std::mt19937_64& gen, int n) {
  BetaPolynomial p(n);
  int terms = 1 + static_cast<int>(gen() % 5);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    m.beta = static_cast<int>(gen() % 3);
    m.exps.resize(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) m.exps[static_cast<size_t>(k)] = static_cast<int>(gen() % 5);
    long c = static_cast<long>(gen() % 9) - 4;
    if (c == 0) c = 2;
    p.add_term(m, c);
  }
  return p;
}

} // namespace

TEST_CASE("canonical term order is lexicographic on (beta, exps)") {
  CHECK(Monomial{0, {2, 3, 0}} < Monomial{0, {3, 2, 0}});
  CHECK(Monomial{0, {3, 2, 0}} < Monomial{1, {0, 0, 0}});
  BetaPolynomial p = fig4_s1();
  std::vector<Monomial> keys;
  for (const auto& [m, c] : p.terms()) keys.push_back(m);
  CHECK(std::is_sorted(keys.begin(), keys.end()));
}

TEST_CASE("addition") {
  std::mt19937_64 gen(7);
  BetaPolynomial p = random_poly(gen, 3);
  CHECK(p + BetaPolynomial::zero(3) == p);
  CHECK(BetaPolynomial::variable(3, 1) + BetaPolynomial::variable(3, 1) ==
        BetaPolynomial::variable(3, 1).scaled(2));
  CHECK(bterm(0, {3, 2, 0}) + bterm(1, {3, 3, 0}) + bterm(0, {2, 3, 0}) == fig4_s1());
  CHECK_THROWS_AS(BetaPolynomial::one(2) + BetaPolynomial::one(3), std::invalid_argument);
}

TEST_CASE("multiplication") {
  BetaPolynomial p = fig4_s2();
  CHECK(p * BetaPolynomial::one(3) == p);
  CHECK(BetaPolynomial::variable(3, 1) * (BetaPolynomial::beta(3) * BetaPolynomial::variable(3, 2)) ==
        bterm(1, {1, 1, 0}));
  // multiplying by the symmetric monomial (x1 x2 x3)^c shifts the whole family
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= a; ++b)
      for (int c = 1; c <= 2; ++c)
        for (std::vector<int> alpha : {std::vector<int>{a, b, 0}, {b, 0, a}, {0, b, a}, {b, a, 0}}) {
          std::vector<int> shifted = alpha;
          for (int& v : shifted) v += c;
          CHECK(lascoux_of_composition(shifted) ==
                xp({c, c, c}) * lascoux_of_composition(alpha));
        }
}

TEST_CASE("beta specialization") {
  CHECK(specialize_beta(bterm(1, {1, 0}), 0).is_zero());
  CHECK(specialize_beta(fig4_s1(), 0) == xp({3, 2, 0}) + xp({2, 3, 0}));
  CHECK(specialize_beta(bterm(1, {1, 1}), -1) == bterm(0, {1, 1}, -1));
}

TEST_CASE("divided differences") {
  CHECK(divided_difference(BetaPolynomial::variable(2, 1), 1) == BetaPolynomial::one(2));
  CHECK(divided_difference(xp({1, 1}), 1).is_zero());
  BetaPolynomial p = xp({4, 2});
  BetaPolynomial num = p - p.swap_vars(1);
  CHECK(divided_difference(p, 1) == divide_by_difference(num, 1));
  CHECK(divided_difference(p, 1) == xp({3, 2}) + xp({2, 3}));
}

TEST_CASE("divided differences match the long-division oracle on random input") {
  std::mt19937_64 gen(20240902);
  for (int n = 2; n <= 4; ++n)
    for (int it = 0; it < 25; ++it) {
      BetaPolynomial p = random_poly(gen, n);
      for (int i = 1; i <= n - 1; ++i) {
        BetaPolynomial num = p - p.swap_vars(i);
        CHECK(divided_difference(p, i) == divide_by_difference(num, i));
      }
    }
}

TEST_CASE("Demazure-Lascoux operator values") {
  CHECK(demazure_lascoux(BetaPolynomial::one(2), 1) == BetaPolynomial::one(2));
  CHECK(demazure_lascoux(xp({3, 2, 0}), 1) == fig4_s1());
  CHECK(demazure_lascoux(xp({3, 2, 0}), 2) == fig4_s2());
}

TEST_CASE("apply_word") {
  BetaPolynomial p = xp({3, 2, 0});
  CHECK(apply_word(p, {}) == p);
  CHECK(apply_word(p, {1}) == fig4_s1());
  CHECK(apply_word(p, {1, 1}) == apply_word(p, {1})); // idempotent, non-reduced ok
}

TEST_CASE("Lascoux recursion on compositions") {
  CHECK(lascoux_of_composition({3, 2, 0}) == xp({3, 2, 0}));
  CHECK(lascoux_of_composition({2, 3, 0}) == fig4_s1());
  CHECK(lascoux_of_composition({3, 0, 2}) == fig4_s2());
}

TEST_CASE("Lascoux recursion is independent of the ascent picked") {
  for (int n = 2; n <= 4; ++n) {
    std::vector<int> alpha(static_cast<size_t>(n), 0);
    auto next = [&alpha, n]() {
      int k = 0;
      while (k < n && alpha[static_cast<size_t>(k)] == 3) alpha[static_cast<size_t>(k++)] = 0;
      if (k == n) return false;
      alpha[static_cast<size_t>(k)]++;
      return true;
    };
    do {
      CHECK(lascoux_of_composition(alpha, AscentPick::First) ==
            lascoux_of_composition(alpha, AscentPick::Last));
    } while (next());
  }
}

TEST_CASE("Lascoux polynomials of permutation-partition pairs") {
  CHECK(lascoux_w_lambda(Permutation::identity(3), {3, 2, 0}) == xp({3, 2, 0}));
  CHECK(lascoux_w_lambda(Permutation::simple(3, 1), {3, 2, 0}) == fig4_s1());
  BetaPolynomial g = lascoux_w_lambda(Permutation::longest(3), {2, 1, 0});
  CHECK(g.coeff(Monomial{2, {2, 1, 2}}) > 0); // contains b^2 x1^2 x2 x3^2
}

TEST_CASE("composition and permutation routes agree for minimal-length w") {
  for (int n = 2; n <= 3; ++n) {
    std::vector<int> alpha(static_cast<size_t>(n), 0);
    auto next = [&alpha, n]() {
      int k = 0;
      while (k < n && alpha[static_cast<size_t>(k)] == 4) alpha[static_cast<size_t>(k++)] = 0;
      if (k == n) return false;
      alpha[static_cast<size_t>(k)]++;
      return true;
    };
    do {
      std::vector<int> lambda = alpha;
      std::sort(lambda.rbegin(), lambda.rend());
      const Permutation* best = nullptr;
      auto perms = all_permutations(n);
      for (const Permutation& w : perms)
        if (apply_to_composition(w, lambda) == alpha && (!best || w.length() < best->length()))
          best = &w;
      REQUIRE(best != nullptr);
      CHECK(lascoux_of_composition(alpha) == lascoux_w_lambda(*best, lambda));
    } while (next());
  }
}

TEST_CASE("Lascoux coefficients are nonnegative") {
  for (int n = 2; n <= 3; ++n)
    for (const Permutation& w : all_permutations(n)) {
      std::vector<int> lambda(static_cast<size_t>(n));
      lambda[0] = 3;
      if (n > 1) lambda[1] = 1;
      BetaPolynomial las = lascoux_w_lambda(w, lambda);
      for (const auto& [m, c] : las.terms()) CHECK(c > 0);
    }
}

TEST_CASE("multiplicity-freeness predicate") {
  CHECK(is_multiplicity_free(BetaPolynomial::variable(2, 1) + BetaPolynomial::variable(2, 2)));
  CHECK_FALSE(is_multiplicity_free(BetaPolynomial::variable(2, 1).scaled(2)));
  // pi_{c_2} x^(3,2,0) is NOT multiplicity free: the term b x1^3 x2^2 x3
  // arises once from each of two one-dimensional pieces of the subdivision,
  // so its coefficient is 2. (The claim that these composites are always
  // multiplicity free fails; see the acceptance report.)
  BetaPolynomial v = apply_word(xp({3, 2, 0}), {2, 1});
  CHECK_FALSE(is_multiplicity_free(v));
  CHECK(v.coeff(Monomial{1, {3, 2, 1}}) == 2);
  CHECK(v.coeff(Monomial{1, {3, 1, 2}}) == 2);
}

TEST_CASE("nonalternating part") {
  std::vector<int> lambda{4, 2, 0};
  CHECK(nonalternating_part(xp(lambda), lambda).is_zero());
  BetaPolynomial q = apply_word(xp({4, 2, 0}), {2, 1}); // pi_2(pi_1(x^lambda))
  BetaPolynomial r = nonalternating_part(q, lambda);
  CHECK(r.coeff(Monomial{0, {3, 3, 0}}) == 1); // x1^3 x2^3 lies in the nonalternating region
  CHECK(r.coeff(Monomial{1, {4, 3, 0}}) == 1); // so does b x1^4 x2^3
  CHECK(r.coeff(Monomial{0, {4, 2, 0}}) == 0); // x^lambda itself is alternating
}

TEST_CASE("kernel identity for the nonalternating part") {
  for (std::vector<int> lambda : {std::vector<int>{2, 1, 0}, {3, 2, 0}, {4, 2, 1}}) {
    BetaPolynomial top = apply_word(xp(lambda), {2, 1});
    BetaPolynomial rest = nonalternating_part(top, lambda);
    CHECK(apply_word(rest, {1}).is_zero());
  }
}

TEST_CASE("operator identities on seeded random polynomials") {
  std::mt19937_64 gen(20240901);
  for (int n = 2; n <= 4; ++n)
    for (int it = 0; it < 20; ++it) {
      BetaPolynomial p = random_poly(gen, n), q = random_poly(gen, n);
      for (int i = 1; i <= n - 1; ++i) {
        CHECK(divided_difference(divided_difference(p, i), i).is_zero());
        BetaPolynomial pi = demazure_lascoux(p, i);
        CHECK(demazure_lascoux(pi, i) == pi);
        CHECK(demazure_lascoux(pi - p, i).is_zero());
        BetaPolynomial f = p + p.swap_vars(i);
        CHECK(demazure_lascoux(f * q, i) == f * demazure_lascoux(q, i));
      }
      if (n >= 4)
        CHECK(demazure_lascoux(demazure_lascoux(p, 1), 3) ==
              demazure_lascoux(demazure_lascoux(p, 3), 1));
      for (int i = 1; i <= n - 2; ++i)
        CHECK(demazure_lascoux(demazure_lascoux(demazure_lascoux(p, i), i + 1), i) ==
              demazure_lascoux(demazure_lascoux(demazure_lascoux(p, i + 1), i), i + 1));
    }
}

TEST_CASE("text rendering") {
  CHECK(BetaPolynomial::zero(2).str() == "0");
  CHECK(BetaPolynomial::one(2).str() == "1");
  CHECK(bterm(1, {1, 1}).str() == "b*x1*x2");
  CHECK(bterm(2, {0, 3}, -2).str() == "-2*b^2*x2^3");
  CHECK(fig4_s1().str() == "x1^2*x2^3 + x1^3*x2^2 + b*x1^3*x2^3");
}
