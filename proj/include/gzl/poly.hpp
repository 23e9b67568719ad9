// Exact sparse polynomials in a formal parameter b (beta) and variables
// x1..xn over the integers, with divided-difference and Demazure-Lascoux
// operators and the Lascoux-polynomial recursion.
//
// Terms are kept in a map keyed by Monomial; the key order (beta degree,
// then exponent vector, lexicographic ascending) is the canonical term
// order used for serialization and equality reporting.
#pragma once

#include "gzl/ints.hpp"
#include "gzl/perm.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace gzl {

struct Monomial {
  int beta = 0;
  std::vector<int> exps; // exponent of x_k at index k-1

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

class BetaPolynomial {
public:
  explicit BetaPolynomial(int n);

  static BetaPolynomial zero(int n) { return BetaPolynomial(n); }
  static BetaPolynomial constant(int n, Int c);
  static BetaPolynomial one(int n) { return constant(n, 1); }
  static BetaPolynomial term(Monomial m, Int c);
  static BetaPolynomial x_power(const std::vector<int>& exps); // x^alpha
  static BetaPolynomial variable(int n, int i);                // x_i
  static BetaPolynomial beta(int n);                           // b

  int vars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Int>& terms() const { return terms_; }
  Int coeff(const Monomial& m) const;

  void add_term(const Monomial& m, const Int& c); // accumulate, drop zeros

  BetaPolynomial& operator+=(const BetaPolynomial& q);
  BetaPolynomial& operator-=(const BetaPolynomial& q);
  friend BetaPolynomial operator+(BetaPolynomial p, const BetaPolynomial& q) { return p += q; }
  friend BetaPolynomial operator-(BetaPolynomial p, const BetaPolynomial& q) { return p -= q; }
  friend BetaPolynomial operator*(const BetaPolynomial& p, const BetaPolynomial& q);
  BetaPolynomial operator-() const;
  BetaPolynomial scaled(const Int& c) const;

  bool operator==(const BetaPolynomial& o) const { return n_ == o.n_ && terms_ == o.terms_; }
  bool operator!=(const BetaPolynomial& o) const { return !(*this == o); }

  BetaPolynomial swap_vars(int i) const; // s_i: exchange x_i, x_{i+1}
  bool symmetric_in(int i) const { return swap_vars(i) == *this; }

  // "b^k*x1^a1*...*xn^an" terms joined by " + "; unit exponents and zero
  // factors omitted; zero polynomial renders as "0".
  std::string str() const;

private:
  int n_;
  std::map<Monomial, Int> terms_; // no zero coefficients stored

  void check_same(const BetaPolynomial& q) const;
};

// substitute beta = b and fold into the coefficients
BetaPolynomial specialize_beta(const BetaPolynomial& p, const Int& b);

// (p - s_i p)/(x_i - x_{i+1}), exact by rewriting the numerator in the
// variables (x_i - x_{i+1}, x_{i+1}) and stripping one factor.
BetaPolynomial divided_difference(const BetaPolynomial& p, int i);

// pi_i(p) = d_i(x_i p + b x_i x_{i+1} p)
BetaPolynomial demazure_lascoux(const BetaPolynomial& p, int i);

// Applies the operators along the word; the word's rightmost letter acts
// first, so a word (l_1,...,l_m) realizes pi_{l_1}∘...∘pi_{l_m} and
// apply_word(x^lambda, word) equals the Lascoux polynomial of
// word_product(word) whenever the word is reduced. Non-reduced words are
// accepted (the operators are idempotent and braid-compatible).
BetaPolynomial apply_word(const BetaPolynomial& p, const Word& word);

enum class AscentPick { First, Last };

// Recursion on weak compositions: x^alpha when weakly decreasing, else
// pi_i applied at an ascent. The result does not depend on the pick.
BetaPolynomial lascoux_of_composition(const std::vector<int>& alpha,
                                      AscentPick pick = AscentPick::First);

// Lascoux polynomial of a permutation-partition pair, via a reduced word.
BetaPolynomial lascoux_w_lambda(const Permutation& w, const std::vector<int>& lambda);

bool is_multiplicity_free(const BetaPolynomial& p);

// [p]_lambda: the sum of the terms whose x-exponent vector mu violates
// lambda_1 >= mu_1 >= lambda_2 >= ... >= mu_{n-1} >= lambda_n (beta ignored).
BetaPolynomial nonalternating_part(const BetaPolynomial& p, const std::vector<int>& lambda);

} // namespace gzl
