#include "gzl/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace gzl {

namespace {

Int binom(int a, int k) {
  if (k < 0 || k > a) return 0;
  Int r = 1;
  for (int t = 1; t <= k; ++t) r = r * (a - t + 1) / t;
  return r;
}

} // namespace

BetaPolynomial::BetaPolynomial(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("polynomial: need n >= 1");
}

BetaPolynomial BetaPolynomial::constant(int n, Int c) {
  BetaPolynomial p(n);
  p.add_term(Monomial{0, std::vector<int>(static_cast<size_t>(n), 0)}, c);
  return p;
}

BetaPolynomial BetaPolynomial::term(Monomial m, Int c) {
  BetaPolynomial p(static_cast<int>(m.exps.size()));
  if (m.beta < 0) throw std::invalid_argument("polynomial: negative beta degree");
  for (int e : m.exps)
    if (e < 0) throw std::invalid_argument("polynomial: negative exponent");
  p.add_term(m, c);
  return p;
}

BetaPolynomial BetaPolynomial::x_power(const std::vector<int>& exps) {
  return term(Monomial{0, exps}, 1);
}

BetaPolynomial BetaPolynomial::variable(int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("variable: index out of range");
  std::vector<int> e(static_cast<size_t>(n), 0);
  e[static_cast<size_t>(i) - 1] = 1;
  return x_power(e);
}

BetaPolynomial BetaPolynomial::beta(int n) {
  BetaPolynomial p(n);
  p.add_term(Monomial{1, std::vector<int>(static_cast<size_t>(n), 0)}, 1);
  return p;
}

Int BetaPolynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Int(0) : it->second;
}

void BetaPolynomial::check_same(const BetaPolynomial& q) const {
  if (n_ != q.n_) throw std::invalid_argument("polynomial: variable count mismatch");
}

void BetaPolynomial::add_term(const Monomial& m, const Int& c) {
  if (c == 0) return;
  if (static_cast<int>(m.exps.size()) != n_)
    throw std::invalid_argument("polynomial: monomial arity mismatch");
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BetaPolynomial& BetaPolynomial::operator+=(const BetaPolynomial& q) {
  check_same(q);
  for (const auto& [m, c] : q.terms_) add_term(m, c);
  return *this;
}

BetaPolynomial& BetaPolynomial::operator-=(const BetaPolynomial& q) {
  check_same(q);
  for (const auto& [m, c] : q.terms_) add_term(m, -c);
  return *this;
}

BetaPolynomial operator*(const BetaPolynomial& p, const BetaPolynomial& q) {
  p.check_same(q);
  BetaPolynomial r(p.n_);
  for (const auto& [mp, cp] : p.terms_)
    for (const auto& [mq, cq] : q.terms_) {
      Monomial m{mp.beta + mq.beta, mp.exps};
      for (size_t k = 0; k < m.exps.size(); ++k) m.exps[k] += mq.exps[k];
      r.add_term(m, cp * cq);
    }
  return r;
}

BetaPolynomial BetaPolynomial::operator-() const { return scaled(-1); }

BetaPolynomial BetaPolynomial::scaled(const Int& c) const {
  BetaPolynomial r(n_);
  if (c == 0) return r;
  for (const auto& [m, cc] : terms_) r.terms_.emplace(m, cc * c);
  return r;
}

BetaPolynomial BetaPolynomial::swap_vars(int i) const {
  if (i < 1 || i >= n_) throw std::invalid_argument("swap_vars: index out of range");
  BetaPolynomial r(n_);
  for (const auto& [m, c] : terms_) {
    Monomial mm = m;
    std::swap(mm.exps[static_cast<size_t>(i) - 1], mm.exps[static_cast<size_t>(i)]);
    r.add_term(mm, c);
  }
  return r;
}

std::string BetaPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    std::string factors;
    auto push = [&factors](const std::string& f) {
      if (!factors.empty()) factors += '*';
      factors += f;
    };
    if (m.beta == 1) push("b");
    else if (m.beta > 1) push("b^" + std::to_string(m.beta));
    for (int k = 1; k <= n_; ++k) {
      int e = m.exps[static_cast<size_t>(k) - 1];
      if (e == 1) push("x" + std::to_string(k));
      else if (e > 1) push("x" + std::to_string(k) + "^" + std::to_string(e));
    }
    if (factors.empty()) {
      out += c.str();
    } else if (c == 1) {
      out += factors;
    } else if (c == -1) {
      out += "-" + factors;
    } else {
      out += c.str() + "*" + factors;
    }
  }
  return out;
}

BetaPolynomial specialize_beta(const BetaPolynomial& p, const Int& b) {
  BetaPolynomial r(p.vars());
  for (const auto& [m, c] : p.terms()) {
    Int f = c;
    for (int t = 0; t < m.beta; ++t) f *= b;
    r.add_term(Monomial{0, m.exps}, f);
  }
  return r;
}

BetaPolynomial divided_difference(const BetaPolynomial& p, int i) {
  const int n = p.vars();
  if (i < 1 || i >= n) throw std::invalid_argument("divided_difference: index out of range");
  BetaPolynomial num = p - p.swap_vars(i);
  const size_t a_slot = static_cast<size_t>(i) - 1, b_slot = static_cast<size_t>(i);

  // rewrite in u = x_i - x_{i+1}, v = x_{i+1}: x_i^a x_{i+1}^b = sum_k C(a,k) u^k v^{a-k+b}
  std::map<Monomial, Int> uv;
  for (const auto& [m, c] : num.terms()) {
    int a = m.exps[a_slot], b = m.exps[b_slot];
    for (int k = 0; k <= a; ++k) {
      Monomial key = m;
      key.exps[a_slot] = k;
      key.exps[b_slot] = a - k + b;
      auto [it, ins] = uv.emplace(key, c * binom(a, k));
      if (!ins) it->second += c * binom(a, k);
    }
  }

  // the numerator is antisymmetric, so u divides it exactly
  BetaPolynomial r(n);
  for (const auto& [m, c] : uv) {
    if (c == 0) continue;
    if (m.exps[a_slot] == 0)
      throw std::logic_error("divided_difference: exact division failed");
    int k = m.exps[a_slot] - 1, v = m.exps[b_slot];
    // u^k v^m back to x's: sum_t C(k,t) (-1)^{k-t} x_i^t x_{i+1}^{k-t+m}
    for (int t = 0; t <= k; ++t) {
      Monomial out = m;
      out.exps[a_slot] = t;
      out.exps[b_slot] = k - t + v;
      Int coef = c * binom(k, t);
      if ((k - t) % 2 != 0) coef = -coef;
      r.add_term(out, coef);
    }
  }
  return r;
}

BetaPolynomial demazure_lascoux(const BetaPolynomial& p, int i) {
  const int n = p.vars();
  if (i < 1 || i >= n) throw std::invalid_argument("demazure_lascoux: index out of range");
  BetaPolynomial xi = BetaPolynomial::variable(n, i);
  BetaPolynomial arg = xi * p + BetaPolynomial::beta(n) * xi * BetaPolynomial::variable(n, i + 1) * p;
  return divided_difference(arg, i);
}

BetaPolynomial apply_word(const BetaPolynomial& p, const Word& word) {
  BetaPolynomial r = p;
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = demazure_lascoux(r, *it);
  return r;
}

BetaPolynomial lascoux_of_composition(const std::vector<int>& alpha, AscentPick pick) {
  const int n = static_cast<int>(alpha.size());
  for (int e : alpha)
    if (e < 0) throw std::invalid_argument("lascoux_of_composition: negative part");
  std::vector<int> cur = alpha;
  Word ops; // unwinding order: L_alpha = pi_{ops[0]} pi_{ops[1]} ... (x^sorted)
  for (;;) {
    int ascent = -1;
    for (int i = 1; i <= n - 1; ++i) {
      if (cur[static_cast<size_t>(i) - 1] < cur[static_cast<size_t>(i)]) {
        ascent = i;
        if (pick == AscentPick::First) break;
      }
    }
    if (ascent < 0) break;
    ops.push_back(ascent);
    std::swap(cur[static_cast<size_t>(ascent) - 1], cur[static_cast<size_t>(ascent)]);
  }
  BetaPolynomial r = BetaPolynomial::x_power(cur);
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) r = demazure_lascoux(r, *it);
  return r;
}

BetaPolynomial lascoux_w_lambda(const Permutation& w, const std::vector<int>& lambda) {
  if (w.degree() != static_cast<int>(lambda.size()))
    throw std::invalid_argument("lascoux_w_lambda: size mismatch");
  for (size_t k = 0; k + 1 < lambda.size(); ++k)
    if (lambda[k] < lambda[k + 1])
      throw std::invalid_argument("lascoux_w_lambda: lambda not weakly decreasing");
  return apply_word(BetaPolynomial::x_power(lambda), canonical_reduced_word(w));
}

bool is_multiplicity_free(const BetaPolynomial& p) {
  for (const auto& [m, c] : p.terms())
    if (c != 1) return false;
  return true;
}

BetaPolynomial nonalternating_part(const BetaPolynomial& p, const std::vector<int>& lambda) {
  const int n = p.vars();
  if (static_cast<int>(lambda.size()) != n)
    throw std::invalid_argument("nonalternating_part: lambda size mismatch");
  BetaPolynomial r(n);
  for (const auto& [m, c] : p.terms()) {
    bool alternating = true;
    for (int k = 1; k <= n - 1 && alternating; ++k) {
      int mu = m.exps[static_cast<size_t>(k) - 1];
      if (mu > lambda[static_cast<size_t>(k) - 1] || mu < lambda[static_cast<size_t>(k)])
        alternating = false;
    }
    if (!alternating) r.add_term(m, c);
  }
  return r;
}

} // namespace gzl
