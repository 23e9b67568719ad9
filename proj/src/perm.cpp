#include "gzl/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gzl {

Permutation::Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
  int n = static_cast<int>(w_.size());
  if (n == 0) throw std::invalid_argument("permutation: empty one-line form");
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (int v : w_) {
    if (v < 1 || v > n || seen[static_cast<size_t>(v)])
      throw std::invalid_argument("permutation: not a bijection on 1..n");
    seen[static_cast<size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
  std::vector<int> w(static_cast<size_t>(n));
  for (int k = 1; k <= n; ++k) w[static_cast<size_t>(k) - 1] = n + 1 - k;
  return Permutation(std::move(w));
}

Permutation Permutation::simple(int n, int i) {
  if (i < 1 || i >= n) throw std::invalid_argument("s_i: index out of range");
  Permutation p = identity(n);
  std::swap(p.w_[static_cast<size_t>(i) - 1], p.w_[static_cast<size_t>(i)]);
  return p;
}

Permutation Permutation::compose(const Permutation& v) const {
  if (degree() != v.degree()) throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> w(w_.size());
  for (int k = 1; k <= degree(); ++k) w[static_cast<size_t>(k) - 1] = (*this)(v(k));
  return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
  std::vector<int> w(w_.size());
  for (int k = 1; k <= degree(); ++k) w[static_cast<size_t>((*this)(k)) - 1] = k;
  return Permutation(std::move(w));
}

int Permutation::length() const {
  int n = degree(), inv = 0;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if ((*this)(a) > (*this)(b)) ++inv;
  return inv;
}

bool Permutation::is_identity() const {
  for (int k = 1; k <= degree(); ++k)
    if ((*this)(k) != k) return false;
  return true;
}

std::string Permutation::str() const {
  std::string s;
  bool compact = degree() <= 9;
  for (int k = 1; k <= degree(); ++k) {
    if (!compact && k > 1) s += ',';
    s += std::to_string((*this)(k));
  }
  return s;
}

Permutation word_product(const Word& word, int n) {
  Permutation p = Permutation::identity(n);
  for (int l : word) p = p.compose(Permutation::simple(n, l));
  return p;
}

bool is_reduced(const Word& word, int n) {
  return word_product(word, n).length() == static_cast<int>(word.size());
}

std::vector<int> canonical_block_lengths(const Permutation& w) {
  // Peel blocks: value b sits at position b + k_b in the current permutation;
  // stripping the ascending run s_b...s_{b+k_b-1} moves it home.
  int n = w.degree();
  std::vector<int> cur = w.one_line();
  std::vector<int> k(static_cast<size_t>(n > 0 ? n - 1 : 0), 0);
  for (int b = 1; b <= n - 1; ++b) {
    int pos = 0;
    for (int x = 1; x <= n; ++x)
      if (cur[static_cast<size_t>(x) - 1] == b) { pos = x; break; }
    int kb = pos - b;
    k[static_cast<size_t>(b) - 1] = kb;
    // undo the block: shift the segment [b, b+kb-1] one place right, put b home
    for (int x = b + kb; x > b; --x)
      cur[static_cast<size_t>(x) - 1] = cur[static_cast<size_t>(x) - 2];
    cur[static_cast<size_t>(b) - 1] = b;
  }
  return k;
}

Word canonical_reduced_word(const Permutation& w) {
  std::vector<int> k = canonical_block_lengths(w);
  Word word;
  for (int b = w.degree() - 1; b >= 1; --b)
    for (int t = 0; t < k[static_cast<size_t>(b) - 1]; ++t) word.push_back(b + t);
  return word;
}

bool bruhat_leq(const Permutation& u, const Permutation& w) {
  if (u.degree() != w.degree()) throw std::invalid_argument("bruhat_leq: degree mismatch");
  int n = u.degree();
  // r_v(i,j) = #{k <= i : v(k) <= j}; u <= w iff r_u >= r_w everywhere
  for (int i = 1; i <= n; ++i) {
    int ru = 0, rw = 0;
    std::vector<int> cu(static_cast<size_t>(n) + 1, 0), cw(cu);
    for (int k = 1; k <= i; ++k) {
      cu[static_cast<size_t>(u(k))]++;
      cw[static_cast<size_t>(w(k))]++;
    }
    for (int j = 1; j <= n; ++j) {
      ru += cu[static_cast<size_t>(j)];
      rw += cw[static_cast<size_t>(j)];
      if (ru < rw) return false;
    }
  }
  return true;
}

Word w0_word_reading(int n) {
  Word word;
  for (int i = n - 1; i >= 1; --i)
    for (int l = i; l <= n - 1; ++l) word.push_back(l);
  return word;
}

Word w0_word_coxeter(int n) {
  Word word;
  for (int k = 1; k <= n - 1; ++k)
    for (int l = k; l >= 1; --l) word.push_back(l);
  return word;
}

std::vector<int> apply_to_composition(const Permutation& w, const std::vector<int>& lambda) {
  if (static_cast<int>(lambda.size()) != w.degree())
    throw std::invalid_argument("apply_to_composition: size mismatch");
  std::vector<int> alpha(lambda.size());
  for (int i = 1; i <= w.degree(); ++i)
    alpha[static_cast<size_t>(w(i)) - 1] = lambda[static_cast<size_t>(i) - 1];
  return alpha;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(static_cast<size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

} // namespace gzl
