// Symmetric group S_n: one-line permutations, words in the simple
// transpositions s_1..s_{n-1}, reduced and canonical words, Bruhat order.
//
// Conventions (fixed once, used by every module):
//   * compose(u, v) is the function composition (u∘v)(k) = u(v(k)).
//   * the product of a word (l_1, l_2, ..., l_m) is s_{l_1}∘s_{l_2}∘...∘s_{l_m},
//     i.e. the left factor is outermost.
#pragma once

#include <string>
#include <vector>

namespace gzl {

class Permutation {
public:
  explicit Permutation(std::vector<int> one_line);
  static Permutation identity(int n);
  static Permutation longest(int n); // w0
  static Permutation simple(int n, int i); // s_i

  int degree() const { return static_cast<int>(w_.size()); }
  int operator()(int k) const { return w_[static_cast<size_t>(k) - 1]; } // 1-based
  const std::vector<int>& one_line() const { return w_; }

  Permutation compose(const Permutation& v) const; // (this∘v)(k) = this(v(k))
  Permutation inverse() const;
  int length() const; // inversion count
  bool is_identity() const;

  std::string str() const; // "321" for n<=9, else "10,2,1,..."

  bool operator==(const Permutation& o) const { return w_ == o.w_; }
  bool operator!=(const Permutation& o) const { return w_ != o.w_; }
  bool operator<(const Permutation& o) const { return w_ < o.w_; }

private:
  std::vector<int> w_;
};

using Word = std::vector<int>; // generator indices, 1..n-1

Permutation word_product(const Word& word, int n);
bool is_reduced(const Word& word, int n);

// Canonical word: blocks of consecutively increasing generators with strictly
// decreasing block starts, e.g. (2, 1,2) for w0 in S_3. Computed by peeling
// the one-line form, O(n^2). Block b has length block_lengths[b-1].
std::vector<int> canonical_block_lengths(const Permutation& w);
Word canonical_reduced_word(const Permutation& w);

// Bruhat order via the rank-matrix dominance criterion.
bool bruhat_leq(const Permutation& u, const Permutation& w);

// Ambient word of the full dual Kogan diagram, read bottom to top and right
// to left: rows i = n-1 .. 1 contribute (s_i, s_{i+1}, ..., s_{n-1}).
Word w0_word_reading(int n);

// Word for w0 = c_1 c_2 ... c_{n-1} with c_k = s_k...s_1; as a letter sequence
// (1, 2,1, 3,2,1, ...). Applied through apply_word this realizes the
// operator batches pi_1..pi_{n-1}, pi_1..pi_{n-2}, ..., pi_1.
Word w0_word_coxeter(int n);

// Place permutation: alpha with alpha[w(i)] = lambda[i].
std::vector<int> apply_to_composition(const Permutation& w, const std::vector<int>& lambda);

std::vector<Permutation> all_permutations(int n);

} // namespace gzl
