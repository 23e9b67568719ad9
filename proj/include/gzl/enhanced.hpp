// Enhanced Gelfand-Zetlin patterns: a GZ pattern with circles on entries
// and upward edges between equal neighbors, subject to the eight validity
// conditions. Enhanced patterns index the cells of the polytope
// subdivision; efficient ones carry the monomial b^rank * x^d.
#pragma once

#include "gzl/gz.hpp"

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace gzl {

using Pos = std::pair<int, int>; // (row i, entry j), rows 1..n-1 unless stated

struct EnhancedPattern {
  GZPattern base;            // includes the fixed top row
  std::set<Pos> circled;     // positions in rows 1..n-1 (row 0 implicitly circled)
  std::set<Pos> edge_left;   // up-left edge (i,j) -- (i-1,j)
  std::set<Pos> edge_right;  // up-right edge (i,j) -- (i-1,j+1)

  int n() const { return base.n(); }
  int value(int i, int j) const { return base.at(i, j); }
  bool has_circle(int i, int j) const { return circled.count({i, j}) != 0; }
  bool has_left(int i, int j) const { return edge_left.count({i, j}) != 0; }
  bool has_right(int i, int j) const { return edge_right.count({i, j}) != 0; }

  friend auto operator<=>(const EnhancedPattern&, const EnhancedPattern&) = default;
};

struct Violation {
  int condition; // 0 = malformed shape, else 2..8
  Pos pos;
  std::string detail;
};

struct ReconstructError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// checks the shape plus all enhancement conditions; empty result = valid
std::vector<Violation> validate(const EnhancedPattern& p);

// number of entries without circles in rows 1..n-1
int rank(const EnhancedPattern& p);

// false iff some all-equal triangle has its bottom entry not joined to the
// upper-right one
bool is_efficient(const EnhancedPattern& p);

struct Component {
  std::vector<Pos> members; // rows 0..n-1, sorted
  Pos top;                  // unique highest vertex
  bool constant;            // pinned to a value (top circled or in row 0)
  int value;                // meaningful when constant
};

// components of the edge graph over rows 0..n-1 (equal adjacent top-row
// entries count as connected)
std::vector<Component> connected_components(const EnhancedPattern& p);

// b^rank * x1^d1...xn^dn with d_{n+1-i} = S_{i-1} - S_i + D_i; zero for
// inefficient patterns
BetaPolynomial pattern_monomial(const EnhancedPattern& p);

// The unique efficient enhancement with the given circles (edges are
// redundant data for efficient patterns). Throws ReconstructError when the
// circle set admits none.
EnhancedPattern reconstruct_edges(const GZPattern& base, const std::set<Pos>& circled);

// all valid enhancements of one base pattern, deterministic order
std::vector<EnhancedPattern> enumerate_enhancements(const GZPattern& base);

// P(lambda): every enhancement of every integer point, inefficient included
std::vector<EnhancedPattern> enumerate_all(const Partition& lambda);

// P+(lambda)
std::vector<EnhancedPattern> enumerate_efficient(const Partition& lambda);

// sum of pattern monomials over P+(lambda)
BetaPolynomial grothendieck_via_patterns(const Partition& lambda);

} // namespace gzl
