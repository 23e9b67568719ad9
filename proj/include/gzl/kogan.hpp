// Dual Kogan faces of GZ(lambda): edge diagrams, the word and permutation
// of a face, enumeration of reduced faces, edge moves, right-adjusted
// diagrams, face integer points and key polynomials.
//
// An edge at place (i,j) (1 <= i <= n-1, 1 <= j <= n-i) imposes the
// equality y_{i,j} = y_{i-1,j+1} with the upper-right neighbor and carries
// the label s_{n-j}.
#pragma once

#include "gzl/gz.hpp"
#include "gzl/perm.hpp"

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace gzl {

struct FaceDiagram {
  int n = 0;
  std::set<std::pair<int, int>> edges;

  bool has_edge(int i, int j) const { return edges.count({i, j}) != 0; }
  friend auto operator<=>(const FaceDiagram&, const FaceDiagram&) = default;
};

bool place_exists(int n, int i, int j);
void check_diagram(const FaceDiagram& f);

// w^-(F): read bottom to top, right to left; label of place (i,j) is s_{n-j}
Word face_word(const FaceDiagram& f);
bool is_reduced_face(const FaceDiagram& f);

// w(F) = w0 ∘ product(face_word(F))
Permutation face_permutation(const FaceDiagram& f);

// All reduced faces, optionally filtered to w(F) == w. Backtracks over the
// ambient word with length pruning; deterministic order.
std::vector<FaceDiagram> enumerate_reduced_faces(int n, const std::optional<Permutation>& w = std::nullopt);

// every row's edges form a contiguous run anchored at the rightmost place
bool is_right_adjusted(const FaceDiagram& f);

// the unique right-adjusted reduced face with w(F) == w
FaceDiagram right_adjusted_of(const Permutation& w);

enum class MoveDir { Down, Up };

struct MoveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Slides one edge across the neighboring up-right diagonal, preserving the
// face permutation: an edge at the top of a block of paired filled rows
// moves below the block on the next diagonal (Down), or back (Up). Throws
// MoveError when the local block pattern does not hold.
FaceDiagram edge_move(const FaceDiagram& f, std::pair<int, int> edge, MoveDir dir);
std::optional<FaceDiagram> try_edge_move(const FaceDiagram& f, std::pair<int, int> edge, MoveDir dir);

// Reads the empty places bottom to top, left to right with label
// s_{n-i-j+1}; equals face_permutation on right-adjusted diagrams.
Permutation empty_places_permutation(const FaceDiagram& f);

// integer points of GZ(lambda) satisfying all edge equalities of f
std::vector<GZPattern> face_integer_points(const FaceDiagram& f, const Partition& lambda);

// character of the set-union of integer points over all reduced faces with
// w(F) == w
BetaPolynomial key_polynomial(const Permutation& w, const Partition& lambda);

// dot-and-edge picture, one text line per pattern row
std::string ascii_diagram(const FaceDiagram& f);

} // namespace gzl
