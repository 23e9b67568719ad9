// Cells of the polytope subdivision: the per-coordinate constraint system
// of an enhanced pattern, exact point location, cell closures, containment
// in dual Kogan faces, the cell formula for Lascoux polynomials, tracks,
// and the decomposition self-check.
#pragma once

#include "gzl/enhanced.hpp"
#include "gzl/kogan.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gzl {

// a bound side: either an integer constant or a coordinate y_{i,j}, i >= 1
struct CoordOrConst {
  bool is_const = true;
  int cst = 0;
  Pos pos{0, 0};

  static CoordOrConst constant(int c) { return {true, c, {0, 0}}; }
  static CoordOrConst coord(Pos q) { return {false, 0, q}; }
  friend auto operator<=>(const CoordOrConst&, const CoordOrConst&) = default;
};

// lower bound = max over parts, upper bound = min over parts
struct BoundExpr {
  std::optional<int> cst;
  std::vector<Pos> coords;
};

struct CoordConstraint {
  enum class Kind { EqCoord, EqConst, Interval } kind;
  Pos coord;
  std::vector<Pos> targets; // EqCoord: one or two upper positions
  int value = 0;            // EqConst
  BoundExpr lower, upper;   // Interval, refinement folded in
};

struct CellConstraints {
  int n = 0;
  Partition lambda;
  std::vector<CoordConstraint> entries;                      // one per coordinate, row-major
  std::vector<std::pair<CoordOrConst, CoordOrConst>> extras; // strict "lhs < rhs" not foldable above

  std::string str() const; // the system in the displayed per-coordinate form
};

struct OutsidePolytopeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

CellConstraints cell_constraints(const EnhancedPattern& p, const Partition& lambda);

bool cell_contains(const EnhancedPattern& p, const Partition& lambda, const RationalPoint& y);
bool cell_closure_contains(const EnhancedPattern& p, const Partition& lambda, const RationalPoint& y);

// the unique cell containing the point (throws OutsidePolytopeError)
EnhancedPattern point_to_pattern(const Partition& lambda, const RationalPoint& y);

// all patterns whose cell closure contains the point
std::vector<EnhancedPattern> closure_patterns(const Partition& lambda, const RationalPoint& y);

// true iff every edge equality of the face holds identically on the cell
bool cell_in_face(const EnhancedPattern& p, const FaceDiagram& f, const Partition& lambda);

// P+(w, lambda): efficient patterns whose cell lies in some reduced face of w
std::vector<EnhancedPattern> patterns_for_perm(const Permutation& w, const Partition& lambda);

// same membership over a caller-supplied pool of efficient patterns;
// returns indices into the pool (used by the sweeps to share enumerations)
std::vector<size_t> patterns_for_perm_indexed(const Permutation& w, const Partition& lambda,
                                              const std::vector<EnhancedPattern>& pool);

BetaPolynomial lascoux_via_cells(const Permutation& w, const Partition& lambda);

// A track: one summand chosen at every step of the operator batches
// pi_1..pi_{n-1}, pi_1..pi_{n-2}, ..., pi_1 applied to x^lambda.
// states[0] is the start monomial, states[t] the choice after step t.
struct Track {
  std::vector<int> ops;
  std::vector<Monomial> states;

  friend auto operator<=>(const Track&, const Track&) = default;
};

std::vector<Track> enumerate_tracks(const Partition& lambda);

// The pattern of a track: entry (i, n-i+1-j) is the x_j-exponent after
// batch i's step j, a circle marks steps that leave the beta degree
// unchanged, edges are reconstructed. Throws ReconstructError when the
// track does not define a pattern.
EnhancedPattern track_to_pattern(const Track& t, const Partition& lambda);

struct CellReport {
  Partition lambda;
  int denominator = 1;
  long grid_points = 0;
  size_t cells = 0;
  size_t rank0_cells = 0;
  Int integer_points = 0;
  Int euler = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

// Checks, on the full (1/d)-grid of GZ(lambda): unique containing cell per
// point, agreement with point location, the 0-cell/integer-point bijection,
// closure consistency and the Euler characteristic.
CellReport verify_cellular(const Partition& lambda, int denominator);

Int euler_characteristic(const Partition& lambda);

} // namespace gzl
