// Gelfand-Zetlin patterns and polytopes: membership, integer point
// enumeration, Weyl's dimension formula, the weight projection and
// characters.
//
// Row convention shared by every module: row 0 is the fixed top row
// (lambda_n, ..., lambda_1); row i (1..n-1) has n-i free entries; the
// defining inequalities are rows[i-1][j-1] <= rows[i][j-1] <= rows[i-1][j].
#pragma once

#include "gzl/ints.hpp"
#include "gzl/poly.hpp"

#include <vector>

namespace gzl {

using Partition = std::vector<int>; // weakly decreasing, nonnegative

void check_partition(const Partition& lambda);

struct GZPattern {
  std::vector<std::vector<int>> rows; // rows[0] = lambda reversed, size n

  int n() const { return static_cast<int>(rows.empty() ? 0 : rows[0].size()); }
  // entry a_{i,j}, 0 <= i <= n-1, 1 <= j <= n-i
  int at(int i, int j) const { return rows[static_cast<size_t>(i)][static_cast<size_t>(j) - 1]; }
  int& at(int i, int j) { return rows[static_cast<size_t>(i)][static_cast<size_t>(j) - 1]; }

  friend auto operator<=>(const GZPattern&, const GZPattern&) = default;
};

// Coordinates y_{i,j} for i = 1..n-1 only; the fixed top row is implied by
// the partition. rows[i-1] holds row i, length n-i.
struct RationalPoint {
  std::vector<std::vector<Rat>> rows;

  int n() const { return static_cast<int>(rows.size()) + 1; }
  const Rat& at(int i, int j) const { return rows[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1]; }
  Rat& at(int i, int j) { return rows[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1]; }

  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

GZPattern top_row_pattern(const Partition& lambda); // rows[0] filled, rest empty
bool pattern_shape_ok(const Partition& lambda, const GZPattern& z);
bool pattern_is_valid(const GZPattern& z); // interlacing inequalities

RationalPoint to_rational_point(const GZPattern& z);
GZPattern integer_point_pattern(const Partition& lambda, const RationalPoint& p); // requires integrality

// value of y_{i,j} with row 0 resolved from lambda
Rat point_value(const Partition& lambda, const RationalPoint& p, int i, int j);

bool gz_contains(const Partition& lambda, const RationalPoint& p);

// all integer points, lexicographic by rows top-to-bottom, entries
// left-to-right
std::vector<GZPattern> enumerate_gz_patterns(const Partition& lambda);

Int weyl_dimension(const Partition& lambda);

// weight of a point: a_k = S_{n-k} - S_{n-k+1} with S_i the sum of row i,
// S_0 = |lambda| and S_n = 0
std::vector<int> project_weight(const Partition& lambda, const GZPattern& z);
std::vector<Rat> project_weight(const Partition& lambda, const RationalPoint& p);

// sum of x^{weight(z)} over the given points (multiplicities accumulate)
BetaPolynomial character_of_points(const Partition& lambda, const std::vector<GZPattern>& pts);

} // namespace gzl
