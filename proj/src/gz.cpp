#include "gzl/gz.hpp"

#include <numeric>
#include <stdexcept>

namespace gzl {

void check_partition(const Partition& lambda) {
  if (lambda.empty()) throw std::invalid_argument("partition: empty");
  for (size_t k = 0; k < lambda.size(); ++k) {
    if (lambda[k] < 0) throw std::invalid_argument("partition: negative part");
    if (k + 1 < lambda.size() && lambda[k] < lambda[k + 1])
      throw std::invalid_argument("partition: not weakly decreasing");
  }
}

GZPattern top_row_pattern(const Partition& lambda) {
  check_partition(lambda);
  const int n = static_cast<int>(lambda.size());
  GZPattern z;
  z.rows.resize(static_cast<size_t>(n));
  z.rows[0].assign(lambda.rbegin(), lambda.rend());
  for (int i = 1; i <= n - 1; ++i) z.rows[static_cast<size_t>(i)].assign(static_cast<size_t>(n - i), 0);
  return z;
}

bool pattern_shape_ok(const Partition& lambda, const GZPattern& z) {
  const int n = static_cast<int>(lambda.size());
  if (static_cast<int>(z.rows.size()) != n) return false;
  for (int i = 0; i <= n - 1; ++i)
    if (static_cast<int>(z.rows[static_cast<size_t>(i)].size()) != n - i) return false;
  for (int j = 1; j <= n; ++j)
    if (z.at(0, j) != lambda[static_cast<size_t>(n - j)]) return false;
  return true;
}

bool pattern_is_valid(const GZPattern& z) {
  const int n = z.n();
  for (int i = 1; i <= n - 1; ++i) {
    if (static_cast<int>(z.rows[static_cast<size_t>(i)].size()) != n - i) return false;
    for (int j = 1; j <= n - i; ++j)
      if (!(z.at(i - 1, j) <= z.at(i, j) && z.at(i, j) <= z.at(i - 1, j + 1))) return false;
  }
  return true;
}

RationalPoint to_rational_point(const GZPattern& z) {
  RationalPoint p;
  const int n = z.n();
  p.rows.resize(static_cast<size_t>(n) - 1);
  for (int i = 1; i <= n - 1; ++i) {
    auto& row = p.rows[static_cast<size_t>(i) - 1];
    row.reserve(static_cast<size_t>(n - i));
    for (int j = 1; j <= n - i; ++j) row.emplace_back(z.at(i, j));
  }
  return p;
}

GZPattern integer_point_pattern(const Partition& lambda, const RationalPoint& p) {
  GZPattern z = top_row_pattern(lambda);
  const int n = static_cast<int>(lambda.size());
  if (p.n() != n) throw std::invalid_argument("integer_point_pattern: shape mismatch");
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - i; ++j) {
      const Rat& v = p.at(i, j);
      if (!is_integer(v)) throw std::invalid_argument("integer_point_pattern: not an integer point");
      z.at(i, j) = to_int(numerator(v));
    }
  return z;
}

Rat point_value(const Partition& lambda, const RationalPoint& p, int i, int j) {
  if (i == 0) return Rat(lambda[static_cast<size_t>(lambda.size()) - static_cast<size_t>(j)]);
  return p.at(i, j);
}

bool gz_contains(const Partition& lambda, const RationalPoint& p) {
  check_partition(lambda);
  const int n = static_cast<int>(lambda.size());
  if (p.n() != n) throw std::invalid_argument("gz_contains: shape mismatch");
  for (int i = 1; i <= n - 1; ++i) {
    if (static_cast<int>(p.rows[static_cast<size_t>(i) - 1].size()) != n - i)
      throw std::invalid_argument("gz_contains: shape mismatch");
    for (int j = 1; j <= n - i; ++j) {
      const Rat& v = p.at(i, j);
      if (point_value(lambda, p, i - 1, j) > v) return false;
      if (v > point_value(lambda, p, i - 1, j + 1)) return false;
    }
  }
  return true;
}

namespace {

void enumerate_rec(GZPattern& z, int i, int j, std::vector<GZPattern>& out) {
  const int n = z.n();
  if (i > n - 1) {
    out.push_back(z);
    return;
  }
  int ni = (j == n - i) ? i + 1 : i;
  int nj = (j == n - i) ? 1 : j + 1;
  for (int v = z.at(i - 1, j); v <= z.at(i - 1, j + 1); ++v) {
    z.at(i, j) = v;
    enumerate_rec(z, ni, nj, out);
  }
}

} // namespace

std::vector<GZPattern> enumerate_gz_patterns(const Partition& lambda) {
  GZPattern z = top_row_pattern(lambda);
  std::vector<GZPattern> out;
  if (lambda.size() == 1) {
    out.push_back(z);
    return out;
  }
  enumerate_rec(z, 1, 1, out);
  return out;
}

Int weyl_dimension(const Partition& lambda) {
  check_partition(lambda);
  const int n = static_cast<int>(lambda.size());
  Int num = 1, den = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      num *= lambda[static_cast<size_t>(i) - 1] - lambda[static_cast<size_t>(j) - 1] - i + j;
      den *= j - i;
    }
  if (num % den != 0) throw std::logic_error("weyl_dimension: non-integer result");
  return num / den;
}

std::vector<int> project_weight(const Partition& lambda, const GZPattern& z) {
  const int n = static_cast<int>(lambda.size());
  if (!pattern_shape_ok(lambda, z)) throw std::invalid_argument("project_weight: shape mismatch");
  std::vector<long long> sums(static_cast<size_t>(n) + 1, 0); // S_i, S_n = 0
  for (int i = 0; i <= n - 1; ++i)
    for (int j = 1; j <= n - i; ++j) sums[static_cast<size_t>(i)] += z.at(i, j);
  std::vector<int> a(static_cast<size_t>(n));
  for (int k = 1; k <= n; ++k)
    a[static_cast<size_t>(k) - 1] = static_cast<int>(sums[static_cast<size_t>(n - k)] - sums[static_cast<size_t>(n - k + 1)]);
  return a;
}

std::vector<Rat> project_weight(const Partition& lambda, const RationalPoint& p) {
  const int n = static_cast<int>(lambda.size());
  std::vector<Rat> sums(static_cast<size_t>(n) + 1, Rat(0));
  for (int i = 0; i <= n - 1; ++i)
    for (int j = 1; j <= n - i; ++j) sums[static_cast<size_t>(i)] += point_value(lambda, p, i, j);
  std::vector<Rat> a(static_cast<size_t>(n));
  for (int k = 1; k <= n; ++k)
    a[static_cast<size_t>(k) - 1] = sums[static_cast<size_t>(n - k)] - sums[static_cast<size_t>(n - k + 1)];
  return a;
}

BetaPolynomial character_of_points(const Partition& lambda, const std::vector<GZPattern>& pts) {
  const int n = static_cast<int>(lambda.size());
  BetaPolynomial ch(n);
  for (const GZPattern& z : pts) ch.add_term(Monomial{0, project_weight(lambda, z)}, 1);
  return ch;
}

} // namespace gzl
