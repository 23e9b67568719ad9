#include "gzl/kogan.hpp"

#include <algorithm>
#include <stdexcept>

namespace gzl {

bool place_exists(int n, int i, int j) { return i >= 1 && i <= n - 1 && j >= 1 && j <= n - i; }

void check_diagram(const FaceDiagram& f) {
  if (f.n < 1) throw std::invalid_argument("face diagram: need n >= 1");
  for (auto [i, j] : f.edges)
    if (!place_exists(f.n, i, j)) throw std::invalid_argument("face diagram: edge out of range");
}

Word face_word(const FaceDiagram& f) {
  check_diagram(f);
  Word w;
  for (int i = f.n - 1; i >= 1; --i)
    for (int j = f.n - i; j >= 1; --j)
      if (f.has_edge(i, j)) w.push_back(f.n - j);
  return w;
}

bool is_reduced_face(const FaceDiagram& f) { return is_reduced(face_word(f), f.n); }

Permutation face_permutation(const FaceDiagram& f) {
  return Permutation::longest(f.n).compose(word_product(face_word(f), f.n));
}

namespace {

struct FaceSearch {
  int n;
  const Permutation* filter;
  std::vector<std::pair<int, int>> places; // reading order
  FaceDiagram cur;
  std::vector<FaceDiagram> out;

  void run() {
    for (int i = n - 1; i >= 1; --i)
      for (int j = n - i; j >= 1; --j) places.push_back({i, j});
    cur.n = n;
    step(0, Permutation::identity(n));
  }

  void step(size_t idx, const Permutation& prod) {
    if (idx == places.size()) {
      if (!filter || face_permutation(cur) == *filter) out.push_back(cur);
      return;
    }
    auto [i, j] = places[idx];
    step(idx + 1, prod); // place empty
    int letter = n - j;  // appending stays reduced iff prod has an ascent at letter
    if (prod(letter) < prod(letter + 1)) {
      cur.edges.insert({i, j});
      step(idx + 1, prod.compose(Permutation::simple(n, letter)));
      cur.edges.erase({i, j});
    }
  }
};

} // namespace

std::vector<FaceDiagram> enumerate_reduced_faces(int n, const std::optional<Permutation>& w) {
  if (n < 1) throw std::invalid_argument("enumerate_reduced_faces: need n >= 1");
  if (w && w->degree() != n) throw std::invalid_argument("enumerate_reduced_faces: degree mismatch");
  FaceSearch s{n, w ? &*w : nullptr, {}, {}, {}};
  s.run();
  return s.out;
}

bool is_right_adjusted(const FaceDiagram& f) {
  check_diagram(f);
  for (int i = 1; i <= f.n - 1; ++i) {
    int count = 0;
    for (int j = 1; j <= f.n - i; ++j)
      if (f.has_edge(i, j)) ++count;
    for (int j = f.n - i; j > f.n - i - count; --j)
      if (!f.has_edge(i, j)) return false;
  }
  return true;
}

FaceDiagram right_adjusted_of(const Permutation& w) {
  const int n = w.degree();
  Permutation u = Permutation::longest(n).compose(w); // product(w^-(F)) must equal u
  std::vector<int> k = canonical_block_lengths(u);
  FaceDiagram f;
  f.n = n;
  for (int b = 1; b <= n - 1; ++b)
    for (int t = 0; t < k[static_cast<size_t>(b) - 1]; ++t) f.edges.insert({b, n - b - t});
  if (face_permutation(f) != w) throw std::logic_error("right_adjusted_of: round-trip failed");
  return f;
}

namespace {

// places seen as (row, up-right diagonal): place (i,j) lies on diagonal i+j
bool diag_place_exists(int n, int row, int diag) { return place_exists(n, row, diag - row); }
bool diag_has_edge(const FaceDiagram& f, int row, int diag) { return f.has_edge(row, diag - row); }

std::optional<FaceDiagram> down_move(const FaceDiagram& f, int t, int c) {
  const int n = f.n;
  // paired filled rows below the moving edge on diagonals c and c+1
  int m = 0;
  while (diag_place_exists(n, t + 1 + m, c) && diag_has_edge(f, t + 1 + m, c) &&
         diag_place_exists(n, t + 1 + m, c + 1) && diag_has_edge(f, t + 1 + m, c + 1))
    ++m;
  int b = t + m + 1;
  if (diag_place_exists(n, t, c + 1) && diag_has_edge(f, t, c + 1)) return std::nullopt;
  if (!diag_place_exists(n, b, c + 1) || diag_has_edge(f, b, c + 1)) return std::nullopt;
  if (diag_place_exists(n, b, c) && diag_has_edge(f, b, c)) return std::nullopt;
  FaceDiagram g = f;
  g.edges.erase({t, c - t});
  g.edges.insert({b, c + 1 - b});
  return g;
}

std::optional<FaceDiagram> up_move(const FaceDiagram& f, int b, int cr) {
  const int n = f.n;
  int c = cr - 1; // the diagonal to the left of the moving edge
  if (c < 2) return std::nullopt;
  int m = 0;
  while (b - 1 - m >= 1 && diag_place_exists(n, b - 1 - m, c) && diag_has_edge(f, b - 1 - m, c) &&
         diag_place_exists(n, b - 1 - m, c + 1) && diag_has_edge(f, b - 1 - m, c + 1))
    ++m;
  int t = b - m - 1;
  if (t < 1) return std::nullopt;
  if (diag_place_exists(n, b, c) && diag_has_edge(f, b, c)) return std::nullopt;
  if (!diag_place_exists(n, t, c) || diag_has_edge(f, t, c)) return std::nullopt;
  if (diag_place_exists(n, t, c + 1) && diag_has_edge(f, t, c + 1)) return std::nullopt;
  FaceDiagram g = f;
  g.edges.erase({b, c + 1 - b});
  g.edges.insert({t, c - t});
  return g;
}

} // namespace

std::optional<FaceDiagram> try_edge_move(const FaceDiagram& f, std::pair<int, int> edge, MoveDir dir) {
  check_diagram(f);
  auto [i, j] = edge;
  if (!f.has_edge(i, j)) return std::nullopt;
  return dir == MoveDir::Down ? down_move(f, i, i + j) : up_move(f, i, i + j);
}

FaceDiagram edge_move(const FaceDiagram& f, std::pair<int, int> edge, MoveDir dir) {
  auto g = try_edge_move(f, edge, dir);
  if (!g) throw MoveError("edge_move: local block pattern does not hold");
  return *g;
}

Permutation empty_places_permutation(const FaceDiagram& f) {
  if (!is_right_adjusted(f))
    throw std::invalid_argument("empty_places_permutation: diagram is not right-adjusted");
  Permutation p = Permutation::identity(f.n);
  for (int i = f.n - 1; i >= 1; --i)
    for (int j = 1; j <= f.n - i; ++j)
      if (!f.has_edge(i, j)) p = p.compose(Permutation::simple(f.n, f.n - i - j + 1));
  return p;
}

namespace {

void face_points_rec(const FaceDiagram& f, GZPattern& z, int i, int j, std::vector<GZPattern>& out) {
  const int n = z.n();
  if (i > n - 1) {
    out.push_back(z);
    return;
  }
  int ni = (j == n - i) ? i + 1 : i;
  int nj = (j == n - i) ? 1 : j + 1;
  if (f.has_edge(i, j)) { // y_{i,j} = y_{i-1,j+1}
    z.at(i, j) = z.at(i - 1, j + 1);
    face_points_rec(f, z, ni, nj, out);
  } else {
    for (int v = z.at(i - 1, j); v <= z.at(i - 1, j + 1); ++v) {
      z.at(i, j) = v;
      face_points_rec(f, z, ni, nj, out);
    }
  }
}

} // namespace

std::vector<GZPattern> face_integer_points(const FaceDiagram& f, const Partition& lambda) {
  check_diagram(f);
  if (static_cast<int>(lambda.size()) != f.n)
    throw std::invalid_argument("face_integer_points: size mismatch");
  GZPattern z = top_row_pattern(lambda);
  std::vector<GZPattern> out;
  if (f.n == 1) {
    out.push_back(z);
    return out;
  }
  face_points_rec(f, z, 1, 1, out);
  return out;
}

BetaPolynomial key_polynomial(const Permutation& w, const Partition& lambda) {
  if (w.degree() != static_cast<int>(lambda.size()))
    throw std::invalid_argument("key_polynomial: size mismatch");
  std::set<GZPattern> pts;
  for (const FaceDiagram& f : enumerate_reduced_faces(w.degree(), w))
    for (GZPattern& z : face_integer_points(f, lambda)) pts.insert(std::move(z));
  return character_of_points(lambda, std::vector<GZPattern>(pts.begin(), pts.end()));
}

std::string ascii_diagram(const FaceDiagram& f) {
  check_diagram(f);
  const int n = f.n;
  // dot (i,j) at text row 2i, column i + 2(j-1); edge (i,j) marked '/'
  int rows = 2 * (n - 1) + 1;
  int cols = 2 * n;
  std::vector<std::string> grid(static_cast<size_t>(rows), std::string(static_cast<size_t>(cols), ' '));
  for (int i = 0; i <= n - 1; ++i)
    for (int j = 1; j <= n - i; ++j)
      grid[static_cast<size_t>(2 * i)][static_cast<size_t>(i + 2 * (j - 1))] = '.';
  for (auto [i, j] : f.edges)
    grid[static_cast<size_t>(2 * i - 1)][static_cast<size_t>(i + 2 * (j - 1) + 1)] = '/';
  std::string out;
  for (auto& line : grid) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

} // namespace gzl
