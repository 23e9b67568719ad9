#include "gzl/enhanced.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace gzl {

namespace {

// union-find over pattern positions, rows 0..n-1
struct PosUF {
  int n;
  std::vector<int> parent;

  explicit PosUF(int n_) : n(n_) {
    parent.resize(static_cast<size_t>(n * (n + 1) / 2));
    std::iota(parent.begin(), parent.end(), 0);
  }
  int index(int i, int j) const {
    // row i starts after rows 0..i-1 of sizes n, n-1, ...
    int off = i * n - i * (i - 1) / 2;
    return off + (j - 1);
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
  bool connected(int a, int b) { return find(a) == find(b); }
  void unite(Pos a, Pos b) { unite(index(a.first, a.second), index(b.first, b.second)); }
  bool connected(Pos a, Pos b) { return connected(index(a.first, a.second), index(b.first, b.second)); }
};

// subgraph on rows <= top_row: top-row value adjacency plus all up-edges
// whose lower endpoint lies in rows 1..top_row
PosUF uf_up_to_row(const EnhancedPattern& p, int top_row) {
  const int n = p.n();
  PosUF uf(n);
  for (int j = 1; j <= n - 1; ++j)
    if (p.value(0, j) == p.value(0, j + 1)) uf.unite({0, j}, {0, j + 1});
  for (int i = 1; i <= std::min(top_row, n - 1); ++i)
    for (int j = 1; j <= n - i; ++j) {
      if (p.has_left(i, j)) uf.unite({i, j}, {i - 1, j});
      if (p.has_right(i, j)) uf.unite({i, j}, {i - 1, j + 1});
    }
  return uf;
}

bool upper_pair_connected(const EnhancedPattern& p, int i, int j) {
  PosUF uf = uf_up_to_row(p, i - 1);
  return uf.connected({i - 1, j}, {i - 1, j + 1});
}

} // namespace

std::vector<Violation> validate(const EnhancedPattern& p) {
  std::vector<Violation> out;
  const int n = p.n();
  if (n < 1 || !pattern_is_valid(p.base)) {
    out.push_back({0, {0, 0}, "base is not a Gelfand-Zetlin pattern"});
    return out;
  }
  auto in_range = [n](Pos q) {
    return q.first >= 1 && q.first <= n - 1 && q.second >= 1 && q.second <= n - q.first;
  };
  for (Pos q : p.circled)
    if (!in_range(q)) {
      out.push_back({0, q, "circle out of range"});
      return out;
    }
  for (const auto& s : {p.edge_left, p.edge_right})
    for (Pos q : s)
      if (!in_range(q)) {
        out.push_back({0, q, "edge out of range"});
        return out;
      }

  // condition 2: edge endpoints equal, lower endpoint encircled
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - i; ++j) {
      bool l = p.has_left(i, j), r = p.has_right(i, j);
      if ((l || r) && !p.has_circle(i, j))
        out.push_back({2, {i, j}, "edge from an entry without a circle"});
      if (l && p.value(i, j) != p.value(i - 1, j))
        out.push_back({2, {i, j}, "up-left edge joins unequal entries"});
      if (r && p.value(i, j) != p.value(i - 1, j + 1))
        out.push_back({2, {i, j}, "up-right edge joins unequal entries"});
    }
  if (!out.empty()) return out; // later checks assume well-formed edges

  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - i; ++j) {
      int v = p.value(i, j), uL = p.value(i - 1, j), uR = p.value(i - 1, j + 1);
      bool circ = p.has_circle(i, j), l = p.has_left(i, j), r = p.has_right(i, j);
      if (uL == v && uR > v) { // condition 5: triangle (a, b / a)
        if (!circ) out.push_back({5, {i, j}, "bottom of an (a,b/a) triangle must be encircled"});
        if (!l) out.push_back({5, {i, j}, "bottom of an (a,b/a) triangle must join the left entry"});
      }
      if (uL < v && uR == v && circ && !r) // condition 6
        out.push_back({6, {i, j}, "encircled bottom of an (a,b/b) triangle must join the right entry"});
      if (uL == v && uR == v) {
        bool path = upper_pair_connected(p, i, j);
        if (i == 1 && !(circ && l && r)) // condition 4: equal top-row entries
          out.push_back({4, {i, j}, "entry below equal top-row entries must be encircled and joined to both"});
        else if (path && !(circ && l && r))
          out.push_back({7, {i, j}, "top pair joined above, so the bottom must be encircled and joined to both"});
        if (!path && l && r)
          out.push_back({3, {i, j}, "joined below without being joined above"});
        if (circ && !l && !r)
          out.push_back({8, {i, j}, "encircled bottom of an (a,a/a) triangle needs an edge"});
      }
    }
  return out;
}

int rank(const EnhancedPattern& p) {
  const int n = p.n();
  return n * (n - 1) / 2 - static_cast<int>(p.circled.size());
}

bool is_efficient(const EnhancedPattern& p) {
  const int n = p.n();
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - i; ++j)
      if (p.value(i, j) == p.value(i - 1, j) && p.value(i, j) == p.value(i - 1, j + 1) &&
          !p.has_right(i, j))
        return false;
  return true;
}

std::vector<Component> connected_components(const EnhancedPattern& p) {
  const int n = p.n();
  PosUF uf = uf_up_to_row(p, n - 1);
  std::map<int, std::vector<Pos>> groups;
  for (int i = 0; i <= n - 1; ++i)
    for (int j = 1; j <= n - i; ++j) groups[uf.find(uf.index(i, j))].push_back({i, j});
  std::vector<Component> out;
  for (auto& [root, members] : groups) {
    Component c;
    std::sort(members.begin(), members.end());
    c.members = members;
    c.top = members.front(); // smallest row first; unique by the component lemma
    int top_row = c.top.first;
    for (const Pos& q : members)
      if (q.first == top_row && q != c.top)
        throw std::logic_error("connected_components: highest vertex is not unique");
    c.constant = top_row == 0 || p.has_circle(c.top.first, c.top.second);
    c.value = p.value(c.top.first, c.top.second);
    out.push_back(std::move(c));
  }
  return out;
}

BetaPolynomial pattern_monomial(const EnhancedPattern& p) {
  const int n = p.n();
  if (!is_efficient(p)) return BetaPolynomial::zero(n);
  std::vector<long long> sums(static_cast<size_t>(n) + 1, 0);    // S_i, S_n = 0
  std::vector<int> uncirc(static_cast<size_t>(n) + 1, 0);        // D_i, D_n = 0
  for (int i = 0; i <= n - 1; ++i)
    for (int j = 1; j <= n - i; ++j) {
      sums[static_cast<size_t>(i)] += p.value(i, j);
      if (i >= 1 && !p.has_circle(i, j)) uncirc[static_cast<size_t>(i)]++;
    }
  std::vector<int> d(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i)
    d[static_cast<size_t>(n - i)] = static_cast<int>(sums[static_cast<size_t>(i) - 1] -
                                                     sums[static_cast<size_t>(i)]) +
                                    uncirc[static_cast<size_t>(i)];
  return BetaPolynomial::term(Monomial{rank(p), d}, 1);
}

EnhancedPattern reconstruct_edges(const GZPattern& base, const std::set<Pos>& circled) {
  const int n = base.n();
  EnhancedPattern p;
  p.base = base;
  p.circled = circled;
  PosUF uf(n);
  for (int j = 1; j <= n - 1; ++j)
    if (base.at(0, j) == base.at(0, j + 1)) uf.unite({0, j}, {0, j + 1});
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = 1; j <= n - i; ++j) {
      if (!p.has_circle(i, j)) continue;
      int v = base.at(i, j);
      bool eqL = base.at(i - 1, j) == v, eqR = base.at(i - 1, j + 1) == v;
      if (eqL && eqR) {
        if (uf.connected({i - 1, j}, {i - 1, j + 1})) {
          p.edge_left.insert({i, j});
          p.edge_right.insert({i, j});
        } else {
          p.edge_right.insert({i, j}); // the efficient choice
        }
      } else if (eqL) {
        p.edge_left.insert({i, j});
      } else if (eqR) {
        p.edge_right.insert({i, j});
      }
    }
    for (int j = 1; j <= n - i; ++j) { // row done; expose its edges to path queries
      if (p.has_left(i, j)) uf.unite({i, j}, {i - 1, j});
      if (p.has_right(i, j)) uf.unite({i, j}, {i - 1, j + 1});
    }
  }
  auto bad = validate(p);
  if (!bad.empty())
    throw ReconstructError("reconstruct_edges: circle set admits no efficient enhancement (condition " +
                           std::to_string(bad.front().condition) + " at (" +
                           std::to_string(bad.front().pos.first) + "," +
                           std::to_string(bad.front().pos.second) + "))");
  return p;
}

namespace {

struct EntryOption {
  bool circ;
  bool left, right;
};

// valid (circle, edges) choices for one entry given the rows above
std::vector<EntryOption> entry_options(const GZPattern& base, PosUF& uf, int i, int j) {
  int v = base.at(i, j);
  bool eqL = base.at(i - 1, j) == v, eqR = base.at(i - 1, j + 1) == v;
  if (eqL && !eqR) return {{true, true, false}}; // condition 5: forced
  if (!eqL && eqR) return {{false, false, false}, {true, false, true}};
  if (eqL && eqR) {
    if (uf.connected({i - 1, j}, {i - 1, j + 1}))
      return {{true, true, true}}; // conditions 4/7: forced
    return {{false, false, false}, {true, true, false}, {true, false, true}};
  }
  return {{false, false, false}, {true, false, false}};
}

void enumerate_rows(const GZPattern& base, int i, PosUF uf, EnhancedPattern& cur,
                    std::vector<EnhancedPattern>& out) {
  const int n = base.n();
  if (i > n - 1) {
    if (validate(cur).empty()) out.push_back(cur);
    return;
  }
  const int len = n - i;
  std::vector<std::vector<EntryOption>> opts(static_cast<size_t>(len));
  for (int j = 1; j <= len; ++j) opts[static_cast<size_t>(j) - 1] = entry_options(base, uf, i, j);
  std::vector<size_t> pick(static_cast<size_t>(len), 0);
  for (;;) {
    for (int j = 1; j <= len; ++j) {
      const EntryOption& o = opts[static_cast<size_t>(j) - 1][pick[static_cast<size_t>(j) - 1]];
      if (o.circ) cur.circled.insert({i, j});
      if (o.left) cur.edge_left.insert({i, j});
      if (o.right) cur.edge_right.insert({i, j});
    }
    PosUF next = uf;
    for (int j = 1; j <= len; ++j) {
      if (cur.has_left(i, j)) next.unite({i, j}, {i - 1, j});
      if (cur.has_right(i, j)) next.unite({i, j}, {i - 1, j + 1});
    }
    enumerate_rows(base, i + 1, std::move(next), cur, out);
    for (int j = 1; j <= len; ++j) {
      cur.circled.erase({i, j});
      cur.edge_left.erase({i, j});
      cur.edge_right.erase({i, j});
    }
    // next assignment of this row
    int j = 0;
    while (j < len) {
      if (++pick[static_cast<size_t>(j)] < opts[static_cast<size_t>(j)].size()) break;
      pick[static_cast<size_t>(j)] = 0;
      ++j;
    }
    if (j == len) break;
  }
}

} // namespace

std::vector<EnhancedPattern> enumerate_enhancements(const GZPattern& base) {
  if (!pattern_is_valid(base))
    throw std::invalid_argument("enumerate_enhancements: invalid base pattern");
  const int n = base.n();
  EnhancedPattern cur;
  cur.base = base;
  PosUF uf(n);
  for (int j = 1; j <= n - 1; ++j)
    if (base.at(0, j) == base.at(0, j + 1)) uf.unite({0, j}, {0, j + 1});
  std::vector<EnhancedPattern> out;
  if (n == 1) {
    out.push_back(cur);
    return out;
  }
  enumerate_rows(base, 1, std::move(uf), cur, out);
  return out;
}

std::vector<EnhancedPattern> enumerate_all(const Partition& lambda) {
  std::vector<EnhancedPattern> out;
  for (const GZPattern& z : enumerate_gz_patterns(lambda)) {
    auto more = enumerate_enhancements(z);
    out.insert(out.end(), more.begin(), more.end());
  }
  return out;
}

std::vector<EnhancedPattern> enumerate_efficient(const Partition& lambda) {
  std::vector<EnhancedPattern> out;
  for (EnhancedPattern& p : enumerate_all(lambda))
    if (is_efficient(p)) out.push_back(std::move(p));
  return out;
}

BetaPolynomial grothendieck_via_patterns(const Partition& lambda) {
  BetaPolynomial g(static_cast<int>(lambda.size()));
  for (const EnhancedPattern& p : enumerate_efficient(lambda)) g += pattern_monomial(p);
  return g;
}

} // namespace gzl
