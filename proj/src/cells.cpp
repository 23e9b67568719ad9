#include "gzl/cells.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gzl {

namespace {

// Equality-class resolution of a pattern: every coordinate resolves to an
// integer constant (pinned directly or through edges) or to the root of a
// variable class. Row 0 resolves to the lambda constants.
struct Resolution {
  int n = 0;
  std::vector<int> root;            // per position index, union-find result
  std::vector<std::optional<int>> pinned; // per root index

  int index(int i, int j) const { return i * n - i * (i - 1) / 2 + (j - 1); }
  CoordOrConst rep(int i, int j) const {
    int r = root[static_cast<size_t>(index(i, j))];
    if (pinned[static_cast<size_t>(r)]) return CoordOrConst::constant(*pinned[static_cast<size_t>(r)]);
    // report the root as a coordinate position
    for (int ri = 0; ri <= n - 1; ++ri)
      for (int rj = 1; rj <= n - ri; ++rj)
        if (index(ri, rj) == r) return CoordOrConst::coord({ri, rj});
    throw std::logic_error("resolution: root not found");
  }
};

Resolution resolve_classes(const EnhancedPattern& p, const Partition& lambda) {
  const int n = p.n();
  Resolution res;
  res.n = n;
  int total = n * (n + 1) / 2;
  std::vector<int> parent(static_cast<size_t>(total));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };
  auto unite = [&](int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); };
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - i; ++j) {
      if (p.has_left(i, j)) unite(res.index(i, j), res.index(i - 1, j));
      if (p.has_right(i, j)) unite(res.index(i, j), res.index(i - 1, j + 1));
    }
  res.root.resize(static_cast<size_t>(total));
  res.pinned.assign(static_cast<size_t>(total), std::nullopt);
  auto pin = [&res](int r, int v) {
    auto& slot = res.pinned[static_cast<size_t>(r)];
    if (slot && *slot != v) throw std::logic_error("resolution: inconsistent pins");
    slot = v;
  };
  for (int i = 0; i <= n - 1; ++i)
    for (int j = 1; j <= n - i; ++j) {
      int r = find(res.index(i, j));
      res.root[static_cast<size_t>(res.index(i, j))] = r;
      if (i == 0) pin(r, lambda[static_cast<size_t>(n - j)]);
      else if (p.has_circle(i, j) && !p.has_left(i, j) && !p.has_right(i, j))
        pin(r, p.value(i, j));
    }
  return res;
}

bool same_on_span(const Resolution& res, int i1, int j1, int i2, int j2) {
  CoordOrConst a = res.rep(i1, j1), b = res.rep(i2, j2);
  return a == b;
}

void add_lower(BoundExpr& b, const Resolution& res, CoordOrConst cand, Pos display) {
  // pinned coordinates fold into the constant part
  if (!cand.is_const) {
    CoordOrConst r = res.rep(cand.pos.first, cand.pos.second);
    if (r.is_const) cand = r;
  }
  if (cand.is_const) {
    if (!b.cst || *b.cst < cand.cst) b.cst = cand.cst;
    return;
  }
  for (Pos q : b.coords) // dedup by class
    if (res.rep(q.first, q.second) == res.rep(display.first, display.second)) return;
  b.coords.push_back(display);
}

void add_upper(BoundExpr& b, const Resolution& res, CoordOrConst cand, Pos display) {
  if (!cand.is_const) {
    CoordOrConst r = res.rep(cand.pos.first, cand.pos.second);
    if (r.is_const) cand = r;
  }
  if (cand.is_const) {
    if (!b.cst || *b.cst > cand.cst) b.cst = cand.cst;
    return;
  }
  for (Pos q : b.coords)
    if (res.rep(q.first, q.second) == res.rep(display.first, display.second)) return;
  b.coords.push_back(display);
}

} // namespace

CellConstraints cell_constraints(const EnhancedPattern& p, const Partition& lambda) {
  const int n = p.n();
  if (static_cast<int>(lambda.size()) != n)
    throw std::invalid_argument("cell_constraints: size mismatch");
  auto bad = validate(p);
  if (!bad.empty()) throw std::invalid_argument("cell_constraints: invalid enhanced pattern");

  Resolution res = resolve_classes(p, lambda);
  CellConstraints cc;
  cc.n = n;
  cc.lambda = lambda;

  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - i; ++j) {
      CoordConstraint e;
      e.coord = {i, j};
      bool l = p.has_left(i, j), r = p.has_right(i, j);
      if (l || r) {
        if (i == 1) { // edges into the fixed top row pin the value
          e.kind = CoordConstraint::Kind::EqConst;
          e.value = p.value(i, j);
        } else {
          e.kind = CoordConstraint::Kind::EqCoord;
          if (l) e.targets.push_back({i - 1, j});
          if (r) e.targets.push_back({i - 1, j + 1});
        }
      } else if (p.has_circle(i, j)) {
        e.kind = CoordConstraint::Kind::EqConst;
        e.value = p.value(i, j);
      } else {
        e.kind = CoordConstraint::Kind::Interval;
        int v = p.value(i, j);
        if (v - p.value(i - 1, j) >= 2)
          add_lower(e.lower, res, CoordOrConst::constant(v - 1), {i - 1, j});
        else if (i == 1)
          add_lower(e.lower, res, CoordOrConst::constant(p.value(0, j)), {0, j});
        else
          add_lower(e.lower, res, CoordOrConst::coord({i - 1, j}), {i - 1, j});
        if (p.value(i - 1, j + 1) == v && i > 1)
          add_upper(e.upper, res, CoordOrConst::coord({i - 1, j + 1}), {i - 1, j + 1});
        else
          add_upper(e.upper, res, CoordOrConst::constant(p.value(i - 1, j + 1) == v
                                                             ? p.value(0, j + 1)
                                                             : v),
                    {i - 1, j + 1});
      }
      cc.entries.push_back(std::move(e));
    }

  // relative-interior refinement: every defining inequality that is not an
  // identity on the affine span becomes strict
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - i; ++j) {
      auto& e = cc.entries[static_cast<size_t>(res.index(i, j) - n)];
      for (int side = 0; side < 2; ++side) {
        int ui = i - 1, uj = side == 0 ? j : j + 1; // lower / upper neighbor
        if (same_on_span(res, i, j, ui, uj)) continue;
        CoordOrConst a = res.rep(side == 0 ? ui : i, side == 0 ? uj : j);
        CoordOrConst b = res.rep(side == 0 ? i : ui, side == 0 ? j : uj);
        if (a.is_const && b.is_const) {
          if (a.cst >= b.cst) throw std::logic_error("cell_constraints: inconsistent system");
          continue; // vacuous
        }
        if (e.kind == CoordConstraint::Kind::Interval) {
          CoordOrConst cand = ui == 0 ? CoordOrConst::constant(p.value(0, uj))
                                      : CoordOrConst::coord({ui, uj});
          if (side == 0) add_lower(e.lower, res, cand, {ui, uj});
          else add_upper(e.upper, res, cand, {ui, uj});
        } else {
          CoordOrConst lhs = side == 0 ? (ui == 0 ? CoordOrConst::constant(p.value(0, uj))
                                                  : CoordOrConst::coord({ui, uj}))
                                       : CoordOrConst::coord({i, j});
          CoordOrConst rhs = side == 0 ? CoordOrConst::coord({i, j})
                                       : (ui == 0 ? CoordOrConst::constant(p.value(0, uj))
                                                  : CoordOrConst::coord({ui, uj}));
          // dedup by resolved class pair
          bool dup = false;
          auto rep_of = [&res](const CoordOrConst& s) {
            return s.is_const ? s : res.rep(s.pos.first, s.pos.second);
          };
          for (auto& [el, er] : cc.extras)
            if (rep_of(el) == rep_of(lhs) && rep_of(er) == rep_of(rhs)) { dup = true; break; }
          if (!dup) cc.extras.push_back({lhs, rhs});
        }
      }
    }

  // drop extras already implied by the retained constant bounds: the class
  // of a coordinate is bounded by the interval entry of its top vertex
  auto const_bound = [&](const CoordOrConst& s, bool upper) -> std::optional<int> {
    if (s.is_const) return s.cst;
    CoordOrConst r = res.rep(s.pos.first, s.pos.second);
    if (r.is_const) return r.cst;
    for (const auto& e : cc.entries) {
      if (e.kind != CoordConstraint::Kind::Interval) continue;
      if (res.rep(e.coord.first, e.coord.second) != r) continue;
      return upper ? e.upper.cst : e.lower.cst;
    }
    return std::nullopt;
  };
  std::erase_if(cc.extras, [&](const std::pair<CoordOrConst, CoordOrConst>& x) {
    auto hi = const_bound(x.first, true), lo = const_bound(x.second, false);
    return hi && lo && *hi <= *lo;
  });
  return cc;
}

namespace {

std::string pos_str(Pos q) { return "y" + std::to_string(q.first) + std::to_string(q.second); }

std::string bound_str(const BoundExpr& b, bool lower) {
  std::vector<std::string> parts;
  if (b.cst) parts.push_back(std::to_string(*b.cst));
  for (Pos q : b.coords) parts.push_back(pos_str(q));
  if (parts.size() == 1) return parts.front();
  std::string s = lower ? "max(" : "min(";
  for (size_t k = 0; k < parts.size(); ++k) {
    if (k) s += ",";
    s += parts[k];
  }
  return s + ")";
}

} // namespace

std::string CellConstraints::str() const {
  std::vector<std::string> parts;
  for (const auto& e : entries) {
    switch (e.kind) {
      case CoordConstraint::Kind::EqConst:
        parts.push_back(pos_str(e.coord) + "=" + std::to_string(e.value));
        break;
      case CoordConstraint::Kind::EqCoord:
        for (Pos t : e.targets) parts.push_back(pos_str(e.coord) + "=" + pos_str(t));
        break;
      case CoordConstraint::Kind::Interval:
        parts.push_back(bound_str(e.lower, true) + "<" + pos_str(e.coord) + "<" +
                        bound_str(e.upper, false));
        break;
    }
  }
  for (const auto& [l, r] : extras)
    parts.push_back((l.is_const ? std::to_string(l.cst) : pos_str(l.pos)) + "<" +
                    (r.is_const ? std::to_string(r.cst) : pos_str(r.pos)));
  std::string out;
  for (size_t k = 0; k < parts.size(); ++k) {
    if (k) out += ", ";
    out += parts[k];
  }
  return out;
}

namespace {

bool eval_system(const CellConstraints& cc, const Partition& lambda, const RationalPoint& y,
                 bool strict) {
  auto val = [&](Pos q) { return point_value(lambda, y, q.first, q.second); };
  auto less = [strict](const Rat& a, const Rat& b) { return strict ? a < b : a <= b; };
  for (const auto& e : cc.entries) {
    Rat v = val(e.coord);
    switch (e.kind) {
      case CoordConstraint::Kind::EqConst:
        if (v != e.value) return false;
        break;
      case CoordConstraint::Kind::EqCoord:
        for (Pos t : e.targets)
          if (v != val(t)) return false;
        break;
      case CoordConstraint::Kind::Interval:
        if (e.lower.cst && !less(Rat(*e.lower.cst), v)) return false;
        for (Pos q : e.lower.coords)
          if (!less(val(q), v)) return false;
        if (e.upper.cst && !less(v, Rat(*e.upper.cst))) return false;
        for (Pos q : e.upper.coords)
          if (!less(v, val(q))) return false;
        break;
    }
  }
  for (const auto& [l, r] : cc.extras) {
    Rat a = l.is_const ? Rat(l.cst) : val(l.pos);
    Rat b = r.is_const ? Rat(r.cst) : val(r.pos);
    if (!less(a, b)) return false;
  }
  return true;
}

} // namespace

bool cell_contains(const EnhancedPattern& p, const Partition& lambda, const RationalPoint& y) {
  return eval_system(cell_constraints(p, lambda), lambda, y, true);
}

bool cell_closure_contains(const EnhancedPattern& p, const Partition& lambda,
                           const RationalPoint& y) {
  return gz_contains(lambda, y) && eval_system(cell_constraints(p, lambda), lambda, y, false);
}

EnhancedPattern point_to_pattern(const Partition& lambda, const RationalPoint& y) {
  check_partition(lambda);
  if (!gz_contains(lambda, y)) throw OutsidePolytopeError("point_to_pattern: point outside GZ(lambda)");
  const int n = static_cast<int>(lambda.size());
  EnhancedPattern p;
  p.base = top_row_pattern(lambda);
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - i; ++j) {
      Rat v = point_value(lambda, y, i, j);
      bool eqL = v == point_value(lambda, y, i - 1, j);
      bool eqR = v == point_value(lambda, y, i - 1, j + 1);
      if (eqL || eqR) {
        p.circled.insert({i, j});
        int a = 0;
        if (eqL) {
          p.edge_left.insert({i, j});
          a = p.base.at(i - 1, j);
        }
        if (eqR) {
          p.edge_right.insert({i, j});
          a = p.base.at(i - 1, j + 1);
        }
        if (eqL && eqR && p.base.at(i - 1, j) != p.base.at(i - 1, j + 1))
          throw std::logic_error("point_to_pattern: inconsistent labels on an equal pair");
        p.base.at(i, j) = a;
      } else {
        int aL = p.base.at(i - 1, j), aR = p.base.at(i - 1, j + 1);
        if (is_integer(v) && v >= aL + 1) {
          p.base.at(i, j) = to_int(numerator(v)); // a 0-dimensional coordinate
          p.circled.insert({i, j});
        } else {
          // open-interval coordinate; the label may not exceed the
          // upper-right label (equal upper labels squeeze the fiber)
          int a = v < aL + 1 ? aL + 1 : to_int(rat_ceil(v));
          p.base.at(i, j) = std::min(a, aR);
        }
      }
    }
  auto bad = validate(p);
  if (!bad.empty()) throw std::logic_error("point_to_pattern: produced an invalid pattern");
  return p;
}

std::vector<EnhancedPattern> closure_patterns(const Partition& lambda, const RationalPoint& y) {
  if (!gz_contains(lambda, y)) throw OutsidePolytopeError("closure_patterns: point outside GZ(lambda)");
  std::vector<EnhancedPattern> out;
  for (EnhancedPattern& p : enumerate_all(lambda))
    if (cell_closure_contains(p, lambda, y)) out.push_back(std::move(p));
  return out;
}

namespace {

bool face_implied(Resolution& res, const FaceDiagram& f) {
  for (auto [i, j] : f.edges)
    if (res.rep(i, j) != res.rep(i - 1, j + 1)) return false;
  return true;
}

} // namespace

bool cell_in_face(const EnhancedPattern& p, const FaceDiagram& f, const Partition& lambda) {
  if (p.n() != f.n || static_cast<int>(lambda.size()) != f.n)
    throw std::invalid_argument("cell_in_face: size mismatch");
  Resolution res = resolve_classes(p, lambda);
  return face_implied(res, f);
}

std::vector<EnhancedPattern> patterns_for_perm(const Permutation& w, const Partition& lambda) {
  if (w.degree() != static_cast<int>(lambda.size()))
    throw std::invalid_argument("patterns_for_perm: size mismatch");
  std::vector<FaceDiagram> faces = enumerate_reduced_faces(w.degree(), w);
  std::vector<EnhancedPattern> out;
  for (EnhancedPattern& p : enumerate_efficient(lambda)) {
    Resolution res = resolve_classes(p, lambda);
    for (const FaceDiagram& f : faces)
      if (face_implied(res, f)) {
        out.push_back(std::move(p));
        break;
      }
  }
  return out;
}

std::vector<size_t> patterns_for_perm_indexed(const Permutation& w, const Partition& lambda,
                                              const std::vector<EnhancedPattern>& pool) {
  std::vector<FaceDiagram> faces = enumerate_reduced_faces(w.degree(), w);
  std::vector<size_t> out;
  for (size_t k = 0; k < pool.size(); ++k) {
    Resolution res = resolve_classes(pool[k], lambda);
    for (const FaceDiagram& f : faces)
      if (face_implied(res, f)) {
        out.push_back(k);
        break;
      }
  }
  return out;
}

BetaPolynomial lascoux_via_cells(const Permutation& w, const Partition& lambda) {
  BetaPolynomial r(static_cast<int>(lambda.size()));
  for (const EnhancedPattern& p : patterns_for_perm(w, lambda)) r += pattern_monomial(p);
  return r;
}

namespace {

std::vector<int> batch_ops(int n) {
  std::vector<int> ops;
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - i; ++j) ops.push_back(j);
  return ops;
}

EnhancedPattern track_pattern_impl(const Track& t, const Partition& lambda) {
  const int n = static_cast<int>(lambda.size());
  std::vector<int> ops = batch_ops(n);
  if (t.ops != ops || t.states.size() != ops.size() + 1)
    throw std::invalid_argument("track_to_pattern: malformed track");
  GZPattern base = top_row_pattern(lambda);
  std::set<Pos> circled;
  size_t step = 0;
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - i; ++j) {
      ++step; // batch i, operator pi_j; fills entry (i, n-i+1-j)
      const Monomial& before = t.states[step - 1];
      const Monomial& after = t.states[step];
      base.at(i, n - i + 1 - j) = after.exps[static_cast<size_t>(j) - 1];
      if (before.beta == after.beta) circled.insert({i, n - i + 1 - j});
    }
  if (!pattern_is_valid(base))
    throw ReconstructError("track_to_pattern: track rows do not interlace");
  return reconstruct_edges(base, circled);
}

void track_dfs(const Partition& lambda, const std::vector<int>& ops, size_t step, Track& cur,
               std::vector<Track>& out) {
  const int n = static_cast<int>(lambda.size());
  if (step == ops.size()) {
    try {
      EnhancedPattern p = track_pattern_impl(cur, lambda);
      if (pattern_monomial(p) == BetaPolynomial::term(cur.states.back(), 1)) out.push_back(cur);
    } catch (const ReconstructError&) {
      // the chain does not define a pattern; discard
    }
    return;
  }
  BetaPolynomial expanded = demazure_lascoux(BetaPolynomial::term(cur.states.back(), 1), ops[step]);
  for (const auto& [m, c] : expanded.terms()) {
    if (c != 1 && c != -1) throw std::logic_error("enumerate_tracks: unexpected coefficient");
    if (c != 1) continue;
    cur.states.push_back(m);
    track_dfs(lambda, ops, step + 1, cur, out);
    cur.states.pop_back();
  }
}

} // namespace

std::vector<Track> enumerate_tracks(const Partition& lambda) {
  check_partition(lambda);
  const int n = static_cast<int>(lambda.size());
  Track cur;
  cur.ops = batch_ops(n);
  cur.states.push_back(Monomial{0, lambda});
  std::vector<Track> out;
  track_dfs(lambda, cur.ops, 0, cur, out);
  return out;
}

EnhancedPattern track_to_pattern(const Track& t, const Partition& lambda) {
  return track_pattern_impl(t, lambda);
}

namespace {

std::string point_str(const Partition& lambda, const RationalPoint& y) {
  std::ostringstream os;
  for (size_t i = 0; i < y.rows.size(); ++i) {
    if (i) os << "; ";
    for (size_t j = 0; j < y.rows[i].size(); ++j) {
      if (j) os << ",";
      os << y.rows[i][j];
    }
  }
  (void)lambda;
  return os.str();
}

} // namespace

CellReport verify_cellular(const Partition& lambda, int denominator) {
  check_partition(lambda);
  if (denominator < 1) throw std::invalid_argument("verify_cellular: denominator must be positive");
  const int n = static_cast<int>(lambda.size());
  CellReport rep;
  rep.lambda = lambda;
  rep.denominator = denominator;

  std::vector<EnhancedPattern> cells = enumerate_all(lambda);
  rep.cells = cells.size();
  std::vector<CellConstraints> systems;
  systems.reserve(cells.size());
  for (const auto& p : cells) systems.push_back(cell_constraints(p, lambda));
  for (const auto& p : cells) {
    if (rank(p) == 0) rep.rank0_cells++;
    rep.euler += (rank(p) % 2 == 0) ? 1 : -1;
  }
  rep.integer_points = weyl_dimension(lambda);
  if (Int(static_cast<long>(rep.rank0_cells)) != rep.integer_points)
    rep.failures.push_back("rank-0 cell count does not match the integer point count");
  if (rep.euler != 1) rep.failures.push_back("Euler characteristic is not 1");

  // grid points of GZ(lambda) with the given denominator = integer points
  // of GZ(d*lambda) scaled back
  Partition scaled(lambda);
  for (int& v : scaled) v *= denominator;
  for (const GZPattern& z : enumerate_gz_patterns(scaled)) {
    RationalPoint y = to_rational_point(z);
    for (auto& row : y.rows)
      for (Rat& v : row) v /= denominator;
    rep.grid_points++;

    size_t hits = 0, hit_idx = 0;
    for (size_t k = 0; k < cells.size(); ++k)
      if (eval_system(systems[k], lambda, y, true)) {
        hits++;
        hit_idx = k;
      }
    if (hits != 1) {
      rep.failures.push_back("point " + point_str(lambda, y) + " lies in " + std::to_string(hits) +
                             " cells");
      continue;
    }
    EnhancedPattern located = point_to_pattern(lambda, y);
    if (!(located == cells[hit_idx])) {
      rep.failures.push_back("point " + point_str(lambda, y) +
                             ": located cell differs from the containing cell");
      continue;
    }
    bool integral = true;
    for (const auto& row : y.rows)
      for (const Rat& v : row) integral = integral && is_integer(v);
    if (integral && rank(located) != 0)
      rep.failures.push_back("integer point " + point_str(lambda, y) + " not in a 0-cell");

    bool saw_self = false;
    for (size_t k = 0; k < cells.size(); ++k) {
      if (!eval_system(systems[k], lambda, y, false)) continue;
      if (k == hit_idx) {
        saw_self = true;
        continue;
      }
      if (rank(cells[k]) <= rank(cells[hit_idx]))
        rep.failures.push_back("point " + point_str(lambda, y) +
                               ": closure cell of rank <= containing cell");
    }
    if (!saw_self)
      rep.failures.push_back("point " + point_str(lambda, y) + ": containing cell closure misses it");
  }
  return rep;
}

Int euler_characteristic(const Partition& lambda) {
  Int e = 0;
  for (const EnhancedPattern& p : enumerate_all(lambda)) e += (rank(p) % 2 == 0) ? 1 : -1;
  return e;
}

} // namespace gzl
