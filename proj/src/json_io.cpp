#include "gzl/json_io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gzl {

json poly_to_json(const BetaPolynomial& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    json t;
    t["beta"] = m.beta;
    t["exps"] = m.exps;
    t["coeff"] = c.str();
    terms.push_back(std::move(t));
  }
  return json{{"n", p.vars()}, {"terms", std::move(terms)}};
}

BetaPolynomial poly_from_json(const json& j) {
  BetaPolynomial p(j.at("n").get<int>());
  for (const auto& t : j.at("terms")) {
    Monomial m{t.at("beta").get<int>(), t.at("exps").get<std::vector<int>>()};
    p.add_term(m, Int(t.at("coeff").get<std::string>()));
  }
  return p;
}

json pattern_to_json(const Partition& lambda, const GZPattern& z) {
  json rows = json::array();
  for (size_t i = 1; i < z.rows.size(); ++i) rows.push_back(z.rows[i]);
  return json{{"lambda", lambda}, {"rows", std::move(rows)}};
}

GZPattern pattern_from_json(const json& j, Partition* lambda_out) {
  Partition lambda = j.at("lambda").get<Partition>();
  GZPattern z = top_row_pattern(lambda);
  const auto& rows = j.at("rows");
  if (rows.size() + 1 != z.rows.size())
    throw std::invalid_argument("pattern_from_json: wrong row count");
  for (size_t i = 0; i < rows.size(); ++i) {
    auto row = rows[i].get<std::vector<int>>();
    if (row.size() != z.rows[i + 1].size())
      throw std::invalid_argument("pattern_from_json: wrong row length");
    z.rows[i + 1] = std::move(row);
  }
  if (lambda_out) *lambda_out = lambda;
  return z;
}

json point_to_json(const RationalPoint& p) {
  json rows = json::array();
  for (const auto& row : p.rows) {
    json r = json::array();
    for (const Rat& v : row) r.push_back(rational_str(v));
    rows.push_back(std::move(r));
  }
  return json{{"rows", std::move(rows)}};
}

RationalPoint point_from_json(const json& j) {
  RationalPoint p;
  for (const auto& row : j.at("rows")) {
    std::vector<Rat> r;
    for (const auto& v : row) r.push_back(parse_rational(v.get<std::string>()));
    p.rows.push_back(std::move(r));
  }
  return p;
}

json diagram_to_json(const FaceDiagram& f) {
  json edges = json::array();
  for (auto [i, j] : f.edges) edges.push_back(json::array({i, j}));
  return json{{"n", f.n}, {"edges", std::move(edges)}};
}

FaceDiagram diagram_from_json(const json& j) {
  FaceDiagram f;
  f.n = j.at("n").get<int>();
  for (const auto& e : j.at("edges")) f.edges.insert({e.at(0).get<int>(), e.at(1).get<int>()});
  check_diagram(f);
  return f;
}

json enhanced_to_json(const EnhancedPattern& p) {
  Partition lambda(p.base.rows[0].rbegin(), p.base.rows[0].rend());
  json circ = json::array();
  for (auto [i, j] : p.circled) circ.push_back(json::array({i, j}));
  json edges = json::array();
  for (int i = 1; i <= p.n() - 1; ++i)
    for (int j = 1; j <= p.n() - i; ++j) {
      if (p.has_left(i, j)) edges.push_back(json::array({i, j, "L"}));
      if (p.has_right(i, j)) edges.push_back(json::array({i, j, "R"}));
    }
  BetaPolynomial m = pattern_monomial(p);
  json mono;
  if (m.is_zero()) {
    mono = nullptr;
  } else {
    const auto& [mm, c] = *m.terms().begin();
    mono = json{{"beta", mm.beta}, {"exps", mm.exps}, {"coeff", c.str()}};
  }
  return json{{"base", pattern_to_json(lambda, p.base)},
              {"circled", std::move(circ)},
              {"edges", std::move(edges)},
              {"rank", rank(p)},
              {"efficient", is_efficient(p)},
              {"monomial", std::move(mono)}};
}

EnhancedPattern enhanced_from_json(const json& j) {
  EnhancedPattern p;
  p.base = pattern_from_json(j.at("base"));
  for (const auto& c : j.at("circled")) p.circled.insert({c.at(0).get<int>(), c.at(1).get<int>()});
  for (const auto& e : j.at("edges")) {
    Pos q{e.at(0).get<int>(), e.at(1).get<int>()};
    std::string dir = e.at(2).get<std::string>();
    if (dir == "L") p.edge_left.insert(q);
    else if (dir == "R") p.edge_right.insert(q);
    else throw std::invalid_argument("enhanced_from_json: bad edge direction");
  }
  return p;
}

namespace {

json side_json(const CoordOrConst& s) {
  if (s.is_const) return json(s.cst);
  return json::array({s.pos.first, s.pos.second});
}

json bound_json(const BoundExpr& b) {
  json parts = json::array();
  if (b.cst) parts.push_back(*b.cst);
  for (Pos q : b.coords) parts.push_back(json::array({q.first, q.second}));
  return parts;
}

} // namespace

json cell_to_json(const CellConstraints& cc) {
  json list = json::array();
  for (const auto& e : cc.entries) {
    json rec;
    rec["coord"] = json::array({e.coord.first, e.coord.second});
    switch (e.kind) {
      case CoordConstraint::Kind::EqConst:
        rec["kind"] = "eq-const";
        rec["value"] = e.value;
        break;
      case CoordConstraint::Kind::EqCoord: {
        rec["kind"] = "eq-coord";
        json ts = json::array();
        for (Pos t : e.targets) ts.push_back(json::array({t.first, t.second}));
        rec["targets"] = std::move(ts);
        break;
      }
      case CoordConstraint::Kind::Interval:
        rec["kind"] = "interval";
        rec["lower"] = bound_json(e.lower);
        rec["upper"] = bound_json(e.upper);
        break;
    }
    list.push_back(std::move(rec));
  }
  json extras = json::array();
  for (const auto& [l, r] : cc.extras)
    extras.push_back(json{{"less", side_json(l)}, {"greater", side_json(r)}});
  json out;
  out["constraints"] = std::move(list);
  if (!extras.empty()) out["strict"] = std::move(extras);
  out["display"] = cc.str();
  return out;
}

json track_to_json(const Track& t) {
  json steps = json::array();
  for (size_t k = 0; k < t.ops.size(); ++k)
    steps.push_back(json{{"op", t.ops[k]},
                         {"beta", t.states[k + 1].beta},
                         {"exps", t.states[k + 1].exps}});
  return json{{"start", json{{"beta", t.states[0].beta}, {"exps", t.states[0].exps}}},
              {"steps", std::move(steps)}};
}

namespace {

std::vector<std::string> split_any(const std::string& s, const std::string& seps) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (seps.find(ch) != std::string::npos) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

int parse_int(const std::string& s) {
  size_t used = 0;
  int v = std::stoi(s, &used);
  if (used != s.size()) throw std::invalid_argument("bad integer: " + s);
  return v;
}

} // namespace

Partition parse_partition(const std::string& s) {
  Partition lambda;
  for (const auto& tok : split_any(s, ", ")) lambda.push_back(parse_int(tok));
  check_partition(lambda);
  return lambda;
}

Permutation parse_permutation(const std::string& s, int n) {
  auto toks = split_any(s, ", ");
  if (toks.empty()) throw std::invalid_argument("empty permutation");
  bool word_form = false;
  for (auto& t : toks)
    if (!t.empty() && (t[0] == 's' || t[0] == 'S')) word_form = true;
  if (!word_form && toks.size() == 1 && static_cast<int>(toks[0].size()) == n) {
    bool digits = std::all_of(toks[0].begin(), toks[0].end(), [](char c) { return c >= '0' && c <= '9'; });
    if (digits && n <= 9) { // compact one-line form
      std::vector<int> w;
      for (char c : toks[0]) w.push_back(c - '0');
      return Permutation(w);
    }
  }
  std::vector<int> vals;
  for (auto& t : toks) {
    std::string body = (!t.empty() && (t[0] == 's' || t[0] == 'S')) ? t.substr(1) : t;
    vals.push_back(parse_int(body));
  }
  if (!word_form && static_cast<int>(vals.size()) == n) {
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    bool perm = true;
    for (int v : vals) {
      if (v < 1 || v > n || seen[static_cast<size_t>(v)]) { perm = false; break; }
      seen[static_cast<size_t>(v)] = true;
    }
    if (perm) return Permutation(vals);
  }
  for (int v : vals)
    if (v < 1 || v >= n) throw std::invalid_argument("word letter out of range: s" + std::to_string(v));
  return word_product(vals, n);
}

RationalPoint parse_point(const std::string& s) {
  RationalPoint p;
  for (const auto& row : split_any(s, ";")) {
    std::vector<Rat> r;
    for (const auto& tok : split_any(row, ", ")) r.push_back(parse_rational(tok));
    if (r.empty()) throw std::invalid_argument("empty point row");
    p.rows.push_back(std::move(r));
  }
  return p;
}

Rat parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  Int num(s.substr(0, slash)), den(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: " + s);
  return Rat(num, den);
}

std::string rational_str(const Rat& r) {
  if (is_integer(r)) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

} // namespace gzl
