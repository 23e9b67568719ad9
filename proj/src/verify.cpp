#include "gzl/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

namespace gzl {

namespace {

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
};

std::string part_str(const Partition& lambda) {
  std::string s = "(";
  for (size_t k = 0; k < lambda.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(lambda[k]);
  }
  return s + ")";
}

void progress(const VerifyOptions& opt, const std::string& msg) {
  if (opt.progress) *opt.progress << msg << std::endl;
}

// deterministic bounded integers independent of the standard library's
// distribution implementations
struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  int below(int m) { return static_cast<int>(gen() % static_cast<std::uint64_t>(m)); }
};

BetaPolynomial random_poly(Rng& rng, int n) {
  BetaPolynomial p(n);
  int terms = 1 + rng.below(6);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    m.beta = rng.below(3);
    m.exps.resize(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) m.exps[static_cast<size_t>(k)] = rng.below(5);
    int c = rng.below(19) - 9;
    if (c == 0) c = 1;
    p.add_term(m, c);
  }
  return p;
}

Word coxeter_cycle_word(int k) { // word for c_k = s_k...s_1
  Word w;
  for (int l = k; l >= 1; --l) w.push_back(l);
  return w;
}

} // namespace

VerifyOptions VerifyOptions::bounds(int max_n, int max_part) {
  VerifyOptions opt;
  for (int n = 2; n <= max_n; ++n) opt.ranges.push_back({n, max_part});
  return opt;
}

std::vector<Partition> partitions_up_to(int n, int max_part) {
  std::vector<Partition> out;
  Partition cur(static_cast<size_t>(n), 0);
  auto rec = [&](auto&& self, int idx, int hi) -> void {
    if (idx == n) {
      out.push_back(cur);
      return;
    }
    for (int v = hi; v >= 0; --v) {
      cur[static_cast<size_t>(idx)] = v;
      self(self, idx + 1, v);
    }
  };
  rec(rec, 0, max_part);
  return out;
}

VerifyReport verify_operators(const VerifyOptions& opt) {
  Timer timer;
  VerifyReport rep{"operators"};
  Rng rng(opt.seed);
  for (const SweepRange& r : opt.ranges) {
    const int n = r.n;
    progress(opt, "operators: n=" + std::to_string(n));
    for (int it = 0; it < opt.random_polys; ++it) {
      BetaPolynomial p = random_poly(rng, n), q = random_poly(rng, n);
      auto fail = [&](const std::string& what, int i) {
        rep.failures.push_back("n=" + std::to_string(n) + " iter=" + std::to_string(it) + " " +
                               what + " at i=" + std::to_string(i) + "; p=" + p.str() +
                               "; q=" + q.str());
      };
      for (int i = 1; i <= n - 1; ++i) {
        rep.cases += 4;
        if (!divided_difference(divided_difference(p, i), i).is_zero())
          fail("d_i d_i != 0", i);
        BetaPolynomial pi = demazure_lascoux(p, i);
        if (demazure_lascoux(pi, i) != pi) fail("pi_i not idempotent", i);
        if (!demazure_lascoux(pi - p, i).is_zero()) fail("pi_i(pi_i f - f) != 0", i);
        BetaPolynomial f = p + p.swap_vars(i); // symmetric in x_i, x_{i+1}
        if (demazure_lascoux(f * q, i) != f * demazure_lascoux(q, i))
          fail("pi_i(f q) != f pi_i(q) for symmetric f", i);
      }
      for (int i = 1; i <= n - 1; ++i)
        for (int j = i + 2; j <= n - 1; ++j) {
          rep.cases++;
          if (demazure_lascoux(demazure_lascoux(p, i), j) !=
              demazure_lascoux(demazure_lascoux(p, j), i))
            fail("pi_i pi_j != pi_j pi_i", i);
        }
      for (int i = 1; i <= n - 2; ++i) {
        rep.cases++;
        BetaPolynomial lhs = demazure_lascoux(demazure_lascoux(demazure_lascoux(p, i), i + 1), i);
        BetaPolynomial rhs =
            demazure_lascoux(demazure_lascoux(demazure_lascoux(p, i + 1), i), i + 1);
        if (lhs != rhs) fail("braid relation", i);
      }
    }
  }
  rep.wall_ms = timer.ms();
  return rep;
}

VerifyReport verify_main1(const VerifyOptions& opt) {
  Timer timer;
  VerifyReport rep{"main1"};
  for (const SweepRange& r : opt.ranges) {
    progress(opt, "main1: n=" + std::to_string(r.n) + " max_part=" + std::to_string(r.max_part));
    for (const Partition& lambda : partitions_up_to(r.n, r.max_part)) {
      rep.cases++;
      BetaPolynomial lhs = grothendieck_via_patterns(lambda);
      BetaPolynomial rhs = apply_word(BetaPolynomial::x_power(lambda), w0_word_coxeter(r.n));
      if (lhs != rhs)
        rep.failures.push_back("lambda=" + part_str(lambda) + ": pattern sum " + lhs.str() +
                               " != operator value " + rhs.str());
    }
  }
  rep.wall_ms = timer.ms();
  return rep;
}

VerifyReport verify_main2(const VerifyOptions& opt) {
  Timer timer;
  VerifyReport rep{"main2"};
  for (const SweepRange& r : opt.ranges) {
    std::vector<Permutation> perms = all_permutations(r.n);
    for (const Partition& lambda : partitions_up_to(r.n, r.max_part)) {
      progress(opt, "main2: n=" + std::to_string(r.n) + " lambda=" + part_str(lambda));
      std::vector<EnhancedPattern> pool = enumerate_efficient(lambda);
      std::vector<BetaPolynomial> monos;
      monos.reserve(pool.size());
      for (const auto& p : pool) monos.push_back(pattern_monomial(p));
      for (const Permutation& w : perms) {
        rep.cases++;
        BetaPolynomial lhs(r.n);
        for (size_t k : patterns_for_perm_indexed(w, lambda, pool)) lhs += monos[k];
        BetaPolynomial rhs = lascoux_w_lambda(w, lambda);
        if (lhs != rhs)
          rep.failures.push_back("lambda=" + part_str(lambda) + " w=" + w.str() + ": cells " +
                                 lhs.str() + " != operators " + rhs.str());
      }
    }
  }
  rep.wall_ms = timer.ms();
  return rep;
}

VerifyReport verify_key(const VerifyOptions& opt) {
  Timer timer;
  VerifyReport rep{"key"};
  for (const SweepRange& r : opt.ranges) {
    std::vector<Permutation> perms = all_permutations(r.n);
    for (const Partition& lambda : partitions_up_to(r.n, r.max_part)) {
      progress(opt, "key: n=" + std::to_string(r.n) + " lambda=" + part_str(lambda));
      // Schur polynomial and point count for the whole polytope
      rep.cases++;
      std::vector<GZPattern> pts = enumerate_gz_patterns(lambda);
      if (Int(static_cast<long>(pts.size())) != weyl_dimension(lambda))
        rep.failures.push_back("lambda=" + part_str(lambda) + ": point count " +
                               std::to_string(pts.size()) + " != Weyl dimension " +
                               weyl_dimension(lambda).str());
      BetaPolynomial schur = character_of_points(lambda, pts);
      BetaPolynomial expected =
          specialize_beta(lascoux_w_lambda(Permutation::longest(r.n), lambda), 0);
      if (schur != expected)
        rep.failures.push_back("lambda=" + part_str(lambda) + ": character " + schur.str() +
                               " != Schur " + expected.str());
      for (const Permutation& w : perms) {
        rep.cases++;
        BetaPolynomial key = key_polynomial(w, lambda);
        BetaPolynomial spec = specialize_beta(lascoux_w_lambda(w, lambda), 0);
        if (key != spec)
          rep.failures.push_back("lambda=" + part_str(lambda) + " w=" + w.str() + ": key " +
                                 key.str() + " != Lascoux at beta=0 " + spec.str());
      }
    }
  }
  rep.wall_ms = timer.ms();
  return rep;
}

VerifyReport verify_cellular_suite(const VerifyOptions& opt) {
  Timer timer;
  VerifyReport rep{"cellular"};
  for (const SweepRange& r : opt.ranges) {
    if (r.n > 3) continue; // grids are swept at small rank only
    for (const Partition& lambda : partitions_up_to(r.n, r.max_part))
      for (int d : opt.denominators) {
        progress(opt, "cellular: lambda=" + part_str(lambda) + " d=" + std::to_string(d));
        rep.cases++;
        CellReport c = verify_cellular(lambda, d);
        for (const std::string& f : c.failures)
          rep.failures.push_back("lambda=" + part_str(lambda) + " d=" + std::to_string(d) + ": " + f);
      }
  }
  rep.wall_ms = timer.ms();
  return rep;
}

VerifyReport verify_kogan(const VerifyOptions& opt) {
  Timer timer;
  VerifyReport rep{"kogan"};
  for (const SweepRange& r : opt.ranges) {
    const int n = r.n;
    progress(opt, "kogan: n=" + std::to_string(n));
    std::vector<FaceDiagram> faces = enumerate_reduced_faces(n);
    std::map<Permutation, std::vector<FaceDiagram>> by_perm;
    for (const FaceDiagram& f : faces) {
      rep.cases++;
      Permutation w = face_permutation(f);
      by_perm[w].push_back(f);
      if (w.length() + static_cast<int>(f.edges.size()) != n * (n - 1) / 2)
        rep.failures.push_back("n=" + std::to_string(n) + ": dim F != length of w(F) for edges of " +
                               w.str());
      for (auto e : f.edges)
        for (MoveDir dir : {MoveDir::Down, MoveDir::Up}) {
          rep.cases++;
          auto g = try_edge_move(f, e, dir);
          if (!g) continue;
          if (!is_reduced_face(*g) || face_permutation(*g) != w)
            rep.failures.push_back("n=" + std::to_string(n) + ": edge move broke w(F)=" + w.str());
        }
    }
    for (const Permutation& w : all_permutations(n)) {
      rep.cases++;
      auto it = by_perm.find(w);
      if (it == by_perm.end()) {
        rep.failures.push_back("n=" + std::to_string(n) + ": no reduced face for w=" + w.str());
        continue;
      }
      const auto& group = it->second;
      int adjusted = 0;
      for (const FaceDiagram& f : group)
        if (is_right_adjusted(f)) {
          ++adjusted;
          if (empty_places_permutation(f) != w)
            rep.failures.push_back("n=" + std::to_string(n) +
                                   ": empty-places reading disagrees for w=" + w.str());
        }
      if (adjusted != 1)
        rep.failures.push_back("n=" + std::to_string(n) + ": " + std::to_string(adjusted) +
                               " right-adjusted faces for w=" + w.str());
      FaceDiagram start = right_adjusted_of(w);
      if (!group.empty() && std::find(group.begin(), group.end(), start) == group.end())
        rep.failures.push_back("n=" + std::to_string(n) + ": right_adjusted_of(w) not in the class of w=" +
                               w.str());
      // reachability by edge moves
      std::set<FaceDiagram> seen{start};
      std::vector<FaceDiagram> queue{start};
      while (!queue.empty()) {
        FaceDiagram f = queue.back();
        queue.pop_back();
        for (auto e : f.edges)
          for (MoveDir dir : {MoveDir::Down, MoveDir::Up})
            if (auto g = try_edge_move(f, e, dir))
              if (seen.insert(*g).second) queue.push_back(*g);
      }
      if (seen.size() != group.size())
        rep.failures.push_back("n=" + std::to_string(n) + ": edge moves reach " +
                               std::to_string(seen.size()) + " of " + std::to_string(group.size()) +
                               " faces for w=" + w.str());
    }
    if (n == 3) { // the seven three-dimensional faces and their labels
      rep.cases++;
      std::map<std::set<std::pair<int, int>>, std::string> expected{
          {{}, "321"},
          {{{1, 1}, {1, 2}}, "213"},
          {{{2, 1}, {1, 2}}, "132"},
          {{{1, 2}}, "231"},
          {{{1, 1}}, "312"},
          {{{2, 1}}, "312"},
          {{{1, 1}, {1, 2}, {2, 1}}, "123"},
      };
      bool ok = faces.size() == expected.size();
      for (const FaceDiagram& f : faces) {
        auto it = expected.find(f.edges);
        if (it == expected.end() || face_permutation(f).str() != it->second) ok = false;
      }
      if (!ok) rep.failures.push_back("n=3: reduced faces differ from the reference set");
    }
  }
  rep.wall_ms = timer.ms();
  return rep;
}

VerifyReport verify_lemmas(const VerifyOptions& opt) {
  Timer timer;
  VerifyReport rep{"lemmas"};
  for (const SweepRange& r : opt.ranges) {
    const int n = r.n;
    for (const Partition& mu : partitions_up_to(n, r.max_part)) {
      for (int k = 1; k <= n - 1; ++k) {
        rep.cases++;
        BetaPolynomial v = apply_word(BetaPolynomial::x_power(mu), coxeter_cycle_word(k));
        if (!is_multiplicity_free(v)) {
          std::string witness;
          for (const auto& [m, c] : v.terms())
            if (c != 1) {
              witness = BetaPolynomial::term(m, c).str();
              break;
            }
          rep.failures.push_back("multiplicity-freeness fails: n=" + std::to_string(n) + " mu=" +
                                 part_str(mu) + " k=" + std::to_string(k) + ", term " + witness);
        }
      }
      if (n >= 3) { // kernel identity for the nonalternating part
        rep.cases++;
        progress(opt, "lemmas: kernel n=" + std::to_string(n) + " lambda=" + part_str(mu));
        BetaPolynomial top = apply_word(BetaPolynomial::x_power(mu), coxeter_cycle_word(n - 1));
        BetaPolynomial rest = nonalternating_part(top, mu);
        Word small = w0_word_coxeter(n - 1); // word for c_1...c_{n-2}
        if (!apply_word(rest, small).is_zero())
          rep.failures.push_back("kernel identity fails: n=" + std::to_string(n) + " lambda=" +
                                 part_str(mu));
      }
    }
  }
  rep.wall_ms = timer.ms();
  return rep;
}

VerifyReport verify_bruhat(const VerifyOptions& opt) {
  Timer timer;
  VerifyReport rep{"bruhat"};
  for (const SweepRange& r : opt.ranges) {
    std::vector<Permutation> perms = all_permutations(r.n);
    for (const Partition& lambda : partitions_up_to(r.n, r.max_part)) {
      progress(opt, "bruhat: n=" + std::to_string(r.n) + " lambda=" + part_str(lambda));
      std::vector<EnhancedPattern> pool = enumerate_efficient(lambda);
      std::vector<BetaPolynomial> las;
      std::vector<std::vector<size_t>> members;
      las.reserve(perms.size());
      for (const Permutation& w : perms) {
        las.push_back(lascoux_w_lambda(w, lambda));
        members.push_back(patterns_for_perm_indexed(w, lambda, pool));
      }
      for (size_t a = 0; a < perms.size(); ++a)
        for (size_t b = 0; b < perms.size(); ++b) {
          if (!bruhat_leq(perms[a], perms[b])) continue;
          rep.cases++;
          BetaPolynomial diff = las[b] - las[a];
          bool nonneg = true;
          for (const auto& [m, c] : diff.terms())
            if (c < 0) nonneg = false;
          if (!nonneg)
            rep.failures.push_back("lambda=" + part_str(lambda) + ": L_" + perms[b].str() + " - L_" +
                                   perms[a].str() + " has a negative coefficient");
          if (!std::includes(members[b].begin(), members[b].end(), members[a].begin(),
                             members[a].end()))
            rep.failures.push_back("lambda=" + part_str(lambda) + ": P+(" + perms[a].str() +
                                   ") not contained in P+(" + perms[b].str() + ")");
        }
    }
  }
  rep.wall_ms = timer.ms();
  return rep;
}

std::vector<VerifyReport> run_suites(const std::string& which, const VerifyOptions& opt) {
  std::vector<VerifyReport> out;
  auto want = [&which](const char* name) { return which == "all" || which == name; };
  if (want("operators")) out.push_back(verify_operators(opt));
  if (want("main1")) out.push_back(verify_main1(opt));
  if (want("main2")) out.push_back(verify_main2(opt));
  if (want("key")) out.push_back(verify_key(opt));
  if (want("cellular")) out.push_back(verify_cellular_suite(opt));
  if (want("kogan")) out.push_back(verify_kogan(opt));
  if (want("lemmas")) out.push_back(verify_lemmas(opt));
  if (want("bruhat")) out.push_back(verify_bruhat(opt));
  if (out.empty()) throw std::invalid_argument("unknown suite: " + which);
  return out;
}

} // namespace gzl
