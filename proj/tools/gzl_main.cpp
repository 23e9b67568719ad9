// gzl command line: compute polynomials by operator recursion or by the
// cell decomposition, enumerate patterns/faces/cells/tracks, locate points,
// and run the verification suites.
//
// Exit codes: 0 success, 1 verification or containment failure, 2 usage error.

#include "gzl/json_io.hpp"
#include "gzl/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace gzl;

json envelope(const std::string& command, json result) {
  return json{{"version", 1}, {"command", command}, {"result", std::move(result)}};
}

struct CommonArgs {
  std::string lambda_str;
  std::string perm_str;
  std::string method = "operator";
  std::string format = "text";
  std::optional<long long> beta_spec;
};

int cmd_compute(const std::string& kind, const CommonArgs& a) {
  Partition lambda = parse_partition(a.lambda_str);
  const int n = static_cast<int>(lambda.size());
  BetaPolynomial value(n);
  if (kind == "lascoux" || kind == "key") {
    if (a.perm_str.empty()) throw CLI::ValidationError("--perm is required for " + kind);
    Permutation w = parse_permutation(a.perm_str, n);
    if (a.method == "operator") {
      value = lascoux_w_lambda(w, lambda);
    } else {
      value = lascoux_via_cells(w, lambda);
    }
    if (kind == "key") {
      if (a.method == "cells") {
        value = key_polynomial(w, lambda); // integer points of the dual Kogan faces
        BetaPolynomial check = specialize_beta(lascoux_w_lambda(w, lambda), 0);
        if (value != check) {
          std::cerr << "key/face cross-check failed for w=" << w.str() << "\n";
          return 1;
        }
      } else {
        value = specialize_beta(value, 0);
      }
    }
  } else if (kind == "grothendieck") {
    value = a.method == "cells"
                ? grothendieck_via_patterns(lambda)
                : apply_word(BetaPolynomial::x_power(lambda), w0_word_coxeter(n));
  } else if (kind == "schur") {
    if (a.method == "cells") {
      std::vector<GZPattern> pts = enumerate_gz_patterns(lambda);
      if (Int(static_cast<long>(pts.size())) != weyl_dimension(lambda)) {
        std::cerr << "point count does not match the Weyl dimension\n";
        return 1;
      }
      value = character_of_points(lambda, pts);
    } else {
      value = specialize_beta(apply_word(BetaPolynomial::x_power(lambda), w0_word_coxeter(n)), 0);
    }
  } else {
    throw CLI::ValidationError("unknown kind: " + kind);
  }
  if (a.beta_spec) value = specialize_beta(value, Int(*a.beta_spec));
  if (a.format == "json")
    std::cout << envelope("compute", poly_to_json(value)).dump() << "\n";
  else
    std::cout << value.str() << "\n";
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Lascoux / key / Grothendieck / Schur polynomials via "
               "Gelfand-Zetlin subdivisions"};
  app.require_subcommand(1);

  CommonArgs a;
  std::string kind = "lascoux", what = "patterns", point_str, suite = "all", base_str;
  int opt_n = 0, max_n = 3, max_part = 4, denominator = 2;
  std::uint64_t seed = 20240901;
  bool efficient_only = false, closure = false;

  CLI::App* compute = app.add_subcommand("compute", "compute one polynomial");
  compute->add_option("--kind", kind, "lascoux|key|grothendieck|schur")->required();
  compute->add_option("--lambda", a.lambda_str, "partition, e.g. 3,2,0")->required();
  compute->add_option("--perm", a.perm_str, "one-line ('312') or word ('s2 s1')");
  compute->add_option("--method", a.method)->check(CLI::IsMember({"operator", "cells"}));
  compute->add_option("--beta-spec", a.beta_spec, "substitute this integer for beta");
  compute->add_option("--format", a.format)->check(CLI::IsMember({"text", "json"}));

  CLI::App* enumerate = app.add_subcommand("enumerate", "stream records as JSON lines");
  enumerate->add_option("what", what, "patterns|faces|cells|tracks")
      ->check(CLI::IsMember({"patterns", "faces", "cells", "tracks"}));
  enumerate->add_option("--lambda", a.lambda_str, "partition");
  enumerate->add_option("--n", opt_n, "rank for 'faces'");
  enumerate->add_option("--perm", a.perm_str, "filter by permutation");
  enumerate->add_option("--base", base_str, "one base pattern, rows 'a,b;c'");
  enumerate->add_flag("--efficient-only", efficient_only, "drop inefficient patterns");

  CLI::App* locate = app.add_subcommand("locate", "cell of a rational point");
  locate->add_option("--lambda", a.lambda_str)->required();
  locate->add_option("--point", point_str, "rows ';'-separated, entries 'p/q'")->required();
  locate->add_flag("--closure", closure, "also list cells whose closure contains the point");

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", suite,
                     "all|operators|main1|main2|key|cellular|kogan|lemmas|bruhat");
  verify->add_option("--max-n", max_n);
  verify->add_option("--max-part", max_part);
  verify->add_option("--denominator", denominator);
  verify->add_option("--seed", seed);

  CLI11_PARSE(app, argc, argv);

  try {
    if (compute->parsed()) return cmd_compute(kind, a);

    if (enumerate->parsed()) {
      size_t count = 0;
      if (what == "faces") {
        int n = opt_n ? opt_n : static_cast<int>(parse_partition(a.lambda_str).size());
        std::optional<Permutation> w;
        if (!a.perm_str.empty()) w = parse_permutation(a.perm_str, n);
        for (const FaceDiagram& f : enumerate_reduced_faces(n, w)) {
          json j = diagram_to_json(f);
          j["perm"] = face_permutation(f).str();
          std::cout << j.dump() << "\n";
          ++count;
        }
      } else {
        Partition lambda = parse_partition(a.lambda_str);
        const int n = static_cast<int>(lambda.size());
        if (what == "tracks") {
          for (const Track& t : enumerate_tracks(lambda)) {
            std::cout << track_to_json(t).dump() << "\n";
            ++count;
          }
        } else {
          std::vector<EnhancedPattern> pats;
          if (!base_str.empty()) {
            GZPattern base = top_row_pattern(lambda);
            json jb{{"lambda", lambda}, {"rows", json::array()}};
            for (const auto& row : parse_point(base_str).rows) {
              json r = json::array();
              for (const Rat& v : row) {
                if (!is_integer(v)) throw CLI::ValidationError("--base must be integral");
                r.push_back(to_int(numerator(v)));
              }
              jb["rows"].push_back(std::move(r));
            }
            pats = enumerate_enhancements(pattern_from_json(jb));
          } else {
            pats = enumerate_all(lambda);
          }
          std::optional<std::vector<EnhancedPattern>> filter;
          if (!a.perm_str.empty()) {
            auto member = patterns_for_perm(parse_permutation(a.perm_str, n), lambda);
            filter = std::move(member);
          }
          for (const EnhancedPattern& p : pats) {
            if (efficient_only && !is_efficient(p)) continue;
            if (filter &&
                std::find(filter->begin(), filter->end(), p) == filter->end())
              continue;
            if (what == "cells") {
              json j = cell_to_json(cell_constraints(p, lambda));
              j["pattern"] = enhanced_to_json(p);
              std::cout << j.dump() << "\n";
            } else {
              std::cout << enhanced_to_json(p).dump() << "\n";
            }
            ++count;
          }
        }
      }
      std::cerr << "count: " << count << "\n";
      return 0;
    }

    if (locate->parsed()) {
      Partition lambda = parse_partition(a.lambda_str);
      RationalPoint y = parse_point(point_str);
      EnhancedPattern p;
      try {
        p = point_to_pattern(lambda, y);
      } catch (const OutsidePolytopeError& e) {
        std::cerr << e.what() << "\n";
        return 1;
      }
      json result;
      result["pattern"] = enhanced_to_json(p);
      result["cell"] = cell_to_json(cell_constraints(p, lambda));
      if (closure) {
        json cl = json::array();
        for (const EnhancedPattern& q : closure_patterns(lambda, y))
          cl.push_back(enhanced_to_json(q));
        result["closure"] = std::move(cl);
      }
      std::cout << envelope("locate", std::move(result)).dump() << "\n";
      return 0;
    }

    if (verify->parsed()) {
      VerifyOptions opt = VerifyOptions::bounds(max_n, max_part);
      opt.denominators = {1, denominator};
      opt.seed = seed;
      opt.progress = &std::cerr;
      bool all_ok = true;
      for (const VerifyReport& r : run_suites(suite, opt)) {
        all_ok = all_ok && r.ok();
        std::cout << (r.ok() ? "PASS " : "FAIL ") << r.suite << ": " << r.cases << " cases, "
                  << r.failures.size() << " failures (" << static_cast<long>(r.wall_ms)
                  << " ms)\n";
        for (const std::string& f : r.failures) std::cout << "  " << f << "\n";
      }
      return all_ok ? 0 : 1;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 2;
}
