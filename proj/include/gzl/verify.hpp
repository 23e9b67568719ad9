// Exhaustive small-rank verification suites. Every suite runs exact
// identities over explicit ranges and reports each failing case with the
// data needed to reproduce it.
#pragma once

#include "gzl/cells.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace gzl {

struct VerifyReport {
  std::string suite;
  long cases = 0;
  std::vector<std::string> failures;
  double wall_ms = 0;

  bool ok() const { return failures.empty(); }
};

struct SweepRange {
  int n;
  int max_part;
};

struct VerifyOptions {
  std::vector<SweepRange> ranges; // one entry per n
  std::vector<int> denominators{1, 2, 3};
  std::uint64_t seed = 20240901;
  int random_polys = 100;
  std::ostream* progress = nullptr;

  static VerifyOptions bounds(int max_n, int max_part);
};

// all weakly decreasing vectors with n parts in [0, max_part]
std::vector<Partition> partitions_up_to(int n, int max_part);

VerifyReport verify_operators(const VerifyOptions& opt); // operator identities on random polynomials
VerifyReport verify_main1(const VerifyOptions& opt);     // pattern sum vs operator Grothendieck
VerifyReport verify_main2(const VerifyOptions& opt);     // cell formula vs operator Lascoux
VerifyReport verify_key(const VerifyOptions& opt);       // key/Schur specializations
VerifyReport verify_cellular_suite(const VerifyOptions& opt);
VerifyReport verify_kogan(const VerifyOptions& opt);     // face diagrams, moves, readings
VerifyReport verify_lemmas(const VerifyOptions& opt);    // multiplicity-freeness, kernel identity
VerifyReport verify_bruhat(const VerifyOptions& opt);    // monotonicity in the Bruhat order

// which: all | operators | main1 | main2 | key | cellular | kogan | lemmas | bruhat
std::vector<VerifyReport> run_suites(const std::string& which, const VerifyOptions& opt);

} // namespace gzl
