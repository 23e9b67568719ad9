// JSON schemas and text parsing for the library types. Coefficients travel
// as decimal strings, rationals as "p/q" strings; term and record orders
// are the canonical ones, so identical inputs serialize identically.
#pragma once

#include "gzl/cells.hpp"

#include <json.hpp>

#include <string>

namespace gzl {

using json = nlohmann::ordered_json;

json poly_to_json(const BetaPolynomial& p);
BetaPolynomial poly_from_json(const json& j);

json pattern_to_json(const Partition& lambda, const GZPattern& z);
GZPattern pattern_from_json(const json& j, Partition* lambda_out = nullptr);

json point_to_json(const RationalPoint& p);
RationalPoint point_from_json(const json& j);

json diagram_to_json(const FaceDiagram& f);
FaceDiagram diagram_from_json(const json& j);

json enhanced_to_json(const EnhancedPattern& p);
EnhancedPattern enhanced_from_json(const json& j);

json cell_to_json(const CellConstraints& cc);

json track_to_json(const Track& t);

// "3,2,0" (or "3 2 0")
Partition parse_partition(const std::string& s);

// one-line form ("312" or "3,1,2") or a word ("s1 s2", "1,2"); one-line is
// chosen when the tokens form a permutation of 1..n
Permutation parse_permutation(const std::string& s, int n);

// rows separated by ';', entries by ',', each an integer or "p/q"
RationalPoint parse_point(const std::string& s);

Rat parse_rational(const std::string& s);
std::string rational_str(const Rat& r);

} // namespace gzl
