#ifndef TOPOLAB_IO_HPP
#define TOPOLAB_IO_HPP

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "topolab/coeff_seq.hpp"
#include "topolab/enumerate.hpp"
#include "topolab/families.hpp"
#include "topolab/topology.hpp"
#include "topolab/verify.hpp"

namespace topolab {

// Topologies serialize as {"n": 3, "opens": [0, 1, 3, 7]}, opens in storage
// order. Readers accept any order, ignore unknown keys, and validate.

nlohmann::json to_json(const Topology& t);
/// Throws ParseError on a malformed shape; validation errors (NotClosed, ...)
/// propagate unchanged.
Topology topology_from_json(const nlohmann::json& j);
/// Parses JSON text first. Throws ParseError on a syntax error.
Topology parse_topology(std::string_view text);

/// Decimal strings, so big coefficients survive any JSON reader.
nlohmann::json to_json(const CoeffSeq& s);
/// Accepts decimal strings or nonnegative integers. Throws ParseError.
CoeffSeq coeffs_from_json(const nlohmann::json& j);

nlohmann::json to_json(const MatchReport& r);
nlohmann::json to_json(const TheoremReport& r, bool with_timing = false);
nlohmann::json to_json(const EnumStats& s, bool with_timing = false);

/// Human rendering "{x1,x3}" with 1-based element names. Never parsed back.
std::string pretty(SetMask m, int n);

}  // namespace topolab

#endif  // TOPOLAB_IO_HPP
