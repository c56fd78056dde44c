#include "topolab/io.hpp"

#include "topolab/errors.hpp"

namespace topolab {

nlohmann::json to_json(const Topology& t) {
  nlohmann::json opens = nlohmann::json::array();
  for (SetMask m : t.opens()) opens.push_back(m.bits());
  return {{"n", t.ground_size()}, {"opens", std::move(opens)}};
}

Topology topology_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("topology must be a JSON object");
  const auto n_it = j.find("n");
  const auto opens_it = j.find("opens");
  if (n_it == j.end() || !n_it->is_number_integer()) throw ParseError("missing integer field \"n\"");
  if (opens_it == j.end() || !opens_it->is_array()) throw ParseError("missing array field \"opens\"");
  const auto n = n_it->get<std::int64_t>();
  if (n < 1 || n > kMaxGroundSize) {
    throw GroundSizeOutOfRange("ground size " + std::to_string(n) + " outside 1.." + std::to_string(kMaxGroundSize));
  }
  std::vector<SetMask> masks;
  masks.reserve(opens_it->size());
  for (const auto& v : *opens_it) {
    if (!v.is_number_integer()) throw ParseError("opens must be integers");
    const auto bits = v.get<std::int64_t>();
    if (bits < 0) throw ParseError("negative mask " + std::to_string(bits));
    if (bits >= (std::int64_t{1} << n)) {
      throw MaskOutOfRange("mask " + std::to_string(bits) + " has elements outside X_" + std::to_string(n));
    }
    masks.emplace_back(static_cast<std::uint32_t>(bits));
  }
  return validate(static_cast<int>(n), masks);
}

Topology parse_topology(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
  return topology_from_json(j);
}

nlohmann::json to_json(const CoeffSeq& s) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : s) out.push_back(c.get_str());
  return out;
}

CoeffSeq coeffs_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("coefficients must be a nonempty array");
  std::vector<mpz_class> out;
  for (const auto& v : j) {
    if (v.is_string()) {
      mpz_class c;
      const std::string s = v.get<std::string>();
      if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || c.set_str(s, 10) != 0) {
        throw ParseError("not a nonnegative decimal: \"" + s + "\"");
      }
      out.push_back(c);
    } else if (v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
      out.emplace_back(std::to_string(v.get<std::uint64_t>()));
    } else {
      throw ParseError("coefficients must be decimal strings or nonnegative integers");
    }
  }
  return CoeffSeq(std::move(out));
}

namespace {

nlohmann::json id_params(const FamilyId& id) {
  nlohmann::json p = nlohmann::json::object();
  if (id.param) p[std::string(1, find_family(id.key).param)] = *id.param;
  if (id.partition) {
    const auto a = id.partition->alpha();
    p["alpha"] = std::vector<int>(a.begin(), a.end());
  }
  return p;
}

double millis(std::chrono::nanoseconds d) { return static_cast<double>(d.count()) / 1e6; }

}  // namespace

nlohmann::json to_json(const MatchReport& r) {
  nlohmann::json j{
      {"family", r.id.key},
      {"n", r.id.n},
      {"params", id_params(r.id)},
      {"claimed", to_json(r.claimed)},
      {"computed", to_json(r.computed)},
      {"card", r.card},
      {"claimed_card", r.claimed_card.value},
      {"claimed_card_is_lower_bound", r.claimed_card.at_least},
      {"card_match", r.card_match},
      {"poly_match", r.poly_match},
      {"diff_positions", r.diff_positions},
      {"unimodal", r.unimodal},
      {"log_concave", r.log_concave},
      {"minimal_count", r.minimal_count},
      {"minimal_match", r.minimal_match},
  };
  j["claimed_minimal"] = r.claimed_minimal ? nlohmann::json(*r.claimed_minimal) : nlohmann::json(nullptr);
  nlohmann::json variants = nlohmann::json::array();
  for (const VariantMatch& v : r.variants) {
    variants.push_back({{"source", v.source},
                        {"claimed", to_json(v.claimed)},
                        {"matches", v.matches},
                        {"diff_positions", v.diff_positions}});
  }
  j["variants"] = std::move(variants);
  nlohmann::json shapes = nlohmann::json::array();
  for (const ShapeResult& s : r.shapes) shapes.push_back({{"claim", to_string(s.claim)}, {"holds", s.holds}});
  j["shape_claims"] = std::move(shapes);
  return j;
}

nlohmann::json to_json(const TheoremReport& r, bool with_timing) {
  nlohmann::json witnesses = nlohmann::json::array();
  for (const Witness& w : r.witnesses) {
    nlohmann::json jw{{"explanation", w.explanation}};
    jw["topology"] = w.topology ? to_json(*w.topology) : nlohmann::json(nullptr);
    witnesses.push_back(std::move(jw));
  }
  nlohmann::json j{{"id", r.id},
                   {"n_range", r.n_range},
                   {"verdict", to_string(r.verdict)},
                   {"checked_count", r.checked_count},
                   {"witnesses", std::move(witnesses)},
                   {"data", r.data}};
  if (with_timing) j["elapsed_ms"] = millis(r.elapsed);
  return j;
}

nlohmann::json to_json(const EnumStats& s, bool with_timing) {
  nlohmann::json by = nlohmann::json::object();
  for (const auto& [card, count] : s.by_cardinality) by[std::to_string(card)] = count;
  nlohmann::json j{{"total", s.total}, {"by_cardinality", std::move(by)}};
  if (with_timing) j["elapsed_ms"] = millis(s.elapsed);
  return j;
}

std::string pretty(SetMask m, int n) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < n; ++i) {
    if (!m.contains(i)) continue;
    if (!first) s += ',';
    s += 'x' + std::to_string(i + 1);
    first = false;
  }
  return s + '}';
}

}  // namespace topolab
