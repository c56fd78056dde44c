#ifndef TOPOLAB_VERIFY_HPP
#define TOPOLAB_VERIFY_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "topolab/topology.hpp"

namespace topolab {

enum class Verdict { Verified, Refuted, Discrepancy };
std::string_view to_string(Verdict v);

struct Witness {
  std::optional<Topology> topology;
  std::string explanation;
};

struct TheoremReport {
  std::string id;
  std::vector<int> n_range;
  Verdict verdict = Verdict::Verified;
  std::vector<Witness> witnesses;
  std::uint64_t checked_count = 0;
  /// Check-specific tables and counters, e.g. the per-(n, j) maxima of
  /// missing-size-max-card. Always a JSON object.
  nlohmann::json data = nlohmann::json::object();
  std::chrono::nanoseconds elapsed{0};
};

struct VerifyOptions {
  int n_max = 5;
  std::uint64_t seed = 0;
  /// Forwarded to enumeration; reports do not depend on it.
  unsigned threads = 1;
};

/// Largest n the enumeration-backed checks accept.
inline constexpr int kMaxVerifySize = 7;
/// Refutation witnesses kept per check; the rest are only counted.
inline constexpr std::size_t kMaxWitnesses = 5;

/// Registry keys in report order.
const std::vector<std::string>& theorem_keys();

/// Throws UnknownTheorem, StrategyOutOfRange (n_max too large for
/// enumeration) or GroundSizeOutOfRange (n_max < 1).
TheoremReport run(std::string_view id, const VerifyOptions& opts);

/// Every registered check, in registry order. Checks that enumerate share a
/// single pass per n.
std::vector<TheoremReport> run_all(const VerifyOptions& opts);

}  // namespace topolab

#endif  // TOPOLAB_VERIFY_HPP
