#ifndef TOPOLAB_ENUMERATE_HPP
#define TOPOLAB_ENUMERATE_HPP

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string_view>

#include "topolab/topology.hpp"

namespace topolab {

enum class Strategy {
  /// Every family of subsets containing the empty and full set, kept when
  /// closed. Oracle only; n <= 4.
  ClosureBrute,
  /// Reflexive transitive relations built one element at a time, each mapped
  /// to its Alexandrov topology. n <= 7.
  PreorderBacktrack,
  /// Runs both and fails with StrategyMismatch unless they agree. n <= 4.
  Both,
};

inline constexpr int kMaxClosureBruteSize = 4;
inline constexpr int kMaxPreorderSize = 7;

std::string_view to_string(Strategy s);
/// Accepts "closure", "preorder", "both". Throws std::invalid_argument.
Strategy parse_strategy(std::string_view name);

struct EnumConfig {
  int n = 1;
  std::optional<std::size_t> min_card;
  bool require_t0 = false;
  /// Emit one canonical representative per homeomorphism class.
  bool up_to_iso = false;
  Strategy strategy = Strategy::PreorderBacktrack;
  unsigned thread_count = 1;
};

struct EnumStats {
  std::uint64_t total = 0;
  /// |opens| -> number of emitted topologies.
  std::map<std::size_t, std::uint64_t> by_cardinality;
  std::chrono::nanoseconds elapsed{0};
};

using TopologyVisitor = std::function<void(const Topology&)>;

/// Calls `visitor` once per topology on X_n that passes the filters.
///
/// Visitor calls are serialized on the calling thread and arrive in an order
/// that depends only on the strategy and the filters, never on thread_count:
/// workers expand disjoint subtrees of the search and their results are
/// replayed in subtree order. With up_to_iso, the emitted topology is the
/// canonical form of its class (first occurrence wins for n <= 5; for n >= 6
/// only labeled topologies that already are canonical are kept).
///
/// Throws StrategyOutOfRange when n is too large for the strategy.
EnumStats enumerate_topologies(const EnumConfig& cfg, const TopologyVisitor& visitor);

/// Number of topologies on X_n with at least `min_card` opens.
std::uint64_t count_topologies(int n, std::optional<std::size_t> min_card = std::nullopt,
                               bool require_t0 = false);

}  // namespace topolab

#endif  // TOPOLAB_ENUMERATE_HPP
