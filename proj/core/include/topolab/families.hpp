#ifndef TOPOLAB_FAMILIES_HPP
#define TOPOLAB_FAMILIES_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "topolab/coeff_seq.hpp"
#include "topolab/topology.hpp"

namespace topolab {

/// A catalog entry: a named construction plus the ranges it is defined on.
/// Entries with an integer parameter accept lo <= value <= n - hi_offset.
struct FamilySpec {
  std::string key;
  int min_n = 1;
  /// 'l', 'j' or 'i'; '\0' when the entry takes no integer parameter.
  char param = '\0';
  int param_lo = 0;
  int param_hi_offset = 0;
  /// The partition entry is parameterized by a PartitionType instead.
  bool takes_partition = false;
  std::string summary;

  bool defined_for(int n) const;
  int param_hi(int n) const { return n - param_hi_offset; }
};

/// Every construction, in a fixed order.
const std::vector<FamilySpec>& catalog();
/// Throws UnknownFamily.
const FamilySpec& find_family(std::string_view key);

struct FamilyId {
  std::string key;
  int n = 0;
  std::optional<int> param;
  std::optional<PartitionType> partition;

  /// e.g. "nm2-a(n=6,j=2)", "partition(n=5,alpha=1,2)".
  std::string to_string() const;
};

enum class ShapeClaim { Unimodal, NotUnimodal, LogConcave, NotLogConcave };
std::string_view to_string(ShapeClaim c);

/// A stated cardinality: exact, or a lower bound when the source only gives
/// the range the construction lives in.
struct CardClaim {
  bool at_least = false;
  std::uint64_t value = 0;

  bool holds(std::uint64_t card) const { return at_least ? card >= value : card == value; }
};

/// One transcription of a closed form; `source` is "statement" or "proof".
struct ClaimedPoly {
  std::string source;
  CoeffSeq poly;
};

struct FamilyInstance {
  FamilyId id;
  Topology topology;
  /// The statement form first; further entries are alternative displays.
  std::vector<ClaimedPoly> claimed;
  CardClaim claimed_card;
  std::optional<std::size_t> claimed_minimal;
  std::vector<ShapeClaim> shape_claims;

  const CoeffSeq& claimed_poly() const { return claimed.front().poly; }
};

/// Throws UnknownFamily, ParamOutOfRange (n below the minimum, a missing,
/// superfluous or out-of-range parameter, or a partition of the wrong size).
FamilyInstance instantiate(const FamilyId& id);

struct VariantMatch {
  std::string source;
  CoeffSeq claimed;
  bool matches = false;
  std::vector<std::size_t> diff_positions;
};

struct ShapeResult {
  ShapeClaim claim;
  bool holds = false;
};

struct MatchReport {
  FamilyId id;
  std::uint64_t card = 0;
  CardClaim claimed_card;
  bool card_match = false;
  CoeffSeq claimed;
  CoeffSeq computed;
  bool poly_match = false;
  std::vector<std::size_t> diff_positions;
  bool unimodal = false;
  bool log_concave = false;
  /// Every transcription, the statement form included.
  std::vector<VariantMatch> variants;
  std::size_t minimal_count = 0;
  std::optional<std::size_t> claimed_minimal;
  bool minimal_match = true;
  std::vector<ShapeResult> shapes;

  bool shapes_hold() const;
};

/// Compares the instance's claims with its constructed topology. Shape
/// properties are always taken from the computed polynomial.
MatchReport check(const FamilyInstance& inst);

/// Every (entry, n, parameter) with n_lo <= n <= n_hi where defined; the
/// partition entry contributes every partition type of n.
std::vector<FamilyId> sweep_ids(int n_lo = 4, int n_hi = 9);

}  // namespace topolab

#endif  // TOPOLAB_FAMILIES_HPP
