#ifndef TOPOLAB_TOPOLOGY_HPP
#define TOPOLAB_TOPOLOGY_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "topolab/coeff_seq.hpp"
#include "topolab/set_mask.hpp"

namespace topolab {

/// A topology on the ground set {x_0, ..., x_{n-1}}, 1 <= n <= kMaxGroundSize.
///
/// Opens are held strictly sorted in storage order (cardinality, then value),
/// so equal topologies have identical open lists. Instances are immutable and
/// can only be obtained through functions that establish closure.
class Topology {
 public:
  int ground_size() const noexcept { return n_; }
  std::span<const SetMask> opens() const noexcept { return opens_; }
  /// Number of open sets |tau|.
  std::size_t size() const noexcept { return opens_.size(); }
  bool contains(SetMask m) const noexcept;

  friend bool operator==(const Topology&, const Topology&) = default;
  /// Ground size first, then the open lists compared lexicographically in
  /// storage order. This is the order canonical_form minimizes.
  friend std::strong_ordering operator<=>(const Topology& a, const Topology& b);

  /// Adopts `opens` without checking closure. The list is sorted and
  /// deduplicated. Callers must guarantee the family is a topology on X_n;
  /// every library constructor that produces closed families goes through here.
  static Topology from_closed_family(int n, std::vector<SetMask> opens);

 private:
  Topology(int n, std::vector<SetMask> opens) : n_(n), opens_(std::move(opens)) {}

  int n_ = 0;
  std::vector<SetMask> opens_;
};

/// Partition type (alpha_1, ..., alpha_l): alpha_i blocks of cardinality i.
class PartitionType {
 public:
  /// Throws InvalidPartitionType on negative entries, a trailing zero or an
  /// empty list.
  explicit PartitionType(std::vector<int> alpha);

  /// Type of a partition given by its block sizes (any order).
  static PartitionType from_block_sizes(std::span<const int> sizes);

  std::span<const int> alpha() const noexcept { return alpha_; }
  /// alpha_i for 1-based block size i; zero beyond the last entry.
  int count(int block_size) const noexcept;
  int ground_size() const noexcept;
  int block_count() const noexcept;
  /// Block sizes in ascending order.
  std::vector<int> block_sizes() const;

  friend bool operator==(const PartitionType&, const PartitionType&) = default;

 private:
  std::vector<int> alpha_;
};

/// All partition types of n, largest part first descending lexicographic.
std::vector<PartitionType> partition_types(int n);

// --- construction --------------------------------------------------------

/// Checks that `masks` is a topology on X_n. Throws GroundSizeOutOfRange,
/// MaskOutOfRange, MissingEmptyOrFull, or NotClosed (first failing pair in
/// storage order, union tested before intersection).
Topology validate(int n, std::span<const SetMask> masks);

/// Smallest topology containing every mask: closure under pairwise union and
/// intersection, plus the empty and full set.
Topology generate_from_subbasis(int n, std::span<const SetMask> masks);

Topology discrete_topology(int n);
Topology indiscrete_topology(int n);

/// Opens are all unions of `blocks`. Throws BlocksNotAPartition.
Topology partition_topology(int n, std::span<const SetMask> blocks);
/// Blocks laid out on consecutive elements, smallest blocks first.
std::vector<SetMask> partition_blocks(const PartitionType& type);
Topology partition_topology(const PartitionType& type);

/// t2's elements are shifted above t1's. Throws GroundSizeOutOfRange when the
/// combined size exceeds the cap.
Topology disjoint_union(const Topology& t1, const Topology& t2);

/// Complements of all opens.
Topology cotopology(const Topology& t);

// --- queries -------------------------------------------------------------

/// u_j = number of opens with j elements, j = 0..n.
CoeffSeq open_polynomial(const Topology& t);
/// Same counts in machine integers, for hot loops.
std::vector<std::uint32_t> open_counts(const Topology& t);

/// Nonempty opens A with A & U in {0, A} for every open U, sorted.
std::vector<SetMask> minimal_open_sets(const Topology& t);

/// The partition type when t is the topology of the partition formed by its
/// minimal open sets.
std::optional<PartitionType> is_partition_induced(const Topology& t);

bool is_discrete(const Topology& t);
bool is_t0(const Topology& t);

// --- specialization preorder ----------------------------------------------

/// up[i] = intersection of all opens containing x_i, the principal up-set of
/// x_i in the specialization preorder (x_i <= x_j iff x_j in up[i]).
std::vector<SetMask> specialization_preorder(const Topology& t);

/// Alexandrov topology of a preorder given by principal up-sets: the opens
/// are exactly the up-closed sets. Throws NotAPreorder unless `up` is
/// reflexive and transitive.
Topology alexandrov_topology(int n, std::span<const SetMask> up);

// --- relabeling ------------------------------------------------------------

/// Moves element i to perm[i]. Throws InvalidPermutation.
Topology relabel(const Topology& t, std::span<const int> perm);

/// Least topology (under operator<=>) among all n! relabelings. Two
/// topologies are homeomorphic iff their canonical forms coincide. Throws
/// GroundSizeOutOfRange for n > kMaxCanonicalSize.
Topology canonical_form(const Topology& t);
inline constexpr int kMaxCanonicalSize = 8;

/// Same as canonical_form(t) == t, with early exit on the first smaller
/// relabeling.
bool is_canonical(const Topology& t);

}  // namespace topolab

#endif  // TOPOLAB_TOPOLOGY_HPP
