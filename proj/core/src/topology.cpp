#include "topolab/topology.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "mask_set.hpp"
#include "topolab/errors.hpp"

namespace topolab {

namespace {

void check_ground_size(int n) {
  if (n < 1 || n > kMaxGroundSize) {
    throw GroundSizeOutOfRange("ground size " + std::to_string(n) +
                               " outside 1.." + std::to_string(kMaxGroundSize));
  }
}

void check_masks_fit(int n, std::span<const SetMask> masks) {
  for (SetMask m : masks) {
    if (!m.fits(n)) {
      throw MaskOutOfRange("mask " + std::to_string(m.bits()) +
                           " uses elements outside X_" + std::to_string(n));
    }
  }
}

const char* op_name(ClosureOp op) {
  return op == ClosureOp::Union ? "union" : "intersection";
}

}  // namespace

NotClosed::NotClosed(SetMask u, SetMask v, ClosureOp op)
    : Error("family not closed: " + std::string(op_name(op)) + " of " +
            std::to_string(u.bits()) + " and " + std::to_string(v.bits()) +
            " is missing"),
      u_(u),
      v_(v),
      op_(op) {}

// --- Topology --------------------------------------------------------------

bool Topology::contains(SetMask m) const noexcept {
  return std::binary_search(opens_.begin(), opens_.end(), m, StorageLess{});
}

std::strong_ordering operator<=>(const Topology& a, const Topology& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  return std::lexicographical_compare_three_way(
      a.opens_.begin(), a.opens_.end(), b.opens_.begin(), b.opens_.end(),
      [](SetMask x, SetMask y) { return storage_key(x) <=> storage_key(y); });
}

Topology Topology::from_closed_family(int n, std::vector<SetMask> opens) {
  std::sort(opens.begin(), opens.end(), StorageLess{});
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  return Topology(n, std::move(opens));
}

// --- PartitionType ---------------------------------------------------------

PartitionType::PartitionType(std::vector<int> alpha) : alpha_(std::move(alpha)) {
  if (alpha_.empty()) throw InvalidPartitionType("empty partition type");
  if (std::any_of(alpha_.begin(), alpha_.end(), [](int a) { return a < 0; })) {
    throw InvalidPartitionType("negative block count");
  }
  if (alpha_.back() == 0) throw InvalidPartitionType("trailing zero in partition type");
}

PartitionType PartitionType::from_block_sizes(std::span<const int> sizes) {
  if (sizes.empty()) throw InvalidPartitionType("no blocks");
  const int largest = *std::max_element(sizes.begin(), sizes.end());
  if (*std::min_element(sizes.begin(), sizes.end()) < 1) {
    throw InvalidPartitionType("block of size < 1");
  }
  std::vector<int> alpha(static_cast<std::size_t>(largest), 0);
  for (int s : sizes) ++alpha[static_cast<std::size_t>(s - 1)];
  return PartitionType(std::move(alpha));
}

int PartitionType::count(int block_size) const noexcept {
  if (block_size < 1 || block_size > static_cast<int>(alpha_.size())) return 0;
  return alpha_[static_cast<std::size_t>(block_size - 1)];
}

int PartitionType::ground_size() const noexcept {
  int n = 0;
  for (std::size_t i = 0; i < alpha_.size(); ++i) {
    n += static_cast<int>(i + 1) * alpha_[i];
  }
  return n;
}

int PartitionType::block_count() const noexcept {
  return std::accumulate(alpha_.begin(), alpha_.end(), 0);
}

std::vector<int> PartitionType::block_sizes() const {
  std::vector<int> sizes;
  for (std::size_t i = 0; i < alpha_.size(); ++i) {
    sizes.insert(sizes.end(), static_cast<std::size_t>(alpha_[i]), static_cast<int>(i + 1));
  }
  return sizes;
}

std::vector<PartitionType> partition_types(int n) {
  std::vector<PartitionType> out;
  std::vector<int> parts;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.push_back(PartitionType::from_block_sizes(parts));
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      parts.push_back(p);
      self(self, remaining - p, p);
      parts.pop_back();
    }
  };
  if (n >= 1) rec(rec, n, n);
  return out;
}

// --- construction ----------------------------------------------------------

Topology validate(int n, std::span<const SetMask> masks) {
  check_ground_size(n);
  check_masks_fit(n, masks);

  std::vector<SetMask> opens(masks.begin(), masks.end());
  std::sort(opens.begin(), opens.end(), StorageLess{});
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());

  detail::MaskSet member(n);
  for (SetMask m : opens) member.insert(m);
  if (!member.contains(SetMask{}) || !member.contains(SetMask::full(n))) {
    throw MissingEmptyOrFull("family must contain the empty set and X_" +
                             std::to_string(n));
  }
  for (std::size_t i = 0; i < opens.size(); ++i) {
    for (std::size_t j = i + 1; j < opens.size(); ++j) {
      if (!member.contains(opens[i] | opens[j])) {
        throw NotClosed(opens[i], opens[j], ClosureOp::Union);
      }
      if (!member.contains(opens[i] & opens[j])) {
        throw NotClosed(opens[i], opens[j], ClosureOp::Intersection);
      }
    }
  }
  return Topology::from_closed_family(n, std::move(opens));
}

Topology generate_from_subbasis(int n, std::span<const SetMask> masks) {
  check_ground_size(n);
  check_masks_fit(n, masks);

  detail::MaskSet member(n);
  std::vector<SetMask> family;
  std::deque<SetMask> pending;
  auto add = [&](SetMask m) {
    if (member.insert(m)) {
      family.push_back(m);
      pending.push_back(m);
    }
  };
  add(SetMask{});
  add(SetMask::full(n));
  for (SetMask m : masks) add(m);

  while (!pending.empty()) {
    const SetMask m = pending.front();
    pending.pop_front();
    // `family` grows inside the loop; members added later meet `m` when
    // they are popped themselves.
    const std::size_t known = family.size();
    for (std::size_t i = 0; i < known; ++i) {
      add(m | family[i]);
      add(m & family[i]);
    }
  }
  return Topology::from_closed_family(n, std::move(family));
}

Topology discrete_topology(int n) {
  check_ground_size(n);
  std::vector<SetMask> opens;
  opens.reserve(std::size_t{1} << n);
  for (std::uint32_t b = 0; b < (1u << n); ++b) opens.emplace_back(b);
  return Topology::from_closed_family(n, std::move(opens));
}

Topology indiscrete_topology(int n) {
  check_ground_size(n);
  return Topology::from_closed_family(n, {SetMask{}, SetMask::full(n)});
}

Topology partition_topology(int n, std::span<const SetMask> blocks) {
  check_ground_size(n);
  SetMask covered;
  for (SetMask b : blocks) {
    if (b.empty() || !b.fits(n) || !(b & covered).empty()) {
      throw BlocksNotAPartition("blocks must be nonempty, disjoint subsets of X_" +
                                std::to_string(n));
    }
    covered = covered | b;
  }
  if (covered != SetMask::full(n)) {
    throw BlocksNotAPartition("blocks do not cover X_" + std::to_string(n));
  }
  const std::size_t l = blocks.size();
  std::vector<SetMask> opens;
  opens.reserve(std::size_t{1} << l);
  for (std::uint32_t choice = 0; choice < (1u << l); ++choice) {
    SetMask u;
    for (std::size_t i = 0; i < l; ++i) {
      if ((choice >> i) & 1u) u = u | blocks[i];
    }
    opens.push_back(u);
  }
  return Topology::from_closed_family(n, std::move(opens));
}

std::vector<SetMask> partition_blocks(const PartitionType& type) {
  std::vector<SetMask> blocks;
  int next = 0;
  for (int size : type.block_sizes()) {
    blocks.emplace_back(((1u << size) - 1u) << next);
    next += size;
  }
  return blocks;
}

Topology partition_topology(const PartitionType& type) {
  const auto blocks = partition_blocks(type);
  return partition_topology(type.ground_size(), blocks);
}

Topology disjoint_union(const Topology& t1, const Topology& t2) {
  const int n1 = t1.ground_size();
  const int n = n1 + t2.ground_size();
  check_ground_size(n);
  std::vector<SetMask> opens;
  opens.reserve(t1.size() * t2.size());
  for (SetMask u : t1.opens()) {
    for (SetMask v : t2.opens()) {
      opens.push_back(u | SetMask(v.bits() << n1));
    }
  }
  return Topology::from_closed_family(n, std::move(opens));
}

Topology cotopology(const Topology& t) {
  const int n = t.ground_size();
  std::vector<SetMask> opens;
  opens.reserve(t.size());
  for (SetMask u : t.opens()) opens.push_back(u.complement(n));
  return Topology::from_closed_family(n, std::move(opens));
}

// --- queries ---------------------------------------------------------------

std::vector<std::uint32_t> open_counts(const Topology& t) {
  std::vector<std::uint32_t> u(static_cast<std::size_t>(t.ground_size()) + 1, 0);
  for (SetMask m : t.opens()) ++u[static_cast<std::size_t>(m.size())];
  return u;
}

CoeffSeq open_polynomial(const Topology& t) {
  const auto counts = open_counts(t);
  std::vector<mpz_class> u;
  u.reserve(counts.size());
  for (std::uint32_t c : counts) u.emplace_back(static_cast<unsigned long>(c));
  return CoeffSeq(std::move(u));
}

std::vector<SetMask> specialization_preorder(const Topology& t) {
  const int n = t.ground_size();
  std::vector<SetMask> up(static_cast<std::size_t>(n), SetMask::full(n));
  for (SetMask u : t.opens()) {
    for (int i = 0; i < n; ++i) {
      if (u.contains(i)) up[static_cast<std::size_t>(i)] = up[static_cast<std::size_t>(i)] & u;
    }
  }
  return up;
}

std::vector<SetMask> minimal_open_sets(const Topology& t) {
  // Every minimal open set is the smallest neighbourhood of each of its
  // points, so it suffices to keep the inclusion-minimal neighbourhoods.
  auto nbhd = specialization_preorder(t);
  std::sort(nbhd.begin(), nbhd.end());
  nbhd.erase(std::unique(nbhd.begin(), nbhd.end()), nbhd.end());
  std::vector<SetMask> minimal;
  for (SetMask a : nbhd) {
    const bool has_smaller = std::any_of(nbhd.begin(), nbhd.end(), [a](SetMask b) {
      return b != a && b.subset_of(a);
    });
    if (!has_smaller) minimal.push_back(a);
  }
  return minimal;
}

std::optional<PartitionType> is_partition_induced(const Topology& t) {
  const auto minimal = minimal_open_sets(t);
  SetMask covered;
  for (SetMask a : minimal) covered = covered | a;
  if (covered != SetMask::full(t.ground_size())) return std::nullopt;
  // Distinct minimal opens are disjoint, so they generate exactly 2^l opens,
  // all of which belong to t. Equality of counts means t is that topology.
  if (t.size() != (std::size_t{1} << minimal.size())) return std::nullopt;
  std::vector<int> sizes;
  for (SetMask a : minimal) sizes.push_back(a.size());
  return PartitionType::from_block_sizes(sizes);
}

bool is_discrete(const Topology& t) {
  return t.size() == (std::size_t{1} << t.ground_size());
}

bool is_t0(const Topology& t) {
  auto nbhd = specialization_preorder(t);
  std::sort(nbhd.begin(), nbhd.end());
  return std::adjacent_find(nbhd.begin(), nbhd.end()) == nbhd.end();
}

Topology alexandrov_topology(int n, std::span<const SetMask> up) {
  check_ground_size(n);
  if (static_cast<int>(up.size()) != n) {
    throw NotAPreorder("expected " + std::to_string(n) + " up-sets");
  }
  check_masks_fit(n, up);
  for (int i = 0; i < n; ++i) {
    const SetMask row = up[static_cast<std::size_t>(i)];
    if (!row.contains(i)) throw NotAPreorder("relation is not reflexive");
    for (int j = 0; j < n; ++j) {
      if (row.contains(j) && !up[static_cast<std::size_t>(j)].subset_of(row)) {
        throw NotAPreorder("relation is not transitive");
      }
    }
  }
  detail::MaskSet member(n);
  std::vector<SetMask> opens{SetMask{}};
  member.insert(SetMask{});
  for (SetMask row : up) {
    const std::size_t known = opens.size();
    for (std::size_t k = 0; k < known; ++k) {
      const SetMask u = opens[k] | row;
      if (member.insert(u)) opens.push_back(u);
    }
  }
  return Topology::from_closed_family(n, std::move(opens));
}

}  // namespace topolab
