#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <string>

#include "topolab/errors.hpp"
#include "topolab/topology.hpp"

namespace topolab {

namespace {

using Perm = std::array<std::uint8_t, kMaxCanonicalSize>;

// All non-identity permutations of 0..n-1, transpositions first. Relabelings
// that beat a non-canonical topology are very often a single swap, so
// is_canonical usually exits after a few candidates.
std::vector<Perm> build_perms(int n) {
  std::vector<Perm> swaps;
  std::vector<Perm> rest;
  Perm p{};
  std::iota(p.begin(), p.begin() + n, std::uint8_t{0});
  while (std::next_permutation(p.begin(), p.begin() + n)) {
    int moved = 0;
    for (int i = 0; i < n; ++i) moved += p[static_cast<std::size_t>(i)] != i;
    (moved == 2 ? swaps : rest).push_back(p);
  }
  swaps.insert(swaps.end(), rest.begin(), rest.end());
  return swaps;
}

const std::vector<Perm>& perms_for(int n) {
  static const auto table = [] {
    std::array<std::vector<Perm>, kMaxCanonicalSize + 1> t;
    for (int k = 1; k <= kMaxCanonicalSize; ++k) t[static_cast<std::size_t>(k)] = build_perms(k);
    return t;
  }();
  return table[static_cast<std::size_t>(n)];
}

SetMask apply(const Perm& perm, SetMask m) {
  std::uint32_t bits = m.bits();
  std::uint32_t out = 0;
  while (bits != 0) {
    const int i = std::countr_zero(bits);
    bits &= bits - 1;
    out |= 1u << perm[static_cast<std::size_t>(i)];
  }
  return SetMask(out);
}

void relabeled_keys(const Topology& t, const Perm& perm, std::vector<std::uint32_t>& out) {
  out.clear();
  for (SetMask m : t.opens()) out.push_back(storage_key(apply(perm, m)));
  std::sort(out.begin(), out.end());
}

std::vector<std::uint32_t> own_keys(const Topology& t) {
  std::vector<std::uint32_t> keys;
  keys.reserve(t.size());
  for (SetMask m : t.opens()) keys.push_back(storage_key(m));
  return keys;
}

void check_canonical_size(int n) {
  if (n > kMaxCanonicalSize) {
    throw GroundSizeOutOfRange("canonical form supports n <= " +
                               std::to_string(kMaxCanonicalSize));
  }
}

}  // namespace

Topology relabel(const Topology& t, std::span<const int> perm) {
  const int n = t.ground_size();
  if (static_cast<int>(perm.size()) != n) {
    throw InvalidPermutation("permutation length " + std::to_string(perm.size()) +
                             " != ground size " + std::to_string(n));
  }
  std::uint32_t seen = 0;
  for (int v : perm) {
    if (v < 0 || v >= n || ((seen >> v) & 1u)) {
      throw InvalidPermutation("not a bijection on 0.." + std::to_string(n - 1));
    }
    seen |= 1u << v;
  }
  std::vector<SetMask> opens;
  opens.reserve(t.size());
  for (SetMask m : t.opens()) {
    std::uint32_t out = 0;
    for (int i = 0; i < n; ++i) {
      if (m.contains(i)) out |= 1u << perm[static_cast<std::size_t>(i)];
    }
    opens.emplace_back(out);
  }
  return Topology::from_closed_family(n, std::move(opens));
}

Topology canonical_form(const Topology& t) {
  const int n = t.ground_size();
  check_canonical_size(n);
  auto best = own_keys(t);
  std::vector<std::uint32_t> candidate;
  for (const Perm& perm : perms_for(n)) {
    relabeled_keys(t, perm, candidate);
    if (candidate < best) best.swap(candidate);
  }
  std::vector<SetMask> opens;
  opens.reserve(best.size());
  for (std::uint32_t key : best) opens.emplace_back(key & 0xFFFFu);
  return Topology::from_closed_family(n, std::move(opens));
}

bool is_canonical(const Topology& t) {
  const int n = t.ground_size();
  check_canonical_size(n);
  const auto keys = own_keys(t);
  std::vector<std::uint32_t> candidate;
  for (const Perm& perm : perms_for(n)) {
    relabeled_keys(t, perm, candidate);
    if (candidate < keys) return false;
  }
  return true;
}

}  // namespace topolab
