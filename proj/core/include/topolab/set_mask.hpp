#ifndef TOPOLAB_SET_MASK_HPP
#define TOPOLAB_SET_MASK_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>

namespace topolab {

/// Largest supported ground set. Masks fit in one machine word.
inline constexpr int kMaxGroundSize = 16;

/// A subset of the ground set {x_0, ..., x_{n-1}}: bit i set iff x_i is in it.
class SetMask {
 public:
  constexpr SetMask() noexcept = default;
  constexpr explicit SetMask(std::uint32_t bits) noexcept : bits_(bits) {}

  static constexpr SetMask full(int n) noexcept {
    return SetMask(n >= 32 ? ~0u : (1u << n) - 1u);
  }
  static constexpr SetMask singleton(int i) noexcept { return SetMask(1u << i); }

  constexpr std::uint32_t bits() const noexcept { return bits_; }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr bool contains(int i) const noexcept { return (bits_ >> i) & 1u; }
  constexpr bool subset_of(SetMask other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }
  /// True iff every set bit lies below `n`.
  constexpr bool fits(int n) const noexcept { return subset_of(full(n)); }

  constexpr SetMask complement(int n) const noexcept {
    return SetMask(~bits_ & full(n).bits_);
  }

  friend constexpr SetMask operator|(SetMask a, SetMask b) noexcept {
    return SetMask(a.bits_ | b.bits_);
  }
  friend constexpr SetMask operator&(SetMask a, SetMask b) noexcept {
    return SetMask(a.bits_ & b.bits_);
  }
  friend constexpr bool operator==(SetMask, SetMask) noexcept = default;
  friend constexpr auto operator<=>(SetMask, SetMask) noexcept = default;

 private:
  std::uint32_t bits_ = 0;
};

/// Storage order for open sets: by cardinality, then numeric value.
constexpr std::uint32_t storage_key(SetMask m) noexcept {
  return (static_cast<std::uint32_t>(m.size()) << 16) | m.bits();
}

struct StorageLess {
  constexpr bool operator()(SetMask a, SetMask b) const noexcept {
    return storage_key(a) < storage_key(b);
  }
};

}  // namespace topolab

template <>
struct std::hash<topolab::SetMask> {
  std::size_t operator()(topolab::SetMask m) const noexcept {
    return std::hash<std::uint32_t>{}(m.bits());
  }
};

#endif  // TOPOLAB_SET_MASK_HPP
