#ifndef TOPOLAB_SRC_MASK_SET_HPP
#define TOPOLAB_SRC_MASK_SET_HPP

#include <cstdint>
#include <vector>

#include "topolab/set_mask.hpp"

namespace topolab::detail {

// Membership bitset over all 2^n subsets of X_n.
class MaskSet {
 public:
  explicit MaskSet(int n) : words_(((std::size_t{1} << n) + 63) / 64, 0) {}

  bool contains(SetMask m) const noexcept {
    return (words_[m.bits() >> 6] >> (m.bits() & 63)) & 1u;
  }
  // Returns true when `m` was not present before.
  bool insert(SetMask m) noexcept {
    auto& w = words_[m.bits() >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (m.bits() & 63);
    if (w & bit) return false;
    w |= bit;
    return true;
  }

 private:
  std::vector<std::uint64_t> words_;
};

}  // namespace topolab::detail

#endif  // TOPOLAB_SRC_MASK_SET_HPP
