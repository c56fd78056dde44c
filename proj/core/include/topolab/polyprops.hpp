#ifndef TOPOLAB_POLYPROPS_HPP
#define TOPOLAB_POLYPROPS_HPP

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>

#include "topolab/coeff_seq.hpp"
#include "topolab/topology.hpp"

namespace topolab {

/// Indices k0 <= k1 of the plateau of a unimodal sequence.
struct ModeInterval {
  std::size_t first = 0;
  std::size_t last = 0;
};

/// Plateau of the sequence when it weakly rises, stays level, then weakly
/// falls; nullopt otherwise.
std::optional<ModeInterval> unimodal_modes(const CoeffSeq& s);
bool is_unimodal(const CoeffSeq& s);

/// u_j^2 >= u_{j-1} u_{j+1} for every internal j. Zeros are allowed; see
/// has_internal_zeros for the separate NIZ condition.
bool is_log_concave(const CoeffSeq& s);
/// A zero strictly between two nonzero entries.
bool has_internal_zeros(const CoeffSeq& s);
/// Strict log-concavity at every internal j.
bool is_slc(const CoeffSeq& s);

/// Newton's inequalities a_j^2 j (n-j) >= (j+1)(n-j+1) a_{j-1} a_{j+1},
/// 1 <= j <= n-1, in exact integers. Throws DegreeTooSmall for n < 2.
bool newton_check(const CoeffSeq& s);

/// min over internal j with u_{j-1} u_{j+1} > 0 of u_j^2 / (u_{j-1} u_{j+1}),
/// or +infinity when no such j exists.
struct LcRatio {
  bool infinite = true;
  mpq_class value;

  std::string to_string() const;
  friend bool operator==(const LcRatio& a, const LcRatio& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
};
LcRatio max_lc_ratio(const CoeffSeq& s);

/// Every complex root of sum u_j x^j is real. Square-free reduction followed
/// by a Sturm chain in exact rationals. Throws ZeroPolynomial.
bool is_real_rooted(const CoeffSeq& s);

/// Signed integer polynomial variant (coefficients low to high).
bool is_real_rooted(std::span<const mpz_class> coeffs);
/// Number of distinct real roots of a nonzero integer polynomial.
std::size_t distinct_real_root_count(std::span<const mpz_class> coeffs);

CoeffSeq convolve(const CoeffSeq& a, const CoeffSeq& b);
CoeffSeq reverse(const CoeffSeq& s);

/// prod_i (1 + x^i)^{alpha_i}. Throws GroundSizeOutOfRange past the cap.
CoeffSeq expand_binomial_product(const PartitionType& alpha);

/// sum over (j_1..j_l), 0 <= j_i <= alpha_i, sum i j_i = m, of
/// prod_i binom(alpha_i, j_i). Throws IndexOutOfRange for m outside 0..n.
mpz_class partition_coefficient(const PartitionType& alpha, int m);

}  // namespace topolab

#endif  // TOPOLAB_POLYPROPS_HPP
