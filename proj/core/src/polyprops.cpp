#include "topolab/polyprops.hpp"

#include <algorithm>
#include <sstream>

#include "topolab/errors.hpp"

namespace topolab {

// --- CoeffSeq --------------------------------------------------------------

CoeffSeq::CoeffSeq() : coeffs_(1) {}

CoeffSeq::CoeffSeq(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw InvalidCoefficients("coefficient sequence is empty");
  for (const auto& c : coeffs_) {
    if (sgn(c) < 0) throw InvalidCoefficients("negative coefficient " + c.get_str());
  }
}

CoeffSeq::CoeffSeq(std::initializer_list<long> coeffs)
    : CoeffSeq(std::vector<mpz_class>(coeffs.begin(), coeffs.end())) {}

CoeffSeq CoeffSeq::zeros(std::size_t degree) {
  return CoeffSeq(std::vector<mpz_class>(degree + 1));
}

mpz_class CoeffSeq::sum() const {
  mpz_class total = 0;
  for (const auto& c : coeffs_) total += c;
  return total;
}

std::string CoeffSeq::to_string() const {
  std::ostringstream out;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (j) out << ' ';
    out << coeffs_[j].get_str();
  }
  return out.str();
}

// --- shape predicates ------------------------------------------------------

std::optional<ModeInterval> unimodal_modes(const CoeffSeq& s) {
  const auto c = s.coeffs();
  const auto top = std::max_element(c.begin(), c.end());
  const std::size_t k0 = static_cast<std::size_t>(top - c.begin());
  std::size_t k1 = k0;
  for (std::size_t j = k0; j < c.size(); ++j) {
    if (c[j] == *top) k1 = j;
  }
  for (std::size_t j = 0; j < k0; ++j) {
    if (c[j] > c[j + 1]) return std::nullopt;
  }
  for (std::size_t j = k0; j <= k1; ++j) {
    if (c[j] != *top) return std::nullopt;
  }
  for (std::size_t j = k1; j + 1 < c.size(); ++j) {
    if (c[j] < c[j + 1]) return std::nullopt;
  }
  return ModeInterval{k0, k1};
}

bool is_unimodal(const CoeffSeq& s) { return unimodal_modes(s).has_value(); }

bool is_log_concave(const CoeffSeq& s) {
  for (std::size_t j = 1; j + 1 < s.size(); ++j) {
    if (s[j] * s[j] < s[j - 1] * s[j + 1]) return false;
  }
  return true;
}

bool has_internal_zeros(const CoeffSeq& s) {
  const auto c = s.coeffs();
  const auto first = std::find_if(c.begin(), c.end(), [](const mpz_class& v) { return sgn(v) != 0; });
  if (first == c.end()) return false;
  const auto last = std::find_if(c.rbegin(), c.rend(), [](const mpz_class& v) { return sgn(v) != 0; });
  return std::any_of(first, last.base(), [](const mpz_class& v) { return sgn(v) == 0; });
}

bool is_slc(const CoeffSeq& s) {
  for (std::size_t j = 1; j + 1 < s.size(); ++j) {
    if (s[j] * s[j] <= s[j - 1] * s[j + 1]) return false;
  }
  return true;
}

bool newton_check(const CoeffSeq& s) {
  const std::size_t n = s.degree();
  if (n < 2) throw DegreeTooSmall("Newton's inequalities need degree >= 2");
  for (std::size_t j = 1; j < n; ++j) {
    const mpz_class lhs = s[j] * s[j] * static_cast<unsigned long>(j * (n - j));
    const mpz_class rhs =
        s[j - 1] * s[j + 1] * static_cast<unsigned long>((j + 1) * (n - j + 1));
    if (lhs < rhs) return false;
  }
  return true;
}

std::string LcRatio::to_string() const {
  return infinite ? std::string("inf") : value.get_str();
}

LcRatio max_lc_ratio(const CoeffSeq& s) {
  LcRatio best;
  for (std::size_t j = 1; j + 1 < s.size(); ++j) {
    const mpz_class denom = s[j - 1] * s[j + 1];
    if (sgn(denom) == 0) continue;
    mpq_class ratio(s[j] * s[j], denom);
    ratio.canonicalize();
    if (best.infinite || ratio < best.value) {
      best.infinite = false;
      best.value = ratio;
    }
  }
  return best;
}

// --- algebra ---------------------------------------------------------------

CoeffSeq convolve(const CoeffSeq& a, const CoeffSeq& b) {
  std::vector<mpz_class> c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return CoeffSeq(std::move(c));
}

CoeffSeq reverse(const CoeffSeq& s) {
  std::vector<mpz_class> r(s.begin(), s.end());
  std::reverse(r.begin(), r.end());
  return CoeffSeq(std::move(r));
}

CoeffSeq expand_binomial_product(const PartitionType& alpha) {
  const int n = alpha.ground_size();
  if (n > kMaxGroundSize) {
    throw GroundSizeOutOfRange("partition of " + std::to_string(n) + " exceeds the cap");
  }
  std::vector<mpz_class> p(static_cast<std::size_t>(n) + 1);
  p[0] = 1;
  int degree = 0;
  for (int size : alpha.block_sizes()) {
    // multiply in place by (1 + x^size), high degrees first
    for (int d = degree; d >= 0; --d) {
      p[static_cast<std::size_t>(d + size)] += p[static_cast<std::size_t>(d)];
    }
    degree += size;
  }
  return CoeffSeq(std::move(p));
}

mpz_class partition_coefficient(const PartitionType& alpha, int m) {
  const int n = alpha.ground_size();
  if (m < 0 || m > n) {
    throw IndexOutOfRange("coefficient index " + std::to_string(m) + " outside 0.." +
                          std::to_string(n));
  }
  const auto a = alpha.alpha();
  mpz_class total = 0;
  // Choose j_i for block sizes l, l-1, ..., 1; `rest` is what remains of m.
  auto rec = [&](auto&& self, int size, int rest, const mpz_class& product) -> void {
    if (size == 0) {
      if (rest == 0) total += product;
      return;
    }
    const int available = a[static_cast<std::size_t>(size - 1)];
    for (int j = 0; j <= available && j * size <= rest; ++j) {
      mpz_class binom;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(available),
                   static_cast<unsigned long>(j));
      self(self, size - 1, rest - j * size, product * binom);
    }
  };
  rec(rec, static_cast<int>(a.size()), m, mpz_class(1));
  return total;
}

}  // namespace topolab
