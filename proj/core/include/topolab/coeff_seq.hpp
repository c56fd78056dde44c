#ifndef TOPOLAB_COEFF_SEQ_HPP
#define TOPOLAB_COEFF_SEQ_HPP

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace topolab {

/// Nonnegative arbitrary-precision coefficients u_0, ..., u_d of a polynomial
/// sum u_j x^j. Never empty.
class CoeffSeq {
 public:
  /// The zero sequence of length 1.
  CoeffSeq();
  /// Throws InvalidCoefficients on an empty list or a negative entry.
  explicit CoeffSeq(std::vector<mpz_class> coeffs);
  CoeffSeq(std::initializer_list<long> coeffs);

  /// Length-(d+1) sequence of zeros.
  static CoeffSeq zeros(std::size_t degree);

  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  const mpz_class& operator[](std::size_t j) const { return coeffs_[j]; }
  std::span<const mpz_class> coeffs() const noexcept { return coeffs_; }
  auto begin() const noexcept { return coeffs_.begin(); }
  auto end() const noexcept { return coeffs_.end(); }

  /// Sum of all coefficients, i.e. the value at x = 1.
  mpz_class sum() const;

  /// Coefficients as decimal strings, e.g. "1 3 3 1".
  std::string to_string() const;

  friend bool operator==(const CoeffSeq& a, const CoeffSeq& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<mpz_class> coeffs_;
};

}  // namespace topolab

#endif  // TOPOLAB_COEFF_SEQ_HPP
