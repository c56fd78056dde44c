// Exact real-root counting: square-free reduction and Sturm chains over Q.

#include <algorithm>
#include <vector>

#include "topolab/errors.hpp"
#include "topolab/polyprops.hpp"

namespace topolab {

namespace {

// Coefficients low to high; the zero polynomial is the empty vector.
using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

QPoly derivative(const QPoly& p) {
  QPoly d;
  for (std::size_t j = 1; j < p.size(); ++j) d.push_back(p[j] * static_cast<unsigned long>(j));
  trim(d);
  return d;
}

// a = q*b + r with deg r < deg b. b must be nonzero.
void divide(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  r = a;
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, mpq_class(0));
  const mpq_class& lead = b.back();
  while (r.size() >= b.size() && !r.empty()) {
    const std::size_t shift = r.size() - b.size();
    const mpq_class factor = r.back() / lead;
    q[shift] = factor;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= factor * b[j];
    r.pop_back();  // leading term cancels exactly
    trim(r);
  }
  trim(q);
}

QPoly remainder(const QPoly& a, const QPoly& b) {
  QPoly q, r;
  divide(a, b, q, r);
  return r;
}

QPoly gcd(QPoly a, QPoly b) {
  while (!b.empty()) {
    QPoly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const mpq_class lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

QPoly exact_quotient(const QPoly& a, const QPoly& b) {
  QPoly q, r;
  divide(a, b, q, r);
  return q;
}

int sign_at(const QPoly& p, const mpq_class& x) {
  mpq_class acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return sgn(acc);
}

std::size_t sign_variations(const std::vector<QPoly>& chain, const mpq_class& x) {
  std::size_t changes = 0;
  int previous = 0;
  for (const auto& p : chain) {
    const int s = sign_at(p, x);
    if (s == 0) continue;
    if (previous != 0 && s != previous) ++changes;
    previous = s;
  }
  return changes;
}

// Distinct real roots of a square-free polynomial of degree >= 1.
std::size_t sturm_count(const QPoly& p) {
  std::vector<QPoly> chain{p, derivative(p)};
  while (true) {
    QPoly r = remainder(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  // Every root satisfies |x| < 1 + max_{j<d} |a_j| / |a_d|.
  mpq_class largest = 0;
  for (std::size_t j = 0; j + 1 < p.size(); ++j) largest = std::max(largest, mpq_class(abs(p[j])));
  const mpq_class bound = 1 + largest / abs(p.back());
  return sign_variations(chain, -bound) - sign_variations(chain, bound);
}

struct Reduced {
  QPoly square_free;     // degree >= 0
  bool root_at_zero = false;
};

Reduced reduce(std::span<const mpz_class> coeffs) {
  QPoly p(coeffs.begin(), coeffs.end());
  trim(p);
  if (p.empty()) throw ZeroPolynomial("the zero polynomial has no finite root set");
  Reduced out;
  const auto first = std::find_if(p.begin(), p.end(), [](const mpq_class& c) { return sgn(c) != 0; });
  out.root_at_zero = first != p.begin();
  p.erase(p.begin(), first);
  if (p.size() <= 1) {
    out.square_free = std::move(p);
    return out;
  }
  out.square_free = exact_quotient(p, gcd(p, derivative(p)));
  return out;
}

}  // namespace

std::size_t distinct_real_root_count(std::span<const mpz_class> coeffs) {
  const Reduced r = reduce(coeffs);
  const std::size_t nonzero_roots = r.square_free.size() <= 1 ? 0 : sturm_count(r.square_free);
  return nonzero_roots + (r.root_at_zero ? 1 : 0);
}

bool is_real_rooted(std::span<const mpz_class> coeffs) {
  const Reduced r = reduce(coeffs);
  if (r.square_free.size() <= 1) return true;
  return sturm_count(r.square_free) == r.square_free.size() - 1;
}

bool is_real_rooted(const CoeffSeq& s) { return is_real_rooted(s.coeffs()); }

}  // namespace topolab
