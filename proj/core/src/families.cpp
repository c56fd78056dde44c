#include "topolab/families.hpp"

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <sstream>

#include "topolab/errors.hpp"
#include "topolab/polyprops.hpp"

namespace topolab {

namespace {

// --- element naming ----------------------------------------------------------
//
// Constructions adjoin sets to the discrete topology on X_k = {x_1..x_k}.
// The non-open points a, b, c, d sit directly above X_k. When a recipe names a
// bare `x` alongside x_1..x_j, x is the first point and x_i the (i+1)-th.

class Labels {
 public:
  Labels(int k, bool bare_x) : k_(k), bare_x_(bare_x) {}

  SetMask operator()(std::initializer_list<std::string_view> names) const {
    SetMask m;
    for (std::string_view name : names) m = m | SetMask::singleton(index(name));
    return m;
  }

  // x_from .. x_to, empty when to < from.
  SetMask xs(int from, int to) const {
    SetMask m;
    for (int i = from; i <= to; ++i) m = m | SetMask::singleton(x(i));
    return m;
  }

 private:
  int x(int i) const { return bare_x_ ? i : i - 1; }

  int index(std::string_view name) const {
    if (name == "x") return 0;
    if (name.size() == 1 && name[0] >= 'a' && name[0] <= 'd') return k_ + (name[0] - 'a');
    return x(std::stoi(std::string(name.substr(1))));
  }

  int k_;
  bool bare_x_;
};

Topology adjoin(int n, int k, std::initializer_list<SetMask> sets) {
  std::vector<SetMask> basis;
  for (int i = 0; i < k; ++i) basis.push_back(SetMask::singleton(i));
  basis.insert(basis.end(), sets);
  basis.push_back(SetMask::full(n));
  return generate_from_subbasis(n, basis);
}

Topology adjoin(int n, int k, const std::vector<SetMask>& sets) {
  std::vector<SetMask> basis;
  for (int i = 0; i < k; ++i) basis.push_back(SetMask::singleton(i));
  basis.insert(basis.end(), sets.begin(), sets.end());
  basis.push_back(SetMask::full(n));
  return generate_from_subbasis(n, basis);
}

// --- closed forms -------------------------------------------------------------

// coef * x^shift * base(x) * (1+x)^exp
struct Term {
  long coef;
  int shift;
  int exp;
  std::vector<long> base{1};
};

CoeffSeq expand(int n, std::initializer_list<Term> terms) {
  std::vector<mpz_class> out(static_cast<std::size_t>(n) + 1);
  for (const Term& t : terms) {
    if (t.exp < 0) throw ParamOutOfRange("closed form undefined for n = " + std::to_string(n));
    std::vector<mpz_class> binom(static_cast<std::size_t>(t.exp) + 1);
    for (int i = 0; i <= t.exp; ++i) {
      mpz_bin_uiui(binom[static_cast<std::size_t>(i)].get_mpz_t(), static_cast<unsigned long>(t.exp),
                   static_cast<unsigned long>(i));
    }
    for (std::size_t b = 0; b < t.base.size(); ++b) {
      for (std::size_t i = 0; i < binom.size(); ++i) {
        const std::size_t at = static_cast<std::size_t>(t.shift) + b + i;
        if (at >= out.size()) out.resize(at + 1);
        out[at] += t.coef * t.base[b] * binom[i];
      }
    }
  }
  return CoeffSeq(std::move(out));
}

// c * 2^e, rounded up when e < 0 (exact whenever the value is integral).
std::uint64_t times_pow2(std::uint64_t c, int e) {
  if (e >= 0) return c << e;
  return (c + (std::uint64_t{1} << -e) - 1) >> -e;
}

CardClaim exactly(std::uint64_t v) { return CardClaim{false, v}; }
CardClaim at_least(std::uint64_t v) { return CardClaim{true, v}; }

// --- recipes ------------------------------------------------------------------

struct Recipe {
  FamilySpec spec;
  std::function<Topology(int n, int p)> build;
  std::function<std::vector<ClaimedPoly>(int n, int p)> claimed;
  std::function<CardClaim(int n, int p)> card;
  std::function<std::optional<std::size_t>(int n, int p)> minimal;
  std::vector<ShapeClaim> shapes;
};

std::vector<ClaimedPoly> statement(CoeffSeq p) {
  return {ClaimedPoly{"statement", std::move(p)}};
}

FamilySpec plain(std::string key, int min_n, std::string summary) {
  FamilySpec s;
  s.key = std::move(key);
  s.min_n = min_n;
  s.summary = std::move(summary);
  return s;
}

FamilySpec with_param(std::string key, int min_n, char param, int lo, int hi_offset,
                      std::string summary) {
  FamilySpec s = plain(std::move(key), min_n, std::move(summary));
  s.param = param;
  s.param_lo = lo;
  s.param_hi_offset = hi_offset;
  return s;
}

std::function<std::optional<std::size_t>(int, int)> minimal_is(int offset) {
  return [offset](int n, int) { return std::optional<std::size_t>(static_cast<std::size_t>(n - offset)); };
}

// The (n-3) and (n-4) groups give exponents as n minus a constant, so their
// terms are written (coef, shift, drop) for coef x^shift (1+x)^(n-drop).
struct ShortTerm {
  long coef;
  int shift;
  int drop;
  std::vector<long> base{1};
};

CoeffSeq expand_short(int n, const std::vector<ShortTerm>& terms) {
  std::vector<mpz_class> acc(static_cast<std::size_t>(n) + 1);
  for (const ShortTerm& t : terms) {
    const CoeffSeq part = expand(n, {Term{t.coef, t.shift, n - t.drop, t.base}});
    if (part.size() > acc.size()) acc.resize(part.size());
    for (std::size_t i = 0; i < part.size(); ++i) acc[i] += part[i];
  }
  return CoeffSeq(std::move(acc));
}

Recipe group_entry(std::string key, int min_n, int k_drop, std::vector<std::vector<std::string_view>> sets,
                   std::vector<ShortTerm> terms, std::uint64_t card_coef, int card_drop,
                   std::string summary) {
  Recipe r;
  r.spec = plain(std::move(key), min_n, std::move(summary));
  r.build = [k_drop, sets](int n, int) {
    const Labels L(n - k_drop, false);
    std::vector<SetMask> masks;
    for (const auto& names : sets) {
      SetMask m;
      for (std::string_view name : names) m = m | L({name});
      masks.push_back(m);
    }
    return adjoin(n, n - k_drop, masks);
  };
  r.claimed = [terms](int n, int) { return statement(expand_short(n, terms)); };
  r.card = [card_coef, card_drop](int n, int) { return exactly(times_pow2(card_coef, n - card_drop)); };
  r.minimal = minimal_is(k_drop);
  return r;
}

std::vector<Recipe> make_recipes() {
  std::vector<Recipe> out;
  const std::vector<ShapeClaim> tau1_shapes{ShapeClaim::Unimodal, ShapeClaim::NotLogConcave};

  // Cotopologies with a common point in every nonempty open. The proof lists
  // the polynomial of the original topology; its reversal is kept as a second
  // transcription.
  {
    Recipe r;
    r.spec = plain("tau1-P1", 3, "cotopology of P(X_{n-1}) + {X_n}");
    r.build = [](int n, int) { return cotopology(adjoin(n, n - 1, std::vector<SetMask>{})); };
    r.claimed = [](int n, int) {
      auto v = statement(expand(n, {{1, 1, n - 1}, {1, 0, 0}}));
      v.push_back({"proof", reverse(expand(n, {{1, 0, n - 1}, {1, n, 0}}))});
      return v;
    };
    r.card = [](int n, int) { return at_least(times_pow2(5, n - 4)); };
    r.minimal = [](int, int) { return std::optional<std::size_t>(1); };
    r.shapes = tau1_shapes;
    out.push_back(std::move(r));
  }
  {
    Recipe r;
    r.spec = plain("tau1-P2", 3, "cotopology of P(X_{n-2}) + {a,x}");
    r.build = [](int n, int) {
      const Labels L(n - 2, true);
      return cotopology(adjoin(n, n - 2, {L({"a", "x"})}));
    };
    r.claimed = [](int n, int) {
      auto v = statement(expand(n, {{1, 2, n - 2}, {1, 1, n - 3}, {1, 0, 0}}));
      v.push_back({"proof", reverse(expand(n, {{1, 2, n - 3}, {1, 0, n - 2}, {1, n, 0}}))});
      return v;
    };
    r.card = [](int n, int) { return at_least(times_pow2(5, n - 4)); };
    r.minimal = [](int, int) { return std::optional<std::size_t>(1); };
    r.shapes = tau1_shapes;
    out.push_back(std::move(r));
  }
  {
    Recipe r;
    r.spec = plain("tau1-P3", 4, "cotopology of P(X_{n-3}) + {a,x}, {b,x}");
    r.build = [](int n, int) {
      const Labels L(n - 3, true);
      return cotopology(adjoin(n, n - 3, {L({"a", "x"}), L({"b", "x"})}));
    };
    r.claimed = [](int n, int) {
      auto v = statement(expand(n, {{1, 3, n - 3}, {2, 2, n - 4}, {1, 1, n - 4}, {1, 0, 0}}));
      v.push_back({"proof", reverse(expand(n, {{1, 3, n - 3}, {2, 2, n - 4}, {1, 3, n - 4}, {1, n, 0}}))});
      return v;
    };
    r.card = [](int n, int) { return at_least(times_pow2(5, n - 4)); };
    r.minimal = [](int, int) { return std::optional<std::size_t>(1); };
    r.shapes = tau1_shapes;
    out.push_back(std::move(r));
  }

  // (n-1) minimal opens.
  {
    Recipe r;
    r.spec = plain("nm1-partition", 2, "partition into n-2 singletons and one pair");
    r.build = [](int n, int) {
      std::vector<SetMask> blocks;
      for (int i = 0; i < n - 2; ++i) blocks.push_back(SetMask::singleton(i));
      blocks.push_back(SetMask::singleton(n - 2) | SetMask::singleton(n - 1));
      return partition_topology(n, blocks);
    };
    r.claimed = [](int n, int) { return statement(expand(n, {{1, 0, n - 2, {1, 0, 1}}})); };
    r.card = [](int n, int) { return exactly(times_pow2(1, n - 1)); };
    r.minimal = minimal_is(1);
    r.shapes = {ShapeClaim::LogConcave};
    out.push_back(std::move(r));
  }
  {
    Recipe r;
    r.spec = plain("nm1-du-chain", 3, "P(X_{n-3}) disjoint union the chain {0, ab, abc}");
    r.build = [](int n, int) {
      const SetMask ab = SetMask::singleton(0) | SetMask::singleton(1);
      return disjoint_union(discrete_topology(n - 3), generate_from_subbasis(3, std::vector<SetMask>{ab}));
    };
    r.claimed = [](int n, int) {
      auto v = statement(expand(n, {{1, 0, n - 3, {1, 0, 1, 1}}}));
      if (n >= 6) v.push_back({"proof", expand(n, {{1, 0, n - 6, {1, 3, 4, 5, 6, 4, 1}}})});
      return v;
    };
    r.card = [](int n, int) { return exactly(times_pow2(6, n - 4)); };
    r.minimal = minimal_is(1);
    r.shapes = {ShapeClaim::LogConcave};
    out.push_back(std::move(r));
  }
  {
    Recipe r;
    r.spec = with_param("nm1-singletons", 2, 'l', 1, 1, "P(X_{n-1}) + {x_1..x_l, a}");
    r.build = [](int n, int l) {
      const Labels L(n - 1, false);
      return adjoin(n, n - 1, {L.xs(1, l) | L({"a"})});
    };
    r.claimed = [](int n, int l) { return statement(expand(n, {{1, 0, n - 1}, {1, l + 1, n - l - 1}})); };
    r.card = [](int n, int l) { return exactly(times_pow2(1, n - 1) + times_pow2(1, n - l - 1)); };
    r.minimal = minimal_is(1);
    r.shapes = {ShapeClaim::Unimodal};
    out.push_back(std::move(r));
  }

  // (n-2) minimal opens, all singletons.
  {
    Recipe r;
    r.spec = with_param("nm2-a", 3, 'j', 0, 3, "P(X_{n-2}) + {a,x}, {a,b,x,x_1..x_j}");
    r.build = [](int n, int j) {
      const Labels L(n - 2, true);
      return adjoin(n, n - 2, {L({"a", "x"}), L({"a", "b", "x"}) | L.xs(1, j)});
    };
    r.claimed = [](int n, int j) {
      return statement(expand(n, {{1, 0, n - 2}, {1, 2, n - 3}, {1, j + 3, n - 3 - j}}));
    };
    r.card = [](int n, int j) { return exactly(times_pow2(6, n - 4) + times_pow2(1, n - 3 - j)); };
    r.minimal = minimal_is(2);
    out.push_back(std::move(r));
  }
  {
    Recipe r;
    r.spec = plain("nm2-b", 4, "P(X_{n-2}) + {a,x_1,x_2}, {a,b,x_1,x_2}");
    r.build = [](int n, int) {
      const Labels L(n - 2, false);
      return adjoin(n, n - 2, {L({"a", "x1", "x2"}), L({"a", "b", "x1", "x2"})});
    };
    r.claimed = [](int n, int) { return statement(expand(n, {{1, 0, n - 2}, {1, 3, n - 4}, {1, 4, n - 4}})); };
    r.card = [](int n, int) { return at_least(times_pow2(6, n - 4)); };
    r.minimal = minimal_is(2);
    out.push_back(std::move(r));
  }
  {
    Recipe r;
    r.spec = plain("nm2-c", 4, "P(X_{n-2}) + {a,x_1}, {b,x_1}");
    r.build = [](int n, int) {
      const Labels L(n - 2, false);
      return adjoin(n, n - 2, {L({"a", "x1"}), L({"b", "x1"})});
    };
    r.claimed = [](int n, int) { return statement(expand(n, {{1, 0, n - 2}, {2, 2, n - 3}, {1, 3, n - 3}})); };
    r.card = [](int n, int) { return exactly(times_pow2(10, n - 4)); };
    r.minimal = minimal_is(2);
    out.push_back(std::move(r));
  }
  {
    Recipe r;
    r.spec = with_param("nm2-d", 4, 'j', 1, 3, "P(X_{n-2}) + {a,x}, {b,x,x_1..x_j}");
    r.build = [](int n, int j) {
      const Labels L(n - 2, true);
      return adjoin(n, n - 2, {L({"a", "x"}), L({"b", "x"}) | L.xs(1, j)});
    };
    r.claimed = [](int n, int j) {
      return statement(expand(n, {{1, 0, n - 2}, {1, 2, n - 3}, {1, j + 2, n - 3 - j}, {1, j + 3, n - 3 - j}}));
    };
    r.card = [](int n, int j) { return exactly(times_pow2(6, n - 4) + times_pow2(1, n - 2 - j)); };
    r.minimal = minimal_is(2);
    out.push_back(std::move(r));
  }
  {
    Recipe r;
    r.spec = plain("nm2-e", 4, "P(X_{n-2}) + {a,x_1}, {b,x_2}");
    r.build = [](int n, int) {
      const Labels L(n - 2, false);
      return adjoin(n, n - 2, {L({"a", "x1"}), L({"b", "x2"})});
    };
    r.claimed = [](int n, int) { return statement(expand(n, {{1, 0, n - 2}, {2, 2, n - 3}, {1, 4, n - 4}})); };
    r.card = [](int n, int) { return exactly(times_pow2(9, n - 4)); };
    r.minimal = minimal_is(2);
    out.push_back(std::move(r));
  }
  {
    Recipe r;
    r.spec = with_param("nm2-f", 5, 'j', 2, 3, "P(X_{n-2}) + {a,x}, {b,x_1..x_j}");
    r.build = [](int n, int j) {
      const Labels L(n - 2, true);
      return adjoin(n, n - 2, {L({"a", "x"}), L({"b"}) | L.xs(1, j)});
    };
    r.claimed = [](int n, int j) {
      return statement(expand(n, {{1, 0, n - 2}, {1, 2, n - 3}, {1, j + 1, n - 2 - j}, {1, j + 3, n - 3 - j}}));
    };
    r.card = [](int n, int j) { return exactly(times_pow2(6, n - 4) + times_pow2(3, n - 2 - j)); };
    r.minimal = minimal_is(2);
    out.push_back(std::move(r));
  }
  {
    Recipe r;
    r.spec = plain("nm2-g", 4, "P(X_{n-2}) + {a,x_1,x_2}, {b,x_1,x_2}");
    r.build = [](int n, int) {
      const Labels L(n - 2, false);
      return adjoin(n, n - 2, {L({"a", "x1", "x2"}), L({"b", "x1", "x2"})});
    };
    r.claimed = [](int n, int) { return statement(expand(n, {{1, 0, n - 2}, {2, 3, n - 4}, {1, 4, n - 4}})); };
    r.card = [](int n, int) { return exactly(times_pow2(7, n - 4)); };
    r.minimal = minimal_is(2);
    out.push_back(std::move(r));
  }
  {
    Recipe r;
    r.spec = plain("nm2-h", 5, "P(X_{n-2}) + {a,x_1,x_2}, {b,x_1,x_3}");
    r.build = [](int n, int) {
      const Labels L(n - 2, false);
      return adjoin(n, n - 2, {L({"a", "x1", "x2"}), L({"b", "x1", "x3"})});
    };
    r.claimed = [](int n, int) { return statement(expand(n, {{1, 0, n - 2}, {2, 3, n - 4}, {1, 5, n - 5}})); };
    r.card = [](int n, int) { return exactly(times_pow2(13, n - 5)); };
    r.minimal = minimal_is(2);
    out.push_back(std::move(r));
  }
  {
    Recipe r;
    r.spec = plain("nm2-i", 5, "P(X_{n-2}) + {a,x_1,x_2}, {b,x_1,x_2,x_3}");
    r.build = [](int n, int) {
      const Labels L(n - 2, false);
      return adjoin(n, n - 2, {L({"a", "x1", "x2"}), L({"b", "x1", "x2", "x3"})});
    };
    r.claimed = [](int n, int) {
      return statement(expand(n, {{1, 0, n - 2}, {1, 3, n - 4}, {1, 4, n - 5}, {1, 5, n - 5}}));
    };
    r.card = [](int n, int) { return exactly(times_pow2(6, n - 4)); };
    r.minimal = minimal_is(2);
    out.push_back(std::move(r));
  }
  {
    Recipe r;
    r.spec = plain("nm2-j", 6, "P(X_{n-2}) + {a,x_1,x_2}, {b,x_3,x_4}");
    r.build = [](int n, int) {
      const Labels L(n - 2, false);
      return adjoin(n, n - 2, {L({"a", "x1", "x2"}), L({"b", "x3", "x4"})});
    };
    r.claimed = [](int n, int) { return statement(expand(n, {{1, 0, n - 2}, {2, 3, n - 4}, {1, 6, n - 6}})); };
    r.card = [](int n, int) { return exactly(times_pow2(25, n - 6)); };
    r.minimal = minimal_is(2);
    out.push_back(std::move(r));
  }

  // (n-3) minimal opens.
  out.push_back(group_entry("nm3-six-1", 4, 3, {{"a", "x1"}, {"a", "b", "x1"}, {"a", "c", "x1"}},
                            {{1, 0, 3}, {1, 2, 4}, {2, 3, 4}, {1, 4, 4}}, 6, 4,
                            "P(X_{n-3}) + {a,x_1}, {a,b,x_1}, {a,c,x_1}"));
  out.back().claimed = [base = out.back().claimed](int n, int p) {
    auto v = base(n, p);
    v.push_back({"proof", expand_short(n, {{1, 0, 3}, {2, 2, 4}, {1, 3, 4}, {1, 4, 4}})});
    return v;
  };
  out.push_back(group_entry("nm3-six-2", 5, 3, {{"a", "x1"}, {"b", "x2"}, {"a", "c", "x1"}},
                            {{1, 0, 3}, {2, 2, 4}, {1, 3, 4}, {1, 4, 5}, {1, 5, 5}}, 6, 4,
                            "P(X_{n-3}) + {a,x_1}, {b,x_2}, {a,c,x_1}"));
  out.push_back(group_entry("nm3-six-3", 4, 3, {{"a", "x1"}, {"b", "x1"}, {"a", "b", "c", "x1"}},
                            {{1, 0, 3}, {2, 2, 4}, {1, 3, 4}, {1, 4, 4}}, 6, 4,
                            "P(X_{n-3}) + {a,x_1}, {b,x_1}, {a,b,c,x_1}"));
  out.push_back(group_entry("nm3-six-4", 5, 3, {{"a", "x1"}, {"b", "x1"}, {"a", "c", "x1", "x2"}},
                            {{1, 0, 3}, {2, 2, 4}, {1, 3, 4}, {1, 4, 5}, {1, 5, 5}}, 6, 4,
                            "P(X_{n-3}) + {a,x_1}, {b,x_1}, {a,c,x_1,x_2}"));
  out.push_back(group_entry("nm3-six-5", 6, 3, {{"a", "x1"}, {"b", "x2"}, {"c", "x1", "x3"}},
                            {{1, 0, 3}, {2, 2, 4}, {1, 3, 5}, {2, 4, 5}, {1, 5, 6}, {1, 6, 6}}, 6, 4,
                            "P(X_{n-3}) + {a,x_1}, {b,x_2}, {c,x_1,x_3}"));
  out.push_back(group_entry("nm3-six-6", 6, 3, {{"a", "x1"}, {"b", "x1"}, {"c", "x1", "x2", "x3"}},
                            {{1, 0, 3}, {2, 2, 4}, {1, 3, 5}, {1, 4, 5}, {2, 5, 6}, {1, 6, 6}}, 6, 4,
                            "P(X_{n-3}) + {a,x_1}, {b,x_1}, {c,x_1,x_2,x_3}"));
  out.push_back(group_entry("nm3-seven-1", 4, 3, {{"a", "x1"}, {"b", "x1"}, {"a", "c", "x1"}},
                            {{1, 0, 3}, {2, 2, 4}, {2, 3, 4}, {1, 4, 4}}, 7, 4,
                            "P(X_{n-3}) + {a,x_1}, {b,x_1}, {a,c,x_1}"));
  out.push_back(group_entry("nm3-seven-2", 5, 3, {{"a", "x1"}, {"b", "x1"}, {"c", "x1", "x2"}},
                            {{1, 0, 3}, {2, 2, 4}, {1, 3, 4}, {1, 3, 5}, {2, 4, 5}, {1, 5, 5}}, 7, 4,
                            "P(X_{n-3}) + {a,x_1}, {b,x_1}, {c,x_1,x_2}"));
  out.push_back(group_entry("nm3-rest-1", 4, 3, {{"a", "x1"}, {"b", "x1"}, {"c", "x1"}},
                            {{1, 0, 3}, {3, 2, 4}, {3, 3, 4}, {1, 4, 4}}, 9, 4,
                            "P(X_{n-3}) + {a,x_1}, {b,x_1}, {c,x_1}"));
  out.push_back(group_entry("nm3-rest-2", 5, 3, {{"a", "x1"}, {"b", "x1"}, {"c", "x2"}},
                            {{1, 0, 3}, {3, 2, 4}, {1, 3, 4}, {2, 4, 5}, {1, 5, 5}}, 15, 5,
                            "P(X_{n-3}) + {a,x_1}, {b,x_1}, {c,x_2}"));
  out.push_back(group_entry("nm3-rest-3", 6, 3, {{"a", "x1"}, {"b", "x2"}, {"c", "x3"}},
                            {{1, 0, 3}, {3, 2, 4}, {3, 4, 5}, {1, 6, 6}}, 27, 6,
                            "P(X_{n-3}) + {a,x_1}, {b,x_2}, {c,x_3}"));
  out.push_back(group_entry("nm3-rest-4", 5, 3, {{"a", "x1"}, {"b", "x2"}, {"c", "x1", "x2"}},
                            {{1, 0, 3}, {2, 2, 4}, {1, 3, 5}, {3, 4, 5}, {1, 5, 5}}, 13, 5,
                            "P(X_{n-3}) + {a,x_1}, {b,x_2}, {c,x_1,x_2}"));
  out.push_back(group_entry("nm3-rest-5", 6, 3, {{"a", "x1"}, {"b", "x1"}, {"c", "x2", "x3"}},
                            {{1, 0, 3}, {2, 2, 4}, {1, 3, 4}, {1, 3, 5}, {2, 5, 6}, {1, 6, 6}}, 25, 6,
                            "P(X_{n-3}) + {a,x_1}, {b,x_1}, {c,x_2,x_3}"));

  // (n-4) minimal opens.
  out.push_back(group_entry("nm4-1", 5, 4, {{"a", "x1"}, {"b", "x1"}, {"c", "x1"}, {"d", "x1"}},
                            {{1, 1, 1}, {1, 0, 5}}, 17, 5,
                            "P(X_{n-4}) + {a,x_1}, {b,x_1}, {c,x_1}, {d,x_1}"));
  out.push_back(group_entry("nm4-2", 6, 4, {{"a", "x1"}, {"b", "x1"}, {"c", "x1"}, {"d", "x2"}},
                            {{1, 3, 3}, {1, 1, 2}, {1, 0, 6, {1, 1, 1}}}, 27, 6,
                            "P(X_{n-4}) + {a,x_1}, {b,x_1}, {c,x_1}, {d,x_2}"));
  out.push_back(group_entry("nm4-3", 6, 4, {{"a", "x1"}, {"b", "x1"}, {"c", "x1"}, {"d", "x1", "x2"}},
                            {{1, 3, 3}, {1, 1, 2}, {1, 0, 5}}, 13, 5,
                            "P(X_{n-4}) + {a,x_1}, {b,x_1}, {c,x_1}, {d,x_1,x_2}"));
  out.push_back(group_entry("nm4-4", 6, 4, {{"a", "x1"}, {"b", "x1"}, {"c", "x2"}, {"d", "x2"}},
                            {{1, 2, 2}, {1, 2, 5}, {1, 0, 6, {1, 2, 3, 1}}}, 25, 6,
                            "P(X_{n-4}) + {a,x_1}, {b,x_1}, {c,x_2}, {d,x_2}"));
  out.push_back(group_entry("nm4-5", 6, 4, {{"a", "x1"}, {"b", "x1"}, {"c", "x1"}, {"d", "x1", "x2"}},
                            {{1, 2, 2}, {1, 2, 4}, {1, 2, 5}, {1, 0, 4}}, 13, 5,
                            "P(X_{n-4}) + {a,x_1}, {b,x_1}, {c,x_1}, {d,x_1,x_2} (second closed form)"));

  // (n-i) minimal opens: P(X_{n-i}) plus {x_1,y_t} for t < i and one set
  // through y_i, where y_1..y_i are the points above X_{n-i}.
  auto nmi = [&](std::string key, int variant, std::string summary,
                 std::function<CoeffSeq(int, int)> poly, std::function<std::uint64_t(int, int)> card) {
    Recipe r;
    r.spec = with_param(std::move(key), 7, 'i', 5, 2, std::move(summary));
    r.build = [variant](int n, int i) {
      const int k = n - i;
      auto y = [k](int t) { return SetMask::singleton(k + t - 1); };
      const SetMask x1 = SetMask::singleton(0);
      const SetMask x2 = SetMask::singleton(1);
      std::vector<SetMask> sets;
      for (int t = 1; t < i; ++t) sets.push_back(x1 | y(t));
      switch (variant) {
        case 1: sets.push_back(x1 | y(i)); break;
        case 2: sets.push_back(x2 | y(i)); break;
        case 3: sets.push_back(x1 | x2 | y(i)); break;
        default: sets.push_back(x1 | y(1) | y(i)); break;
      }
      return adjoin(n, k, sets);
    };
    r.claimed = [poly](int n, int i) { return statement(poly(n, i)); };
    r.card = [card](int n, int i) { return exactly(card(n, i)); };
    r.minimal = [](int n, int i) { return std::optional<std::size_t>(static_cast<std::size_t>(n - i)); };
    out.push_back(std::move(r));
  };
  nmi("nmi-1", 1, "P(X_{n-i}) + {x_1,y_1}..{x_1,y_i}",
      [](int n, int i) { return expand(n, {{1, 1, n - 1}, {1, 0, n - i - 1}}); },
      [](int n, int i) { return times_pow2(1, n - 1) + times_pow2(1, n - i - 1); });
  nmi("nmi-2", 2, "P(X_{n-i}) + {x_1,y_1}..{x_1,y_{i-1}}, {x_2,y_i}",
      [](int n, int i) { return expand(n, {{1, 3, n - 3}, {1, 1, n - 2}, {1, 0, n - i - 2, {1, 1, 1}}}); },
      [](int n, int i) { return times_pow2(6, n - 4) + times_pow2(3, n - i - 2); });
  nmi("nmi-3", 3, "P(X_{n-i}) + {x_1,y_1}..{x_1,y_{i-1}}, {x_1,x_2,y_i}",
      [](int n, int i) { return expand(n, {{1, 3, n - 3}, {1, 1, n - 2}, {1, 0, n - i - 1}}); },
      [](int n, int i) { return times_pow2(6, n - 4) + times_pow2(1, n - i - 1); });
  nmi("nmi-3b", 4, "P(X_{n-i}) + {x_1,y_1}..{x_1,y_{i-1}}, {x_1,y_1,y_i}",
      [](int n, int i) { return expand(n, {{1, 3, n - 3}, {1, 1, n - 2}, {1, 0, n - i - 1}}); },
      [](int n, int i) { return times_pow2(6, n - 4) + times_pow2(1, n - i - 1); });

  {
    Recipe r;
    r.spec = plain("counterexample", 4, "P(X_{n-2}) + X_{n-2}+a, X_{n-2}+b");
    r.build = [](int n, int) {
      const SetMask base = SetMask::full(n - 2);
      return adjoin(n, n - 2, {base | SetMask::singleton(n - 2), base | SetMask::singleton(n - 1)});
    };
    r.claimed = [](int n, int) { return statement(expand(n, {{1, 0, n - 2}, {2, n - 1, 0}, {1, n, 0}})); };
    r.card = [](int n, int) { return exactly(times_pow2(1, n - 2) + 3); };
    r.minimal = [](int, int) { return std::optional<std::size_t>(); };
    r.shapes = {ShapeClaim::NotUnimodal};
    out.push_back(std::move(r));
  }
  {
    Recipe r;
    r.spec = plain("partition", 1, "topology of a partition of given type");
    r.spec.takes_partition = true;
    out.push_back(std::move(r));
  }
  return out;
}

const std::vector<Recipe>& recipes() {
  static const std::vector<Recipe> table = make_recipes();
  return table;
}

const Recipe& find_recipe(std::string_view key) {
  for (const Recipe& r : recipes()) {
    if (r.spec.key == key) return r;
  }
  throw UnknownFamily("unknown family '" + std::string(key) + "'");
}

std::vector<std::size_t> diff(const CoeffSeq& a, const CoeffSeq& b) {
  std::vector<std::size_t> out;
  const std::size_t len = std::max(a.size(), b.size());
  const mpz_class zero = 0;
  for (std::size_t j = 0; j < len; ++j) {
    const mpz_class& x = j < a.size() ? a[j] : zero;
    const mpz_class& y = j < b.size() ? b[j] : zero;
    if (x != y) out.push_back(j);
  }
  return out;
}

bool shape_holds(ShapeClaim c, const CoeffSeq& p) {
  switch (c) {
    case ShapeClaim::Unimodal: return is_unimodal(p);
    case ShapeClaim::NotUnimodal: return !is_unimodal(p);
    case ShapeClaim::LogConcave: return is_log_concave(p);
    case ShapeClaim::NotLogConcave: return !is_log_concave(p);
  }
  return false;
}

}  // namespace

bool FamilySpec::defined_for(int n) const {
  if (n < min_n || n > kMaxGroundSize) return false;
  if (param != '\0') return param_lo <= param_hi(n);
  return true;
}

const std::vector<FamilySpec>& catalog() {
  static const std::vector<FamilySpec> specs = [] {
    std::vector<FamilySpec> out;
    for (const Recipe& r : recipes()) out.push_back(r.spec);
    return out;
  }();
  return specs;
}

const FamilySpec& find_family(std::string_view key) { return find_recipe(key).spec; }

std::string FamilyId::to_string() const {
  std::ostringstream out;
  out << key << "(n=" << n;
  if (param) out << ',' << find_family(key).param << '=' << *param;
  if (partition) {
    out << ",alpha=";
    const auto a = partition->alpha();
    for (std::size_t i = 0; i < a.size(); ++i) out << (i ? "," : "") << a[i];
  }
  out << ')';
  return out.str();
}

std::string_view to_string(ShapeClaim c) {
  switch (c) {
    case ShapeClaim::Unimodal: return "unimodal";
    case ShapeClaim::NotUnimodal: return "not-unimodal";
    case ShapeClaim::LogConcave: return "log-concave";
    case ShapeClaim::NotLogConcave: return "not-log-concave";
  }
  return "unknown";
}

FamilyInstance instantiate(const FamilyId& id) {
  const Recipe& r = find_recipe(id.key);
  const FamilySpec& s = r.spec;
  if (id.n < s.min_n || id.n > kMaxGroundSize) {
    throw ParamOutOfRange(s.key + " needs " + std::to_string(s.min_n) + " <= n <= " +
                          std::to_string(kMaxGroundSize) + ", got n = " + std::to_string(id.n));
  }

  if (s.takes_partition) {
    if (!id.partition) throw ParamOutOfRange("partition needs a partition type");
    if (id.param) throw ParamOutOfRange("partition takes no integer parameter");
    if (id.partition->ground_size() != id.n) {
      throw ParamOutOfRange("partition type sums to " + std::to_string(id.partition->ground_size()) +
                            ", not n = " + std::to_string(id.n));
    }
    const PartitionType& alpha = *id.partition;
    return FamilyInstance{id,
                          partition_topology(alpha),
                          statement(expand_binomial_product(alpha)),
                          exactly(std::uint64_t{1} << alpha.block_count()),
                          static_cast<std::size_t>(alpha.block_count()),
                          {}};
  }
  if (id.partition) throw ParamOutOfRange(s.key + " takes no partition type");

  int p = 0;
  if (s.param != '\0') {
    if (!id.param) throw ParamOutOfRange(s.key + " needs parameter " + std::string(1, s.param));
    p = *id.param;
    if (p < s.param_lo || p > s.param_hi(id.n)) {
      throw ParamOutOfRange(s.key + " needs " + std::to_string(s.param_lo) + " <= " +
                            std::string(1, s.param) + " <= " + std::to_string(s.param_hi(id.n)) +
                            ", got " + std::to_string(p));
    }
  } else if (id.param) {
    throw ParamOutOfRange(s.key + " takes no integer parameter");
  }

  return FamilyInstance{id, r.build(id.n, p), r.claimed(id.n, p), r.card(id.n, p),
                        r.minimal(id.n, p), r.shapes};
}

bool MatchReport::shapes_hold() const {
  return std::all_of(shapes.begin(), shapes.end(), [](const ShapeResult& s) { return s.holds; });
}

MatchReport check(const FamilyInstance& inst) {
  MatchReport rep;
  rep.id = inst.id;
  rep.card = inst.topology.size();
  rep.claimed_card = inst.claimed_card;
  rep.card_match = inst.claimed_card.holds(rep.card);
  rep.computed = open_polynomial(inst.topology);
  rep.claimed = inst.claimed_poly();
  rep.diff_positions = diff(rep.claimed, rep.computed);
  rep.poly_match = rep.diff_positions.empty();
  rep.unimodal = is_unimodal(rep.computed);
  rep.log_concave = is_log_concave(rep.computed);
  for (const ClaimedPoly& c : inst.claimed) {
    auto d = diff(c.poly, rep.computed);
    const bool matches = d.empty();
    rep.variants.push_back(VariantMatch{c.source, c.poly, matches, std::move(d)});
  }
  rep.minimal_count = minimal_open_sets(inst.topology).size();
  rep.claimed_minimal = inst.claimed_minimal;
  rep.minimal_match = !inst.claimed_minimal || *inst.claimed_minimal == rep.minimal_count;
  for (ShapeClaim c : inst.shape_claims) rep.shapes.push_back({c, shape_holds(c, rep.computed)});
  return rep;
}

std::vector<FamilyId> sweep_ids(int n_lo, int n_hi) {
  std::vector<FamilyId> out;
  for (const FamilySpec& s : catalog()) {
    for (int n = std::max(n_lo, 1); n <= n_hi; ++n) {
      if (!s.defined_for(n)) continue;
      if (s.takes_partition) {
        for (PartitionType& t : partition_types(n)) out.push_back({s.key, n, std::nullopt, std::move(t)});
      } else if (s.param != '\0') {
        for (int p = s.param_lo; p <= s.param_hi(n); ++p) out.push_back({s.key, n, p, std::nullopt});
      } else {
        out.push_back({s.key, n, std::nullopt, std::nullopt});
      }
    }
  }
  return out;
}

}  // namespace topolab
