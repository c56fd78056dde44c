#include "topolab/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <random>

#include "topolab/enumerate.hpp"
#include "topolab/errors.hpp"
#include "topolab/families.hpp"
#include "topolab/polyprops.hpp"

namespace topolab {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Verified: return "verified";
    case Verdict::Refuted: return "refuted";
    case Verdict::Discrepancy: return "discrepancy";
  }
  return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

std::vector<int> range(int lo, int hi) {
  std::vector<int> out;
  for (int n = lo; n <= hi; ++n) out.push_back(n);
  return out;
}

std::string counts_text(const std::vector<std::uint32_t>& counts) {
  std::string s;
  for (std::size_t j = 0; j < counts.size(); ++j) {
    if (j) s += ' ';
    s += std::to_string(counts[j]);
  }
  return s;
}

// Shape facts of one open polynomial, computed once per distinct polynomial.
struct PolyFacts {
  bool unimodal = false;
  bool log_concave = false;
  bool newton = false;
  bool real_rooted = false;
  bool all_positive = false;
  LcRatio lc_ratio;
};

class PolyCache {
 public:
  const PolyFacts& get(const std::vector<std::uint32_t>& counts) {
    auto it = cache_.find(counts);
    if (it != cache_.end()) return it->second;
    std::vector<mpz_class> coeffs(counts.begin(), counts.end());
    const CoeffSeq poly(std::move(coeffs));
    PolyFacts f;
    f.unimodal = is_unimodal(poly);
    f.log_concave = is_log_concave(poly);
    f.newton = poly.degree() >= 2 && newton_check(poly);
    f.real_rooted = is_real_rooted(poly);
    f.all_positive = std::all_of(counts.begin(), counts.end(), [](std::uint32_t c) { return c > 0; });
    f.lc_ratio = max_lc_ratio(poly);
    return cache_.emplace(counts, std::move(f)).first->second;
  }

 private:
  std::map<std::vector<std::uint32_t>, PolyFacts> cache_;
};

struct Facts {
  const Topology& t;
  int n;
  std::vector<std::uint32_t> counts;
  std::size_t card;
  bool discrete;
  const PolyFacts& poly;
};

// Accumulates one report while topologies stream past.
class ReportBuilder {
 public:
  explicit ReportBuilder(std::string id) { report_.id = std::move(id); }

  TheoremReport& report() { return report_; }

  void refute(std::optional<Topology> t, std::string why) {
    ++violations_;
    if (report_.witnesses.size() >= kMaxWitnesses) return;
    auto& w = report_.witnesses.emplace_back();
    if (t) w.topology.emplace(std::move(*t));
    w.explanation = std::move(why);
  }

  std::uint64_t violations() const { return violations_; }

  TheoremReport finish() {
    report_.verdict = violations_ ? Verdict::Refuted : Verdict::Verified;
    report_.data["violations"] = violations_;
    return std::move(report_);
  }

 private:
  TheoremReport report_;
  std::uint64_t violations_ = 0;
};

class SweepCheck {
 public:
  SweepCheck(std::string id, int min_n) : min_n_(min_n), builder_(std::move(id)) {}
  virtual ~SweepCheck() = default;

  int min_n() const { return min_n_; }
  void begin(int n_max) { builder_.report().n_range = range(min_n_, n_max); }
  void visit(const Facts& f) {
    ++builder_.report().checked_count;
    observe(f);
  }
  virtual void end_n(int) {}
  virtual TheoremReport finish() { return builder_.finish(); }

 protected:
  virtual void observe(const Facts& f) = 0;
  ReportBuilder& out() { return builder_; }
  nlohmann::json& data() { return builder_.report().data; }

 private:
  int min_n_;
  ReportBuilder builder_;
};

class RealRootsIffDiscrete : public SweepCheck {
 public:
  RealRootsIffDiscrete() : SweepCheck("real-roots-iff-discrete", 1) {}

 protected:
  void observe(const Facts& f) override {
    if (f.poly.real_rooted) ++real_rooted_[f.n];
    if (f.poly.real_rooted == f.discrete) return;
    out().refute(f.t, f.poly.real_rooted ? "real-rooted open polynomial " + counts_text(f.counts) +
                                               " on a non-discrete topology"
                                         : "discrete topology without a real-rooted polynomial");
  }

  TheoremReport finish() override {
    for (const auto& [n, c] : real_rooted_) data()["real_rooted_per_n"][std::to_string(n)] = c;
    return SweepCheck::finish();
  }

 private:
  std::map<int, std::uint64_t> real_rooted_;
};

// Newton's inequalities hold vacuously at zero coefficients, so passes with a
// zero coefficient are separated from genuine ones. Only the latter refute.
class NewtonImpliesDiscrete : public SweepCheck {
 public:
  NewtonImpliesDiscrete() : SweepCheck("newton-implies-discrete", 2) {}

 protected:
  void observe(const Facts& f) override {
    auto& row = per_n_[f.n];
    if (f.poly.newton) ++row.newton;
    if (f.poly.log_concave) ++row.log_concave;
    if (f.poly.newton == f.discrete) return;
    if (!f.discrete && !f.poly.all_positive) {
      ++row.zero_coefficient_passes;
      if (soft_.size() < kMaxWitnesses) {
        soft_.push_back({f.t, "Newton's inequalities hold vacuously for " + counts_text(f.counts) +
                                  " (zero coefficient), topology not discrete"});
      }
      return;
    }
    out().refute(f.t, f.discrete ? "discrete topology fails Newton's inequalities"
                                 : "all-positive polynomial " + counts_text(f.counts) +
                                       " satisfies Newton's inequalities on a non-discrete topology");
  }

  TheoremReport finish() override {
    for (const auto& [n, row] : per_n_) {
      auto& j = data()["per_n"][std::to_string(n)];
      j["newton_pass"] = row.newton;
      j["zero_coefficient_passes"] = row.zero_coefficient_passes;
      j["log_concave"] = row.log_concave;
    }
    const bool soft = std::any_of(per_n_.begin(), per_n_.end(),
                                  [](const auto& kv) { return kv.second.zero_coefficient_passes > 0; });
    TheoremReport rep = SweepCheck::finish();
    if (rep.verdict == Verdict::Verified && soft) {
      rep.verdict = Verdict::Discrepancy;
      rep.witnesses = std::move(soft_);
    }
    return rep;
  }

 private:
  struct Row {
    std::uint64_t newton = 0;
    std::uint64_t zero_coefficient_passes = 0;
    std::uint64_t log_concave = 0;
  };
  std::map<int, Row> per_n_;
  std::vector<Witness> soft_;
};

// d^(n-1) <= n^2 with d = p/q, i.e. p^(n-1) <= n^2 q^(n-1).
class DmaxBound : public SweepCheck {
 public:
  DmaxBound() : SweepCheck("dmax-bound", 2) {}

 protected:
  void observe(const Facts& f) override {
    if (f.discrete || !f.poly.all_positive || f.poly.lc_ratio.infinite) return;
    auto& row = per_n_[f.n];
    ++row.applicable;
    const mpq_class& d = f.poly.lc_ratio.value;
    if (!row.largest || d > *row.largest) row.largest = d;
    mpz_class lhs, rhs;
    const auto e = static_cast<unsigned long>(f.n - 1);
    mpz_pow_ui(lhs.get_mpz_t(), d.get_num_mpz_t(), e);
    mpz_pow_ui(rhs.get_mpz_t(), d.get_den_mpz_t(), e);
    rhs *= f.n * f.n;
    if (lhs == rhs) ++row.equality;
    if (lhs > rhs) {
      out().refute(f.t, "d = " + d.get_str() + " for " + counts_text(f.counts) + " exceeds the bound d^" +
                            std::to_string(f.n - 1) + " <= " + std::to_string(f.n * f.n));
    }
  }

  TheoremReport finish() override {
    for (const auto& [n, row] : per_n_) {
      auto& j = data()["per_n"][std::to_string(n)];
      j["applicable"] = row.applicable;
      j["equality_cases"] = row.equality;
      j["largest_d"] = row.largest ? row.largest->get_str() : std::string();
    }
    return SweepCheck::finish();
  }

 private:
  struct Row {
    std::uint64_t applicable = 0;
    std::uint64_t equality = 0;
    std::optional<mpq_class> largest;
  };
  std::map<int, Row> per_n_;
};

class CotopologyPartition : public SweepCheck {
 public:
  CotopologyPartition() : SweepCheck("cotopology-partition", 1) {}

 protected:
  void observe(const Facts& f) override {
    const bool self_dual = cotopology(f.t) == f.t;
    const bool induced = is_partition_induced(f.t).has_value();
    if (self_dual) ++self_dual_;
    if (self_dual == induced) return;
    out().refute(f.t, self_dual ? "equals its cotopology but is not partition-induced"
                                : "partition-induced but differs from its cotopology");
  }

  TheoremReport finish() override {
    data()["self_dual"] = self_dual_;
    return SweepCheck::finish();
  }

 private:
  std::uint64_t self_dual_ = 0;
};

class MissingSizeMaxCard : public SweepCheck {
 public:
  MissingSizeMaxCard() : SweepCheck("missing-size-max-card", 2) {}

 protected:
  void observe(const Facts& f) override {
    auto& row = best_[f.n];
    row.resize(static_cast<std::size_t>(f.n));
    for (int j = 1; j < f.n; ++j) {
      if (f.counts[static_cast<std::size_t>(j)] != 0) continue;
      auto& cell = row[static_cast<std::size_t>(j)];
      if (!cell || f.card > cell->first) cell.emplace(f.card, f.t);
    }
  }

  TheoremReport finish() override {
    auto& table = data()["table"];
    table = nlohmann::json::array();
    for (auto& [n, row] : best_) {
      for (int j = 1; j < n; ++j) {
        const std::uint64_t bound = (std::uint64_t{1} << (j - 1)) + (std::uint64_t{1} << (n - j - 1));
        const auto& cell = row[static_cast<std::size_t>(j)];
        nlohmann::json entry{{"n", n}, {"j", j}, {"bound", bound}};
        if (cell) {
          entry["max_card"] = cell->first;
          entry["attained"] = cell->first == bound;
          if (cell->first > bound) {
            out().refute(cell->second, std::to_string(cell->first) + " opens with u_" + std::to_string(j) +
                                           " = 0 exceeds " + std::to_string(bound));
          }
        } else {
          entry["max_card"] = nullptr;
          entry["attained"] = false;
        }
        table.push_back(std::move(entry));
      }
    }
    return SweepCheck::finish();
  }

 private:
  std::map<int, std::vector<std::optional<std::pair<std::size_t, Topology>>>> best_;
};

class NonvanishingCorollary : public SweepCheck {
 public:
  NonvanishingCorollary() : SweepCheck("nonvanishing-corollary", 1) {}

 protected:
  // |opens| >= 2^(n-2) + 2, scaled by 4.
  void observe(const Facts& f) override {
    if (4 * f.card < (std::size_t{1} << f.n) + 8 || f.poly.all_positive) return;
    out().refute(f.t, std::to_string(f.card) + " opens but a zero in " + counts_text(f.counts));
  }
};

class UnimodalAbove : public SweepCheck {
 public:
  UnimodalAbove() : SweepCheck("unimodal-above-6x2n4", 4) {}

 protected:
  // |opens| >= 6 * 2^(n-4), scaled by 16.
  void observe(const Facts& f) override {
    if (16 * f.card < 6 * (std::size_t{1} << f.n)) return;
    ++applicable_;
    if (f.poly.unimodal) return;
    out().refute(f.t, std::to_string(f.card) + " opens, open polynomial " + counts_text(f.counts) +
                          " is not unimodal");
  }

  TheoremReport finish() override {
    data()["applicable"] = applicable_;
    return SweepCheck::finish();
  }

 private:
  std::uint64_t applicable_ = 0;
};

class T0Nonvanishing : public SweepCheck {
 public:
  T0Nonvanishing() : SweepCheck("t0-nonvanishing", 1) {}

 protected:
  void observe(const Facts& f) override {
    if (f.poly.all_positive || !is_t0(f.t)) return;
    out().refute(f.t, "T0 topology with a zero in " + counts_text(f.counts));
  }
};

class T0SmallUnimodal : public SweepCheck {
 public:
  T0SmallUnimodal() : SweepCheck("t0-small-unimodal", 1) {}

 protected:
  void observe(const Facts& f) override {
    const auto n = static_cast<std::size_t>(f.n);
    if (f.card != n + 1 && f.card != n + 2) return;
    if (!is_t0(f.t)) return;
    ++applicable_;
    if (f.poly.unimodal) return;
    out().refute(f.t, "T0 topology with " + std::to_string(f.card) + " opens, " + counts_text(f.counts) +
                          " is not unimodal");
  }

  TheoremReport finish() override {
    data()["applicable"] = applicable_;
    return SweepCheck::finish();
  }

 private:
  std::uint64_t applicable_ = 0;
};

class SmallTauGap : public SweepCheck {
 public:
  SmallTauGap() : SweepCheck("small-tau-gap", 1) {}

 protected:
  void observe(const Facts& f) override {
    if (f.card > static_cast<std::size_t>(f.n)) return;
    for (int j = 1; j < f.n; ++j) {
      if (f.counts[static_cast<std::size_t>(j)] == 0) return;
    }
    out().refute(f.t, std::to_string(f.card) + " opens and no internal zero in " + counts_text(f.counts));
  }
};

using SweepFactory = std::function<std::unique_ptr<SweepCheck>()>;
using DirectCheck = std::function<TheoremReport(const VerifyOptions&)>;

struct Entry {
  std::string id;
  SweepFactory sweep;
  DirectCheck direct;
};

void require_enumerable(int n_max) {
  if (n_max < 1) throw GroundSizeOutOfRange("n_max must be >= 1");
  if (n_max > kMaxVerifySize) {
    throw StrategyOutOfRange("enumeration-backed checks support n_max <= " + std::to_string(kMaxVerifySize));
  }
}

void sweep(const std::vector<SweepCheck*>& checks, const VerifyOptions& opts) {
  PolyCache cache;
  for (SweepCheck* c : checks) c->begin(opts.n_max);
  for (int n = 1; n <= opts.n_max; ++n) {
    std::vector<SweepCheck*> active;
    for (SweepCheck* c : checks) {
      if (c->min_n() <= n) active.push_back(c);
    }
    if (active.empty()) continue;
    EnumConfig cfg;
    cfg.n = n;
    cfg.thread_count = opts.threads;
    const auto full = static_cast<std::size_t>(1) << n;
    enumerate_topologies(cfg, [&](const Topology& t) {
      std::vector<std::uint32_t> counts = open_counts(t);
      const PolyFacts& pf = cache.get(counts);
      const Facts f{t, n, std::move(counts), t.size(), t.size() == full, pf};
      for (SweepCheck* c : active) c->visit(f);
    });
    for (SweepCheck* c : active) c->end_n(n);
  }
}

int capped(int preferred, int n_max) {
  const int hi = std::max(preferred, n_max);
  if (hi > kMaxGroundSize) throw GroundSizeOutOfRange("ground size above " + std::to_string(kMaxGroundSize));
  return hi;
}

TheoremReport partition_product(const VerifyOptions& opts) {
  ReportBuilder b("partition-product");
  const int hi = capped(9, opts.n_max);
  b.report().n_range = range(1, hi);
  for (int n = 1; n <= hi; ++n) {
    for (const PartitionType& type : partition_types(n)) {
      ++b.report().checked_count;
      const Topology t = partition_topology(type);
      const CoeffSeq computed = open_polynomial(t);
      const CoeffSeq expanded = expand_binomial_product(type);
      if (computed != expanded) {
        b.refute(t, "open polynomial " + computed.to_string() + " differs from product expansion " +
                        expanded.to_string());
      }
    }
  }
  return b.finish();
}

TheoremReport coeff_composition(const VerifyOptions& opts) {
  ReportBuilder b("coeff-composition");
  const int hi = capped(9, opts.n_max);
  b.report().n_range = range(1, hi);
  std::uint64_t coefficients = 0;
  for (int n = 1; n <= hi; ++n) {
    for (const PartitionType& type : partition_types(n)) {
      ++b.report().checked_count;
      const CoeffSeq expanded = expand_binomial_product(type);
      for (int m = 0; m <= n; ++m) {
        ++coefficients;
        const mpz_class c = partition_coefficient(type, m);
        if (c != expanded[static_cast<std::size_t>(m)]) {
          b.refute(partition_topology(type), "coefficient " + std::to_string(m) + ": composition sum " +
                                                 c.get_str() + " vs expansion " +
                                                 expanded[static_cast<std::size_t>(m)].get_str());
        }
      }
    }
  }
  b.report().data["coefficients"] = coefficients;
  return b.finish();
}

TheoremReport counterexample_nonunimodal(const VerifyOptions& opts) {
  ReportBuilder b("counterexample-nonunimodal");
  const int hi = capped(10, opts.n_max);
  b.report().n_range = range(5, hi);
  for (int n = 5; n <= hi; ++n) {
    ++b.report().checked_count;
    const FamilyInstance inst = instantiate(FamilyId{"counterexample", n, std::nullopt, std::nullopt});
    const CoeffSeq poly = open_polynomial(inst.topology);
    const std::uint64_t expected = (std::uint64_t{1} << (n - 2)) + 3;
    b.report().data["polynomials"][std::to_string(n)] = poly.to_string();
    if (inst.topology.size() != expected) {
      b.refute(inst.topology, std::to_string(inst.topology.size()) + " opens, expected " + std::to_string(expected));
    }
    if (is_unimodal(poly)) b.refute(inst.topology, "open polynomial " + poly.to_string() + " is unimodal");
  }
  return b.finish();
}

// Shape claims that fail refute; cardinality, polynomial and minimal-open
// mismatches are transcription discrepancies.
TheoremReport families_match(const VerifyOptions&) {
  TheoremReport rep;
  rep.id = "families-match";
  rep.n_range = range(4, 9);
  nlohmann::json card_mismatch = nlohmann::json::array();
  nlohmann::json poly_mismatch = nlohmann::json::array();
  nlohmann::json minimal_mismatch = nlohmann::json::array();
  nlohmann::json shape_failures = nlohmann::json::array();
  std::map<std::string, std::map<std::string, std::uint64_t>> variant_hits;
  std::vector<Witness> refutations;
  std::vector<Witness> discrepancies;

  for (const FamilyId& id : sweep_ids(4, 9)) {
    ++rep.checked_count;
    const FamilyInstance inst = instantiate(id);
    const MatchReport m = check(inst);
    const std::string name = id.to_string();
    for (const VariantMatch& v : m.variants) {
      auto& hits = variant_hits[id.key];
      hits.try_emplace(v.source, 0);
      if (v.matches) ++hits[v.source];
    }
    for (const ShapeResult& s : m.shapes) {
      if (s.holds) continue;
      shape_failures.push_back(name + ": " + std::string(to_string(s.claim)));
      refutations.push_back({inst.topology, name + " claimed " + std::string(to_string(s.claim)) +
                                                ", computed polynomial " + m.computed.to_string()});
    }
    if (!m.card_match) {
      card_mismatch.push_back(name);
      discrepancies.push_back({inst.topology, name + ": " + std::to_string(m.card) + " opens, claimed " +
                                                  (m.claimed_card.at_least ? ">= " : "") +
                                                  std::to_string(m.claimed_card.value)});
    }
    if (!m.poly_match) {
      poly_mismatch.push_back(name);
      discrepancies.push_back({inst.topology, name + ": claimed " + m.claimed.to_string() + ", computed " +
                                                  m.computed.to_string()});
    }
    if (!m.minimal_match) {
      minimal_mismatch.push_back(name);
      discrepancies.push_back({inst.topology, name + ": " + std::to_string(m.minimal_count) +
                                                  " minimal opens, claimed " +
                                                  std::to_string(*m.claimed_minimal)});
    }
  }

  rep.data["card_mismatches"] = card_mismatch;
  rep.data["poly_mismatches"] = poly_mismatch;
  rep.data["minimal_mismatches"] = minimal_mismatch;
  rep.data["shape_failures"] = shape_failures;
  for (const auto& [key, hits] : variant_hits) {
    if (hits.size() > 1) rep.data["variant_matches"][key] = hits;
  }
  if (!refutations.empty()) {
    rep.verdict = Verdict::Refuted;
  } else if (!discrepancies.empty()) {
    rep.verdict = Verdict::Discrepancy;
  }
  rep.witnesses = std::move(refutations);
  rep.witnesses.insert(rep.witnesses.end(), discrepancies.begin(), discrepancies.end());
  return rep;
}

// Random positive log-concave sequence: each next term is at most
// a_j^2 / a_{j-1}, which keeps a_j^2 >= a_{j-1} a_{j+1}.
CoeffSeq random_log_concave(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(1, 8);
  std::uniform_int_distribution<long> first(1, 30);
  const int size = len(rng);
  std::vector<mpz_class> a{mpz_class(first(rng))};
  if (size > 1) a.emplace_back(first(rng));
  while (static_cast<int>(a.size()) < size) {
    const mpz_class limit = a.back() * a.back() / a[a.size() - 2];
    if (limit < 1) break;
    const long hi = limit > 1000000 ? 1000000L : limit.get_si();
    a.emplace_back(std::uniform_int_distribution<long>(1, hi)(rng));
  }
  return CoeffSeq(std::move(a));
}

// Random nonnegative unimodal sequence: a rising run followed by a falling one.
CoeffSeq random_unimodal(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(1, 8);
  std::uniform_int_distribution<long> step(0, 20);
  const int size = len(rng);
  const int peak = std::uniform_int_distribution<int>(0, size - 1)(rng);
  std::vector<long> v(static_cast<std::size_t>(size));
  v[static_cast<std::size_t>(peak)] = 1 + step(rng) * 3;
  for (int j = peak - 1; j >= 0; --j) {
    v[static_cast<std::size_t>(j)] = std::max(0L, v[static_cast<std::size_t>(j + 1)] - step(rng));
  }
  for (int j = peak + 1; j < size; ++j) {
    v[static_cast<std::size_t>(j)] = std::max(0L, v[static_cast<std::size_t>(j - 1)] - step(rng));
  }
  return CoeffSeq(std::vector<mpz_class>(v.begin(), v.end()));
}

TheoremReport convolution_laws(const VerifyOptions& opts) {
  constexpr int kTrials = 10000;
  ReportBuilder b("convolution-laws");
  std::mt19937_64 rng(opts.seed);
  std::uint64_t lc_failures = 0;
  std::uint64_t unimodal_failures = 0;
  for (int trial = 0; trial < kTrials; ++trial) {
    const CoeffSeq a = random_log_concave(rng);
    const CoeffSeq c = random_log_concave(rng);
    const CoeffSeq ac = convolve(a, c);
    ++b.report().checked_count;
    if (!is_log_concave(ac) || has_internal_zeros(ac)) {
      ++lc_failures;
      b.refute(std::nullopt, "log-concave (" + a.to_string() + ") * (" + c.to_string() + ") = (" +
                                         ac.to_string() + ") is not log-concave");
    }
    const CoeffSeq u = random_unimodal(rng);
    const CoeffSeq au = convolve(a, u);
    ++b.report().checked_count;
    if (!is_unimodal(au)) {
      ++unimodal_failures;
      b.refute(std::nullopt, "log-concave (" + a.to_string() + ") * unimodal (" + u.to_string() +
                                         ") = (" + au.to_string() + ") is not unimodal");
    }
  }
  b.report().data["trials"] = kTrials;
  b.report().data["seed"] = opts.seed;
  b.report().data["log_concave_failures"] = lc_failures;
  b.report().data["unimodal_failures"] = unimodal_failures;
  return b.finish();
}

template <class T>
SweepFactory make() {
  return [] { return std::make_unique<T>(); };
}

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries{
      {"real-roots-iff-discrete", make<RealRootsIffDiscrete>(), nullptr},
      {"newton-implies-discrete", make<NewtonImpliesDiscrete>(), nullptr},
      {"dmax-bound", make<DmaxBound>(), nullptr},
      {"cotopology-partition", make<CotopologyPartition>(), nullptr},
      {"partition-product", nullptr, partition_product},
      {"coeff-composition", nullptr, coeff_composition},
      {"missing-size-max-card", make<MissingSizeMaxCard>(), nullptr},
      {"nonvanishing-corollary", make<NonvanishingCorollary>(), nullptr},
      {"counterexample-nonunimodal", nullptr, counterexample_nonunimodal},
      {"unimodal-above-6x2n4", make<UnimodalAbove>(), nullptr},
      {"t0-nonvanishing", make<T0Nonvanishing>(), nullptr},
      {"t0-small-unimodal", make<T0SmallUnimodal>(), nullptr},
      {"small-tau-gap", make<SmallTauGap>(), nullptr},
      {"families-match", nullptr, families_match},
      {"convolution-laws", nullptr, convolution_laws},
  };
  return entries;
}

const Entry& find_entry(std::string_view id) {
  for (const Entry& e : registry()) {
    if (e.id == id) return e;
  }
  throw UnknownTheorem("unknown theorem '" + std::string(id) + "'");
}

}  // namespace

const std::vector<std::string>& theorem_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> out;
    for (const Entry& e : registry()) out.push_back(e.id);
    return out;
  }();
  return keys;
}

TheoremReport run(std::string_view id, const VerifyOptions& opts) {
  const Entry& e = find_entry(id);
  if (opts.n_max < 1) throw GroundSizeOutOfRange("n_max must be >= 1");
  const auto start = Clock::now();
  TheoremReport rep;
  if (e.sweep) {
    require_enumerable(opts.n_max);
    auto check = e.sweep();
    sweep({check.get()}, opts);
    rep = check->finish();
  } else {
    rep = e.direct(opts);
  }
  rep.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
  return rep;
}

std::vector<TheoremReport> run_all(const VerifyOptions& opts) {
  require_enumerable(opts.n_max);
  std::vector<std::unique_ptr<SweepCheck>> sweeps;
  std::vector<SweepCheck*> raw;
  for (const Entry& e : registry()) {
    if (e.sweep) {
      sweeps.push_back(e.sweep());
      raw.push_back(sweeps.back().get());
    }
  }
  const auto start = Clock::now();
  sweep(raw, opts);
  const auto shared = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);

  std::vector<TheoremReport> out;
  std::size_t next_sweep = 0;
  for (const Entry& e : registry()) {
    if (e.sweep) {
      out.push_back(sweeps[next_sweep++]->finish());
      out.back().elapsed = shared;
    } else {
      const auto t0 = Clock::now();
      out.push_back(e.direct(opts));
      out.back().elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t0);
    }
  }
  return out;
}

}  // namespace topolab
