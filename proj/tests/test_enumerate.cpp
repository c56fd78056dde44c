#include <doctest.h>

#include <set>
#include <stdexcept>

#include "oracles.hpp"
#include "topolab/enumerate.hpp"
#include "topolab/errors.hpp"

using namespace topolab;

namespace {

oracle::Family family_of(const Topology& t) {
  oracle::Family f;
  for (SetMask m : t.opens()) f.push_back(m.bits());
  std::sort(f.begin(), f.end());
  return f;
}

std::vector<Topology> collect(const EnumConfig& cfg) {
  std::vector<Topology> out;
  enumerate_topologies(cfg, [&](const Topology& t) { out.push_back(t); });
  return out;
}

}  // namespace

TEST_CASE("strategy names") {
  CHECK(parse_strategy("closure") == Strategy::ClosureBrute);
  CHECK(parse_strategy("preorder") == Strategy::PreorderBacktrack);
  CHECK(parse_strategy("both") == Strategy::Both);
  CHECK(to_string(Strategy::Both) == "both");
  CHECK_THROWS_AS(parse_strategy("dfs"), std::invalid_argument);
}

TEST_CASE("labeled topologies match the relation oracle exactly for n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    const auto census = oracle::relation_census(n, true);
    for (Strategy s : {Strategy::ClosureBrute, Strategy::PreorderBacktrack, Strategy::Both}) {
      EnumConfig cfg;
      cfg.n = n;
      cfg.strategy = s;
      std::set<oracle::Family> seen;
      const auto stats = enumerate_topologies(cfg, [&](const Topology& t) {
        CHECK(oracle::closed(family_of(t), n));
        seen.insert(family_of(t));
      });
      CHECK(stats.total == census.preorders);
      CHECK(seen == census.families);
      CHECK(stats.by_cardinality == census.by_cardinality);
    }
  }
}

TEST_CASE("n = 5 counts and histogram match the relation oracle") {
  const auto census = oracle::relation_census(5);
  EnumConfig cfg;
  cfg.n = 5;
  const auto stats = enumerate_topologies(cfg, [](const Topology&) {});
  CHECK(stats.total == 6942);
  CHECK(census.preorders == 6942);
  CHECK(stats.by_cardinality == census.by_cardinality);
}

TEST_CASE("filters") {
  const auto census = oracle::relation_census(4);
  CHECK(count_topologies(4, std::nullopt, true) == census.partial_orders);
  CHECK(census.partial_orders == 219);
  CHECK(count_topologies(1) == 1);
  CHECK(count_topologies(3) == 29);

  EnumConfig cfg;
  cfg.n = 5;
  cfg.min_card = 12;
  std::uint64_t expected = 0;
  for (const auto& [card, c] : oracle::relation_census(5).by_cardinality)
    if (card >= 12) expected += c;
  const auto stats = enumerate_topologies(cfg, [](const Topology& t) { CHECK(t.size() >= 12); });
  CHECK(stats.total == expected);
  CHECK(stats.total > 0);
}

TEST_CASE("isomorphism classes") {
  const std::vector<std::uint64_t> classes{1, 3, 9, 33, 139};
  for (int n = 1; n <= 5; ++n) {
    std::set<oracle::Family> forms;
    for (const auto& f : oracle::relation_census(n, true).families) forms.insert(oracle::canonical(f, n));
    CHECK(forms.size() == classes[n - 1]);
    EnumConfig cfg;
    cfg.n = n;
    cfg.up_to_iso = true;
    const auto reps = collect(cfg);
    CHECK(reps.size() == forms.size());
    for (const auto& t : reps) CHECK(is_canonical(t));
  }
  // n = 6 takes the canonical-only path
  EnumConfig cfg;
  cfg.n = 6;
  cfg.up_to_iso = true;
  cfg.thread_count = 4;
  CHECK(enumerate_topologies(cfg, [](const Topology&) {}).total == 718);
  cfg.require_t0 = true;
  CHECK(enumerate_topologies(cfg, [](const Topology&) {}).total == 318);
}

TEST_CASE("output order does not depend on thread count") {
  EnumConfig cfg;
  cfg.n = 5;
  const auto serial = collect(cfg);
  for (unsigned threads : {2u, 3u, 8u}) {
    cfg.thread_count = threads;
    CHECK(collect(cfg) == serial);
  }
  cfg.n = 6;
  cfg.require_t0 = true;
  cfg.thread_count = 1;
  const auto serial6 = collect(cfg);
  CHECK(serial6.size() == 130023);
  cfg.thread_count = 4;
  CHECK(collect(cfg) == serial6);
}

TEST_CASE("range errors") {
  EnumConfig cfg;
  cfg.n = 0;
  CHECK_THROWS_AS(enumerate_topologies(cfg, [](const Topology&) {}), GroundSizeOutOfRange);
  cfg.n = 5;
  cfg.strategy = Strategy::ClosureBrute;
  CHECK_THROWS_AS(enumerate_topologies(cfg, [](const Topology&) {}), StrategyOutOfRange);
  cfg.strategy = Strategy::Both;
  CHECK_THROWS_AS(enumerate_topologies(cfg, [](const Topology&) {}), StrategyOutOfRange);
  cfg.n = 8;
  cfg.strategy = Strategy::PreorderBacktrack;
  CHECK_THROWS_AS(enumerate_topologies(cfg, [](const Topology&) {}), StrategyOutOfRange);
}
