#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "topolab/errors.hpp"
#include "topolab/families.hpp"
#include "topolab/polyprops.hpp"

using namespace topolab;

namespace {

CoeffSeq seq(std::initializer_list<long> c) { return CoeffSeq(c); }

FamilyId id(std::string key, int n, std::optional<int> param = std::nullopt) {
  return FamilyId{std::move(key), n, param, std::nullopt};
}

}  // namespace

TEST_CASE("catalog shape") {
  const auto& cat = catalog();
  CHECK(cat.size() >= 30);
  std::set<std::string> keys;
  for (const auto& s : cat) keys.insert(s.key);
  CHECK(keys.size() == cat.size());
  for (const char* k : {"tau1-P1", "tau1-P2", "tau1-P3", "nm1-partition", "nm1-du-chain", "nm1-singletons",
                        "nm2-a", "nm2-b", "nm2-c", "nm2-d", "nm2-e", "nm2-f", "nm2-g", "nm2-h", "nm2-i", "nm2-j",
                        "nm3-six-1", "nm3-six-6", "nm3-seven-1", "nm3-seven-2", "nm3-rest-1", "nm3-rest-5",
                        "nm4-1", "nm4-5", "nmi-1", "nmi-2", "nmi-3", "counterexample", "partition"}) {
    CHECK_MESSAGE(keys.count(k), k);
  }
  CHECK(find_family("tau1-P1").min_n == 3);
  const auto& nmi = find_family("nmi-1");
  CHECK(nmi.param == 'i');
  CHECK(nmi.param_lo == 5);
  CHECK(nmi.param_hi(9) == 7);
  CHECK(find_family("nm2-j").min_n >= 6);
  CHECK_THROWS_AS(find_family("nm9-z"), UnknownFamily);
}

TEST_CASE("instantiate examples") {
  const auto s = instantiate(id("nm1-singletons", 5, 1));
  CHECK(s.claimed_poly() == seq({1, 4, 7, 7, 4, 1}));

  const auto cex = instantiate(id("counterexample", 5));
  CHECK(open_polynomial(cex.topology) == seq({1, 3, 3, 1, 2, 1}));
  CHECK(cex.topology.size() == 11);
  CHECK(cex.claimed_card.value == 11);

  const auto p = instantiate(FamilyId{"partition", 5, std::nullopt, PartitionType({1, 2})});
  CHECK(p.claimed_poly() == seq({1, 1, 2, 2, 1, 1}));
  CHECK(p.id.to_string() == "partition(n=5,alpha=1,2)");
  CHECK(id("nm2-a", 6, 2).to_string() == "nm2-a(n=6,j=2)");
}

TEST_CASE("instantiate rejects out-of-range parameters") {
  CHECK_THROWS_AS(instantiate(id("nm2-j", 5)), ParamOutOfRange);
  CHECK_THROWS_AS(instantiate(id("nm1-singletons", 5)), ParamOutOfRange);
  CHECK_THROWS_AS(instantiate(id("nm1-singletons", 5, 5)), ParamOutOfRange);
  CHECK_THROWS_AS(instantiate(id("nm1-partition", 5, 1)), ParamOutOfRange);
  CHECK_THROWS_AS(instantiate(id("nmi-1", 9, 4)), ParamOutOfRange);
  CHECK_THROWS_AS(instantiate(id("nmi-1", 9, 8)), ParamOutOfRange);
  CHECK_THROWS_AS(instantiate(FamilyId{"partition", 6, std::nullopt, PartitionType({1, 2})}), ParamOutOfRange);
  CHECK_THROWS_AS(instantiate(id("partition", 5)), ParamOutOfRange);
  CHECK_THROWS_AS(instantiate(id("bogus", 5)), UnknownFamily);
}

TEST_CASE("check examples") {
  const auto part = check(instantiate(id("nm1-partition", 5)));
  CHECK(part.poly_match);
  CHECK(part.log_concave);

  const auto cex = check(instantiate(id("counterexample", 6)));
  CHECK(cex.computed == seq({1, 4, 6, 4, 1, 2, 1}));
  CHECK_FALSE(cex.unimodal);
  CHECK(cex.shapes_hold());

  for (int n = 5; n <= 9; ++n) {
    const auto r = check(instantiate(id("tau1-P3", n)));
    CHECK(r.variants.size() == 2);
    CHECK(r.variants[0].source == "statement");
    CHECK(r.variants[1].source == "proof");
    CHECK(r.variants[0].matches == r.poly_match);
  }
}

TEST_CASE("sweep invariants over n = 4..9") {
  const auto ids = sweep_ids(4, 9);
  CHECK(ids.size() == 370);
  std::size_t card_fail = 0, poly_fail = 0;
  for (const auto& fid : ids) {
    const auto inst = instantiate(fid);
    const auto r = check(inst);
    const int n = fid.n;
    CHECK(inst.topology.ground_size() == n);
    oracle::Family f;
    for (SetMask m : inst.topology.opens()) f.push_back(m.bits());
    CHECK(oracle::closed(f, n));
    CHECK(r.computed.sum() == r.card);
    CHECK(r.card == inst.topology.size());
    CHECK(r.poly_match == r.diff_positions.empty());
    CHECK(r.claimed.degree() == static_cast<std::size_t>(n));
    CHECK(r.minimal_count == oracle::minimal_opens(f).size());
    CHECK(r.unimodal == oracle::unimodal(oracle::counts(f, n)));
    CHECK(r.log_concave == oracle::log_concave(oracle::counts(f, n)));
    card_fail += !r.card_match;
    poly_fail += !r.poly_match;
  }
  // nm2-f: every j; nm3-six-6: every n
  CHECK(card_fail > 0);
  CHECK(poly_fail > 0);
}

TEST_CASE("frozen discrepancies") {
  for (int n = 5; n <= 9; ++n) {
    for (int j = find_family("nm2-f").param_lo; j <= find_family("nm2-f").param_hi(n); ++j) {
      const auto r = check(instantiate(id("nm2-f", n, j)));
      CHECK_FALSE(r.card_match);
      CHECK(r.poly_match);
    }
  }
  const auto du = check(instantiate(id("nm1-du-chain", 6)));
  CHECK(du.minimal_count == 4);
  REQUIRE(du.claimed_minimal);
  CHECK(*du.claimed_minimal == 5);
  CHECK_FALSE(check(instantiate(id("nm1-du-chain", 4))).log_concave);
  CHECK_FALSE(check(instantiate(id("nm3-six-6", 6))).poly_match);
}

TEST_CASE("unimodality claims hold on the computed polynomials") {
  for (int n = 4; n <= 9; ++n) {
    for (const char* key : {"tau1-P1", "tau1-P2", "tau1-P3"}) CHECK(check(instantiate(id(key, n))).unimodal);
    for (int l = 1; l <= n - 1; ++l) CHECK(check(instantiate(id("nm1-singletons", n, l))).unimodal);
    CHECK(check(instantiate(id("nm1-partition", n))).log_concave);
  }
}
