#include <doctest.h>

#include "oracles.hpp"
#include "topolab/errors.hpp"
#include "topolab/verify.hpp"

using namespace topolab;

namespace {

VerifyOptions upto(int n_max) {
  VerifyOptions o;
  o.n_max = n_max;
  return o;
}

}  // namespace

TEST_CASE("registry") {
  const auto& keys = theorem_keys();
  CHECK(keys.size() == 15);
  CHECK(keys.front() == "real-roots-iff-discrete");
  CHECK_THROWS_AS(run("no-such-check", upto(3)), UnknownTheorem);
  CHECK_THROWS_AS(run("real-roots-iff-discrete", upto(0)), GroundSizeOutOfRange);
  CHECK_THROWS_AS(run("real-roots-iff-discrete", upto(8)), StrategyOutOfRange);
}

TEST_CASE("real-roots-iff-discrete") {
  const auto r = run("real-roots-iff-discrete", upto(4));
  CHECK(r.verdict == Verdict::Verified);
  CHECK(r.checked_count == 1 + 4 + 29 + 355);
  CHECK(r.witnesses.empty());
  for (const auto& [n, c] : r.data["real_rooted_per_n"].items()) CHECK(c.get<int>() == 1);
}

TEST_CASE("counterexample-nonunimodal") {
  const auto r = run("counterexample-nonunimodal", upto(10));
  CHECK(r.verdict == Verdict::Verified);
  CHECK(r.checked_count == 6);
}

TEST_CASE("partition-product") {
  const auto r = run("partition-product", upto(9));
  CHECK(r.verdict == Verdict::Verified);
  std::uint64_t expected = 0;
  for (int n = 1; n <= 9; ++n) expected += oracle::partition_count(n);
  CHECK(r.checked_count == expected);
  CHECK(run("coeff-composition", upto(9)).verdict == Verdict::Verified);
}

TEST_CASE("sweep checks at n <= 4") {
  for (const char* key : {"dmax-bound", "cotopology-partition", "missing-size-max-card", "nonvanishing-corollary",
                          "t0-nonvanishing", "t0-small-unimodal", "small-tau-gap"}) {
    CHECK_MESSAGE(run(key, upto(4)).verdict == Verdict::Verified, key);
  }
}

TEST_CASE("unimodal-above-6x2n4 is refuted at n = 4") {
  const auto r = run("unimodal-above-6x2n4", upto(4));
  CHECK(r.verdict == Verdict::Refuted);
  REQUIRE_FALSE(r.witnesses.empty());
  REQUIRE(r.witnesses[0].topology);
  CHECK(r.witnesses[0].topology->size() == 7);
}

TEST_CASE("newton-implies-discrete reports soft passes") {
  const auto r = run("newton-implies-discrete", upto(4));
  CHECK(r.verdict == Verdict::Discrepancy);
  CHECK(r.data["violations"].get<int>() == 0);
}

TEST_CASE("convolution laws are seeded") {
  VerifyOptions o = upto(3);
  o.seed = 7;
  const auto a = run("convolution-laws", o);
  const auto b = run("convolution-laws", o);
  CHECK(a.verdict == Verdict::Verified);
  CHECK(a.data == b.data);
  CHECK(a.checked_count == 20000);
}

TEST_CASE("run_all agrees with run") {
  const auto all = run_all(upto(4));
  REQUIRE(all.size() == theorem_keys().size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(all[i].id == theorem_keys()[i]);
    const auto single = run(all[i].id, upto(4));
    CHECK(single.verdict == all[i].verdict);
    CHECK(single.checked_count == all[i].checked_count);
    CHECK(single.data == all[i].data);
  }
}

TEST_CASE("thread count does not change reports") {
  VerifyOptions o = upto(5);
  const auto a = run("dmax-bound", o);
  o.threads = 4;
  const auto b = run("dmax-bound", o);
  CHECK(a.data == b.data);
  CHECK(a.checked_count == b.checked_count);
}
