#include <doctest.h>

#include <map>

#include "magnus/errors.hpp"
#include "magnus/geodesic.hpp"
#include "magnus/oracle.hpp"
#include "test_support.hpp"

using namespace magnus;
using namespace magnus::testsupport;

namespace {

const Word kCommutator = Word::parse("x1 x2 x1^-1 x2^-1", 2);

}

TEST_CASE("FN oracle pinned values") {
  FnBfsOracle oracle(2, 6);
  CHECK(oracle.length(kCommutator) == Int(4));
  CHECK(oracle.length(Word()) == Int(0));
  CHECK(FnBfsOracle(2, 1).length(W("x1 x2", 2)) == std::nullopt);
  CHECK(bfsGeodesicOracleFN(kCommutator, 2, 6) == Int(4));
}

TEST_CASE("FN ball state count at radius two") {
  // Elements of the rank-2 free metabelian group of length <= 2:
  // identity, 4 of length one, 12 of length two.
  FnBfsOracle oracle(2, 2);
  CHECK(oracle.stateCount() == 17);
}

TEST_CASE("FN oracle equals minimal word length by exhaustion") {
  LatticeGroup B(2);
  FnBfsOracle oracle(2, 4);
  std::map<std::string, std::size_t> minLen;
  for (const Word& w : enumerateReducedWords(2, 4)) {
    std::string key = flowOfWord(B, w).key();
    auto [it, inserted] = minLen.try_emplace(key, w.size());
    if (!inserted) it->second = std::min(it->second, w.size());
  }
  for (const Word& w : enumerateReducedWords(2, 4)) {
    CHECK(oracle.length(w) == Int(minLen.at(flowOfWord(B, w).key())));
  }
}

TEST_CASE("FN oracle agrees with the doubled-graph formula") {
  LatticeGroup B(2);
  FnBfsOracle oracle(2, 5);
  for (const Word& w : enumerateReducedWords(2, 5)) {
    CHECK(oracle.length(w) == geodesicLengthFN(B, w));
  }
}

TEST_CASE("wreath oracle pinned values") {
  LatticeGroup B(2);
  WreathBfsOracle oracle(2, 8);
  CHECK(oracle.length(magnusEmbed(B, W("x1 x1", 2))) == Int(4));
  CHECK(oracle.length(WreathElement::identityOf(B)) == Int(0));
  CHECK(oracle.length(magnusEmbed(B, kCommutator)) == Int(8));
  CHECK(bfsGeodesicOracleWreath(B, magnusEmbed(B, W("x1 x1", 2)), 6) == Int(4));

  // Single lamp far away: unreachable within the radius.
  CHECK(oracle.length(WreathElement::singleLamp(B, "(9,9)", {1, 0})) == std::nullopt);
}

TEST_CASE("wreath oracle equals the walk length") {
  LatticeGroup B(2);
  WreathBfsOracle oracle(2, 8);
  DetRng rng(139);
  int checked = 0;
  for (int i = 0; checked < 40 && i < 400; ++i) {
    Word w = randomReducedWord(rng, 2, rng.below(7));
    WreathElement e = magnusEmbed(B, w);
    Int walk = wreathLengthWalk(B, e);
    if (walk > 8) continue;
    CHECK(oracle.length(e) == walk);
    ++checked;
  }
  CHECK(checked == 40);
}

TEST_CASE("wreath oracle at rank 3") {
  LatticeGroup B(3);
  WreathBfsOracle oracle(3, 6);
  CHECK(oracle.length(magnusEmbed(B, W("x3 x3", 3))) == Int(4));
  CHECK(oracle.length(magnusEmbed(B, W("x1 x2 x3", 3))) == wreathLengthWalk(B, magnusEmbed(B, W("x1 x2 x3", 3))));
}

TEST_CASE("oracle caps") {
  CHECK_THROWS_AS(FnBfsOracle(2, 40), CapacityError);
  CHECK_THROWS_AS(WreathBfsOracle(2, 40), CapacityError);
  CHECK_THROWS_AS(FnBfsOracle(9, 4), CapacityError);
  OracleLimits tiny{6, 10};
  CHECK_THROWS_AS(FnBfsOracle(2, 6, tiny), CapacityError);
}
