#include <doctest.h>

#include "magnus/errors.hpp"
#include "magnus/geodesic.hpp"
#include "magnus/oracle.hpp"
#include "test_support.hpp"

using namespace magnus;
using namespace magnus::testsupport;

namespace {

const Word kCommutator = Word::parse("x1 x2 x1^-1 x2^-1", 2);

// c * (x1^3 c x1^-3): the straight segments cancel in the flow, leaving two
// unit squares that need a two-edge bridge.
Word twoSquares() {
  Word shift = Word::parse("x1 x1 x1", 2);
  return kCommutator * shift * kCommutator * shift.inverse();
}

}  // namespace

TEST_CASE("delta-star of a single cycle") {
  LatticeGroup B(2);
  DeltaStar ds = buildDeltaStar(B, flowOfWord(B, kCommutator));
  CHECK(ds.totalEdgeCount == 4);
  CHECK(ds.forest.cost == 0);
  CHECK(ds.endpoint == "(0,0)");
  CHECK(ds.edges.size() == 4);
  for (const DeltaStarEdge& e : ds.edges) CHECK(e.copies == 1);
}

TEST_CASE("delta-star bridging two squares") {
  LatticeGroup B(2);
  Flow f = flowOfWord(B, twoSquares());
  CHECK(f.sumAbs() == 8);
  SupportGraph g = supportGraph(B, f);
  CHECK(g.components.size() == 2);

  DeltaStar ds = buildDeltaStar(B, f);
  CHECK(ds.forest.cost == 2);
  CHECK(ds.totalEdgeCount == 12);
  CHECK(geodesicLengthFN(B, twoSquares()) == 12);

  // Independent certificate for the bridge cost.
  std::vector<std::vector<Point>> comps;
  for (const auto& comp : g.components) {
    std::vector<Point> pts;
    for (const ElemKey& v : comp) pts.push_back(B.coords(v));
    comps.push_back(pts);
  }
  CHECK(bruteForest(comps, 2, 4) == 2);
}

TEST_CASE("delta-star of the empty flow") {
  LatticeGroup B(2);
  DeltaStar ds = buildDeltaStar(B, Flow());
  CHECK(ds.totalEdgeCount == 0);
  CHECK(ds.edges.empty());
  CHECK(geodesicLengthFN(B, W("x1 x1^-1", 2)) == 0);
}

TEST_CASE("geodesic length pinned values") {
  LatticeGroup B(2);
  CHECK(geodesicLengthFN(B, kCommutator) == 4);
  CHECK(geodesicLengthFN(B, W("x1 x1 x2 x1^-1 x1^-1 x2^-1 x2", 2)) == 5);
  Word inNPrime = commutator(commutator(W("x1", 2), W("x2", 2)), commutator(W("x2", 2), W("x1 x1", 2)));
  CHECK(geodesicLengthFN(B, inNPrime) == 0);
}

TEST_CASE("euler word on pinned inputs") {
  LatticeGroup B(2);
  Word geo = eulerGeodesicWord(B, kCommutator);
  CHECK(geo.size() == 4);
  CHECK(equalModNprime(B, geo, kCommutator));

  CHECK(eulerGeodesicWord(B, W("x1 x1^-1", 2)).empty());

  Word messy = W("x1 x1 x2 x1^-1 x1^-1 x2^-1 x2", 2);
  Word geo2 = eulerGeodesicWord(B, messy);
  CHECK(geo2.size() == 5);
  CHECK(equalModNprime(B, geo2, messy));

  Word geo3 = eulerGeodesicWord(B, twoSquares());
  CHECK(geo3.size() == 12);
  CHECK(equalModNprime(B, geo3, twoSquares()));
}

TEST_CASE("euler word properties on random words") {
  LatticeGroup B(2);
  DetRng rng(131);
  for (int i = 0; i < 300; ++i) {
    Word w = randomReducedWord(rng, 2, rng.below(13));
    Int len = geodesicLengthFN(B, w);
    Word geo = eulerGeodesicWord(B, w);
    CHECK(Int(geo.size()) == len);
    CHECK(isFreelyReduced(geo));
    CHECK(equalModNprime(B, geo, w));
    CHECK(len <= Int(w.size()));
    CHECK((len == 0) == flowOfWord(B, w).empty());
  }
}

TEST_CASE("geodesics over rank 3") {
  LatticeGroup B(3);
  DetRng rng(137);
  for (int i = 0; i < 60; ++i) {
    Word w = randomReducedWord(rng, 3, rng.below(12));
    Word geo = eulerGeodesicWord(B, w);
    CHECK(Int(geo.size()) == geodesicLengthFN(B, w));
    CHECK(equalModNprime(B, geo, w));
  }
}

TEST_CASE("identity outside the support graph forces a pendant bridge") {
  // x1 c x1^-1 for the commutator c: the x1 edges cancel, leaving one square
  // at (1,0) that avoids the identity entirely. The forest must attach the
  // identity, and the Euler circuit starts and ends there.
  LatticeGroup B(2);
  Word w = W("x1", 2) * kCommutator * W("x1^-1", 2);
  Flow f = flowOfWord(B, w);
  SupportGraph g = supportGraph(B, f);
  CHECK(g.components.size() == 1);
  CHECK(std::find(g.vertices.begin(), g.vertices.end(), "(0,0)") == g.vertices.end());

  DeltaStar ds = buildDeltaStar(B, f);
  CHECK(ds.forest.cost == 1);
  CHECK(ds.endpoint == "(0,0)");
  CHECK(geodesicLengthFN(B, w) == 6);
  CHECK(bfsGeodesicOracleFN(w, 2, 6) == Int(6));

  Word geo = eulerGeodesicWord(B, w);
  CHECK(geo.size() == 6);
  CHECK(equalModNprime(B, geo, w));
}

TEST_CASE("non-word flows are rejected") {
  LatticeGroup B(2);
  Flow shifted = translateFlow(B, B.keyOf(pt({1, 0})), flowOfWord(B, W("x1 x2", 2)));
  CHECK_THROWS_AS(buildDeltaStar(B, shifted), StructureError);
}
