#pragma once

#include "magnus/flow.hpp"
#include "magnus/steiner.hpp"

namespace magnus {

// One directed multiedge bundle of the doubled graph: traversing tail->head
// emits the letter (gen, sign). Flow edges carry |flow| copies all in the
// direction of the flow's sign; every forest edge contributes one copy each
// way.
struct DeltaStarEdge {
  ElemKey tail, head;
  int gen;
  int sign;
  Int copies;
  bool fromForest;
};

struct DeltaStar {
  std::vector<ElemKey> vertices;     // sorted
  std::vector<DeltaStarEdge> edges;  // canonical order
  Int totalEdgeCount{0};             // sum of copies = sum|flow| + 2|E(Q)|
  ForestResult forest;
  ElemKey endpoint;                  // image of the word in B
  SupportGraph gamma;
};

// Gamma, its components, the minimal connecting forest (with the identity and
// the endpoint as mandatory terminals when they sit outside Gamma), and the
// doubled multigraph. The flow must be a word flow based at the identity.
DeltaStar buildDeltaStar(const LatticeGroup& B, const Flow& f, const SteinerConfig& cfg = {});

// Geodesic length of w in F/N': sum of absolute flows plus twice the forest
// size.
Int geodesicLengthFN(const LatticeGroup& B, const Word& w, const SteinerConfig& cfg = {});
Int geodesicLengthOfFlow(const LatticeGroup& B, const Flow& f, const SteinerConfig& cfg = {});

// A word of exactly geodesic length that labels an Euler trail of the doubled
// graph from the identity, flow-equal to w. Deterministic: Hierholzer with
// lexicographic edge choice.
Word eulerGeodesicWord(const LatticeGroup& B, const Word& w, const SteinerConfig& cfg = {});
Word eulerWordOfDeltaStar(const LatticeGroup& B, const DeltaStar& ds);

}  // namespace magnus
