#pragma once

#include <compare>
#include <vector>

#include "magnus/tour.hpp"

namespace magnus {

struct SteinerConfig {
  int maxGroups = 10;                    // components + mandatory singletons
  std::size_t maxGridNodes = 120000;     // Hanan grid size cap
  std::size_t maxTableEntries = 8u << 20;  // (2^groups) * nodes cap
};

// Undirected unit lattice edge; endpoints ordered canonically.
struct LatticeEdge {
  Point a, b;
  friend auto operator<=>(const LatticeEdge&, const LatticeEdge&) = default;
};

struct ForestResult {
  std::vector<LatticeEdge> edges;  // sorted, duplicate-free
  Int cost{0};                     // == edges.size()
};

// Exact minimum-cardinality set Q of lattice edges making all components and
// mandatory terminals one connected set (components count as already
// internally connected). Subset DP over component-groups on the Hanan grid of
// all group vertices, with Dijkstra propagation between merges; exactness is
// the contract, caps are the only escape.
ForestResult minimalConnectingForest(const std::vector<std::vector<Point>>& components,
                                     const std::vector<Point>& mandatoryTerminals, int rank,
                                     const SteinerConfig& cfg = {});

}  // namespace magnus
