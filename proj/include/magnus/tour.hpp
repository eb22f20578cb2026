#pragma once

#include <functional>
#include <vector>

#include "magnus/int_types.hpp"

namespace magnus {

using Point = std::vector<Int>;
using Metric = std::function<Int(const Point&, const Point&)>;

Int l1Distance(const Point& a, const Point& b);

struct TourKernelConfig {
  int maxPoints = 18;  // Held-Karp cap (distinct points in the DP)
};

struct TourResult {
  Int length{0};
  // Closed variant: starts at the least point, each point once; the closing
  // hop back to the start is included in length. Walk variant: full sequence
  // [start, interior..., end].
  std::vector<Point> order;
};

// Exact minimum closed-tour length through all points (bitmask DP over the
// metric closure). Ties broken toward the lexicographically least visiting
// order on canonical point keys. Callers include the identity themselves
// when the tour must pass it.
TourResult shortestClosedTour(std::vector<Point> points, const Metric& metric = {},
                              const TourKernelConfig& cfg = {});

// Exact minimum length of a walk from start to end visiting all points.
TourResult shortestWalk(const Point& start, const Point& end, std::vector<Point> points,
                        const Metric& metric = {}, const TourKernelConfig& cfg = {});

}  // namespace magnus
