#include "magnus/tour.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "magnus/errors.hpp"

namespace magnus {

Int l1Distance(const Point& a, const Point& b) {
  if (a.size() != b.size()) throw StructureError("points of different dimension");
  Int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += absInt(a[i] - b[i]);
  return d;
}

namespace {

constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

std::string pointKey(const Point& p) {
  std::string k = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) k += ',';
    k += p[i].str();
  }
  return k + ")";
}

void sortUnique(std::vector<Point>& pts) {
  std::sort(pts.begin(), pts.end(),
            [](const Point& a, const Point& b) { return pointKey(a) < pointKey(b); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

// Completion table over `required` nodes: h[mask][j] is the least cost of
// finishing from required[j] with `mask` already visited (visit the
// complement, then hop to `closer`). Reconstruction walks forward greedily,
// taking the least index that stays on an optimal completion, which yields
// the lexicographically least optimal visiting order.
struct WalkDp {
  std::vector<std::vector<long long>> dist;  // (m+2)^2: required + start + end
  std::vector<long long> h;
  int m;

  long long d(int i, int j) const { return dist[i][j]; }

  WalkDp(const std::vector<Point>& required, const Point& start, const Point& end, const Metric& metric) {
    m = static_cast<int>(required.size());
    std::vector<Point> nodes = required;
    nodes.push_back(start);
    nodes.push_back(end);
    dist.assign(nodes.size(), std::vector<long long>(nodes.size(), 0));
    long long bound = kInf / (m + 2);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      for (std::size_t j = 0; j < nodes.size(); ++j) {
        Int dij = metric(nodes[i], nodes[j]);
        if (dij < 0) throw StructureError("metric returned a negative distance");
        long long v = toInt64Checked(dij, "tour metric");
        if (v > bound) throw CapacityError("tour kernel: distances too large for exact 64-bit DP");
        dist[i][j] = v;
      }
    }
    if (m == 0) return;
    int endIdx = m + 1;
    h.assign((std::size_t(1) << m) * m, kInf);
    std::size_t full = (std::size_t(1) << m) - 1;
    for (int j = 0; j < m; ++j) h[full * m + j] = d(j, endIdx);
    for (std::size_t mask = full - 1; mask + 1 > 0; --mask) {
      for (int j = 0; j < m; ++j) {
        if (!(mask >> j & 1)) continue;
        long long best = kInf;
        for (int k = 0; k < m; ++k) {
          if (mask >> k & 1) continue;
          best = std::min(best, d(j, k) + h[(mask | (std::size_t(1) << k)) * m + k]);
        }
        h[mask * m + j] = best;
      }
      if (mask == 0) break;
    }
  }

  long long total(int startIdx) const {
    if (m == 0) return d(m, m + 1);  // start -> end directly
    long long best = kInf;
    for (int k = 0; k < m; ++k) best = std::min(best, d(startIdx, k) + h[(std::size_t(1) << k) * m + k]);
    return best;
  }

  std::vector<int> order(int startIdx) const {
    std::vector<int> seq;
    if (m == 0) return seq;
    long long remaining = total(startIdx);
    std::size_t mask = 0;
    int cur = startIdx;
    for (int step = 0; step < m; ++step) {
      for (int k = 0; k < m; ++k) {
        if (mask >> k & 1) continue;
        std::size_t next = mask | (std::size_t(1) << k);
        if (d(cur, k) + h[next * m + k] == remaining) {
          seq.push_back(k);
          remaining = h[next * m + k];
          mask = next;
          cur = k;
          break;
        }
      }
    }
    return seq;
  }
};

}  // namespace

TourResult shortestClosedTour(std::vector<Point> points, const Metric& metric, const TourKernelConfig& cfg) {
  const Metric& d = metric ? metric : l1Distance;
  sortUnique(points);
  std::size_t n = points.size();
  TourResult result;
  if (n == 0) return result;
  if (n > static_cast<std::size_t>(cfg.maxPoints)) {
    throw CapacityError("tour kernel: " + std::to_string(n) + " points exceed cap " +
                        std::to_string(cfg.maxPoints));
  }
  if (n == 1) {
    result.order = {points[0]};
    return result;
  }
  // Anchor the circuit at the least point; close back to it.
  std::vector<Point> required(points.begin() + 1, points.end());
  WalkDp dp(required, points[0], points[0], d);
  result.length = dp.total(dp.m);
  result.order.push_back(points[0]);
  for (int k : dp.order(dp.m)) result.order.push_back(required[k]);
  return result;
}

TourResult shortestWalk(const Point& start, const Point& end, std::vector<Point> points,
                        const Metric& metric, const TourKernelConfig& cfg) {
  const Metric& d = metric ? metric : l1Distance;
  sortUnique(points);
  std::erase_if(points, [&](const Point& p) { return p == start || p == end; });
  if (points.size() + 2 > static_cast<std::size_t>(cfg.maxPoints)) {
    throw CapacityError("walk kernel: " + std::to_string(points.size() + 2) + " points exceed cap " +
                        std::to_string(cfg.maxPoints));
  }
  WalkDp dp(points, start, end, d);
  TourResult result;
  result.length = dp.total(dp.m);
  result.order.push_back(start);
  for (int k : dp.order(dp.m)) result.order.push_back(points[k]);
  result.order.push_back(end);
  return result;
}

}  // namespace magnus
