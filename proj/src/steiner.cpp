#include "magnus/steiner.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <set>
#include <string>

#include "magnus/errors.hpp"

namespace magnus {

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

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Parent codes for DP reconstruction.
constexpr long long kNone = 0, kBase = 1, kMerge = 2, kEdge = 3;
long long packParent(long long type, long long payload) { return (type << 32) | payload; }

struct Grid {
  int rank;
  std::vector<std::vector<Int>> axisCoords;  // sorted unique per axis
  std::vector<std::size_t> radix;            // mixed-radix strides
  std::size_t nodeCount = 1;

  std::size_t indexOf(const std::vector<int>& ci) const {
    std::size_t idx = 0;
    for (int a = 0; a < rank; ++a) idx += radix[a] * ci[a];
    return idx;
  }
  std::vector<int> coordIndices(std::size_t idx) const {
    std::vector<int> ci(rank);
    for (int a = rank - 1; a >= 0; --a) {
      ci[a] = static_cast<int>(idx / radix[a]);
      idx %= radix[a];
    }
    return ci;
  }
  Point pointOf(std::size_t idx) const {
    std::vector<int> ci = coordIndices(idx);
    Point p(rank);
    for (int a = 0; a < rank; ++a) p[a] = axisCoords[a][ci[a]];
    return p;
  }
  std::size_t nodeFor(const Point& p) const {
    std::vector<int> ci(rank);
    for (int a = 0; a < rank; ++a) {
      const auto& ax = axisCoords[a];
      auto it = std::lower_bound(ax.begin(), ax.end(), p[a]);
      if (it == ax.end() || *it != p[a]) throw StructureError("point off the Hanan grid");
      ci[a] = static_cast<int>(it - ax.begin());
    }
    return indexOf(ci);
  }
};

}  // namespace

ForestResult minimalConnectingForest(const std::vector<std::vector<Point>>& components,
                                     const std::vector<Point>& mandatoryTerminals, int rank,
                                     const SteinerConfig& cfg) {
  if (rank < 1) throw RankError("rank must be at least 1");

  // Assemble groups: the components plus a singleton per mandatory terminal
  // not already inside one of them.
  std::vector<std::vector<Point>> groups;
  std::set<std::string> covered;
  for (const auto& comp : components) {
    if (comp.empty()) throw StructureError("empty component");
    std::vector<Point> members;
    std::set<std::string> seen;
    for (const Point& p : comp) {
      if (static_cast<int>(p.size()) != rank) throw StructureError("point dimension does not match rank");
      if (seen.insert(pointKey(p)).second) members.push_back(p);
    }
    for (const Point& p : members) covered.insert(pointKey(p));
    groups.push_back(std::move(members));
  }
  for (const Point& p : mandatoryTerminals) {
    if (static_cast<int>(p.size()) != rank) throw StructureError("point dimension does not match rank");
    if (covered.insert(pointKey(p)).second) groups.push_back({p});
  }

  ForestResult result;
  std::size_t t = groups.size();
  if (t <= 1) return result;
  if (t > static_cast<std::size_t>(cfg.maxGroups)) {
    throw CapacityError("steiner kernel: " + std::to_string(t) + " terminal groups exceed cap " +
                        std::to_string(cfg.maxGroups));
  }

  // Hanan grid over all group vertices. Optimal rectilinear Steiner trees on
  // the attachment points stay on this grid, so exactness is preserved.
  Grid grid;
  grid.rank = rank;
  grid.axisCoords.assign(rank, {});
  for (const auto& g : groups) {
    for (const Point& p : g) {
      for (int a = 0; a < rank; ++a) grid.axisCoords[a].push_back(p[a]);
    }
  }
  for (auto& ax : grid.axisCoords) {
    std::sort(ax.begin(), ax.end());
    ax.erase(std::unique(ax.begin(), ax.end()), ax.end());
  }
  grid.radix.assign(rank, 0);
  for (int a = 0; a < rank; ++a) {
    grid.radix[a] = grid.nodeCount;
    grid.nodeCount *= grid.axisCoords[a].size();
    if (grid.nodeCount > cfg.maxGridNodes) {
      throw CapacityError("steiner kernel: Hanan grid exceeds " + std::to_string(cfg.maxGridNodes) +
                          " nodes");
    }
  }

  std::size_t V = grid.nodeCount;
  std::size_t N = V + t;  // grid nodes + one virtual node per group
  if ((std::size_t(1) << t) * N > cfg.maxTableEntries) {
    throw CapacityError("steiner kernel: DP table would exceed " + std::to_string(cfg.maxTableEntries) +
                        " entries");
  }

  // Adjacency: consecutive grid coordinates along each axis (weight = gap in
  // unit edges), plus zero-weight spokes between each group's virtual node
  // and its members (the group is already internally connected).
  std::vector<std::vector<std::pair<std::size_t, long long>>> adj(N);
  for (std::size_t v = 0; v < V; ++v) {
    std::vector<int> ci = grid.coordIndices(v);
    for (int a = 0; a < rank; ++a) {
      if (ci[a] + 1 < static_cast<int>(grid.axisCoords[a].size())) {
        Int gap = grid.axisCoords[a][ci[a] + 1] - grid.axisCoords[a][ci[a]];
        long long w = toInt64Checked(gap, "steiner gap");
        if (w > (1LL << 40)) throw CapacityError("steiner kernel: coordinate gap too large");
        std::size_t u = v + grid.radix[a];
        adj[v].emplace_back(u, w);
        adj[u].emplace_back(v, w);
      }
    }
  }
  for (std::size_t g = 0; g < t; ++g) {
    for (const Point& p : groups[g]) {
      std::size_t node = grid.nodeFor(p);
      adj[V + g].emplace_back(node, 0);
      adj[node].emplace_back(V + g, 0);
    }
  }

  std::size_t full = (std::size_t(1) << t) - 1;
  std::vector<long long> dp((full + 1) * N, kInf), parent((full + 1) * N, packParent(kNone, 0));
  for (std::size_t g = 0; g < t; ++g) {
    dp[(std::size_t(1) << g) * N + (V + g)] = 0;
    parent[(std::size_t(1) << g) * N + (V + g)] = packParent(kBase, 0);
  }

  using HeapItem = std::pair<long long, std::size_t>;
  for (std::size_t mask = 1; mask <= full; ++mask) {
    long long* cur = dp.data() + mask * N;
    long long* par = parent.data() + mask * N;
    for (std::size_t sub = (mask - 1) & mask; sub > 0; sub = (sub - 1) & mask) {
      const long long* a = dp.data() + sub * N;
      const long long* b = dp.data() + (mask ^ sub) * N;
      for (std::size_t v = 0; v < N; ++v) {
        if (a[v] >= kInf || b[v] >= kInf) continue;
        long long cand = a[v] + b[v];
        if (cand < cur[v]) {
          cur[v] = cand;
          par[v] = packParent(kMerge, static_cast<long long>(sub));
        }
      }
    }
    std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<>> heap;
    for (std::size_t v = 0; v < N; ++v) {
      if (cur[v] < kInf) heap.emplace(cur[v], v);
    }
    while (!heap.empty()) {
      auto [d, v] = heap.top();
      heap.pop();
      if (d != cur[v]) continue;
      for (auto [u, w] : adj[v]) {
        if (d + w < cur[u]) {
          cur[u] = d + w;
          par[u] = packParent(kEdge, static_cast<long long>(v));
          heap.emplace(cur[u], u);
        }
      }
    }
  }

  std::size_t best = 0;
  for (std::size_t v = 1; v < N; ++v) {
    if (dp[full * N + v] < dp[full * N + best]) best = v;
  }
  long long total = dp[full * N + best];
  if (total >= kInf) throw StructureError("steiner kernel: disconnected instance");  // cannot happen

  // Walk parents, expanding grid segments into unit lattice edges. Virtual
  // spokes expand to nothing.
  std::set<LatticeEdge> edges;
  long long expandedWeight = 0;
  std::vector<std::pair<std::size_t, std::size_t>> stack{{full, best}};
  while (!stack.empty()) {
    auto [mask, v] = stack.back();
    stack.pop_back();
    long long p = parent[mask * N + v];
    long long type = p >> 32, payload = p & 0xffffffffLL;
    if (type == kBase || type == kNone) continue;
    if (type == kMerge) {
      auto sub = static_cast<std::size_t>(payload);
      stack.emplace_back(sub, v);
      stack.emplace_back(mask ^ sub, v);
      continue;
    }
    auto u = static_cast<std::size_t>(payload);
    if (u < V && v < V) {
      // Same grid line, consecutive coordinates: lay down the unit edges.
      std::vector<int> ciU = grid.coordIndices(u), ciV = grid.coordIndices(v);
      int axis = -1;
      for (int a = 0; a < grid.rank; ++a) {
        if (ciU[a] != ciV[a]) axis = a;
      }
      Point lo = grid.pointOf(u), hi = grid.pointOf(v);
      if (lo[axis] > hi[axis]) std::swap(lo, hi);
      for (Point at = lo; at[axis] < hi[axis];) {
        Point next = at;
        next[axis] += 1;
        edges.insert(pointKey(at) < pointKey(next) ? LatticeEdge{at, next} : LatticeEdge{next, at});
        ++expandedWeight;
        at = std::move(next);
      }
    }
    stack.emplace_back(mask, u);
  }
  if (expandedWeight != total || static_cast<long long>(edges.size()) != total) {
    throw std::logic_error("steiner kernel: reconstruction does not match DP cost");
  }

  result.edges.assign(edges.begin(), edges.end());
  result.cost = total;

  // Connectivity audit: groups plus Q must form one block.
  std::map<std::string, std::size_t> idx;
  auto nodeId = [&](const Point& p) {
    auto [it, inserted] = idx.try_emplace(pointKey(p), idx.size());
    (void)inserted;
    return it->second;
  };
  std::vector<std::pair<std::size_t, std::size_t>> unions;
  std::vector<std::size_t> groupReps;
  for (const auto& g : groups) {
    std::size_t rep = nodeId(g.front());
    groupReps.push_back(rep);
    for (const Point& p : g) unions.emplace_back(rep, nodeId(p));
  }
  for (const LatticeEdge& e : result.edges) unions.emplace_back(nodeId(e.a), nodeId(e.b));
  UnionFind uf(idx.size());
  for (auto [a, b] : unions) uf.unite(a, b);
  for (std::size_t rep : groupReps) {
    if (uf.find(rep) != uf.find(groupReps.front())) {
      throw std::logic_error("steiner kernel: output fails connectivity audit");
    }
  }
  return result;
}

}  // namespace magnus
