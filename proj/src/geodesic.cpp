#include "magnus/geodesic.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "magnus/errors.hpp"

namespace magnus {

namespace {

// The forest edge {a,b} differs in exactly one axis by one; recover it.
int axisOf(const Point& a, const Point& b) {
  int axis = -1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) {
      if (axis >= 0 || absInt(a[i] - b[i]) != 1) throw std::logic_error("forest edge is not a unit edge");
      axis = static_cast<int>(i);
    }
  }
  if (axis < 0) throw std::logic_error("degenerate forest edge");
  return axis;
}

}  // namespace

DeltaStar buildDeltaStar(const LatticeGroup& B, const Flow& f, const SteinerConfig& cfg) {
  DeltaStar ds;
  ds.gamma = supportGraph(B, f);

  // Divergence law: +1 at the identity, -1 at the endpoint, 0 elsewhere.
  ds.endpoint = B.identity();
  for (const ElemKey& v : ds.gamma.vertices) {
    Int div = divergence(B, f, v);
    if (div == 0) continue;
    if (div == 1 && v == B.identity()) continue;
    if (div == -1) {
      if (ds.endpoint != B.identity()) throw StructureError("flow has two sinks; not a word flow");
      ds.endpoint = v;
      continue;
    }
    throw StructureError("flow is not a word flow based at the identity");
  }

  if (f.empty()) return ds;

  std::set<ElemKey> gammaVertices(ds.gamma.vertices.begin(), ds.gamma.vertices.end());
  std::vector<std::vector<Point>> componentPoints;
  for (const auto& comp : ds.gamma.components) {
    std::vector<Point> pts;
    pts.reserve(comp.size());
    for (const ElemKey& v : comp) pts.push_back(B.coords(v));
    componentPoints.push_back(std::move(pts));
  }
  std::vector<Point> mandatory;
  for (const ElemKey& must : {B.identity(), ds.endpoint}) {
    if (!gammaVertices.contains(must)) mandatory.push_back(B.coords(must));
  }
  ds.forest = minimalConnectingForest(componentPoints, mandatory, B.rank(), cfg);

  std::set<ElemKey> vertices = gammaVertices;
  vertices.insert(B.identity());
  vertices.insert(ds.endpoint);

  for (const auto& [e, v] : f.entries()) {
    ElemKey head = B.mul(e.base, Letter{e.gen, 1});
    if (v > 0) {
      ds.edges.push_back({e.base, head, e.gen, 1, v, false});
    } else {
      ds.edges.push_back({head, e.base, e.gen, -1, -v, false});
    }
    ds.totalEdgeCount += absInt(v);
  }
  for (const LatticeEdge& q : ds.forest.edges) {
    int axis = axisOf(q.a, q.b);
    const Point& lo = q.a[axis] < q.b[axis] ? q.a : q.b;
    const Point& hi = q.a[axis] < q.b[axis] ? q.b : q.a;
    ElemKey loKey = B.keyOf(lo), hiKey = B.keyOf(hi);
    vertices.insert(loKey);
    vertices.insert(hiKey);
    ds.edges.push_back({loKey, hiKey, axis + 1, 1, 1, true});
    ds.edges.push_back({hiKey, loKey, axis + 1, -1, 1, true});
    ds.totalEdgeCount += 2;
  }
  ds.vertices.assign(vertices.begin(), vertices.end());
  return ds;
}

Int geodesicLengthOfFlow(const LatticeGroup& B, const Flow& f, const SteinerConfig& cfg) {
  if (f.empty()) return 0;
  DeltaStar ds = buildDeltaStar(B, f, cfg);
  return ds.totalEdgeCount;
}

Int geodesicLengthFN(const LatticeGroup& B, const Word& w, const SteinerConfig& cfg) {
  return geodesicLengthOfFlow(B, flowOfWord(B, w), cfg);
}

Word eulerWordOfDeltaStar(const LatticeGroup& B, const DeltaStar& ds) {
  if (ds.edges.empty()) return Word();

  struct OutEdge {
    ElemKey head;
    int gen;
    int sign;
    long long remaining;
  };
  std::map<ElemKey, std::vector<OutEdge>> out;
  std::map<ElemKey, Int> balance;  // out-degree minus in-degree
  for (const DeltaStarEdge& e : ds.edges) {
    long long copies = toInt64Checked(e.copies, "euler multiplicity");
    out[e.tail].push_back({e.head, e.gen, e.sign, copies});
    balance[e.tail] += e.copies;
    balance[e.head] -= e.copies;
  }
  for (auto& [v, edges] : out) {
    (void)v;
    std::sort(edges.begin(), edges.end(), [](const OutEdge& a, const OutEdge& b) {
      return std::tie(a.head, a.gen, a.sign) < std::tie(b.head, b.gen, b.sign);
    });
  }

  // Trail parity: before extraction, every vertex must balance except the
  // identity (+1) and the endpoint (-1) when they differ.
  for (const auto& [v, d] : balance) {
    Int expected = 0;
    if (ds.endpoint != B.identity()) {
      if (v == B.identity()) expected = 1;
      if (v == ds.endpoint) expected = -1;
    }
    if (d != expected) throw std::logic_error("euler trail: degree condition violated at " + v);
  }

  // Hierholzer over the directed multigraph, emitting the arrival letter on
  // pop; the reversed pop order is the trail.
  std::map<ElemKey, std::size_t> cursor;
  std::vector<std::pair<ElemKey, Letter>> stack{{B.identity(), Letter{0, 0}}};
  std::vector<Letter> reversed;
  while (!stack.empty()) {
    ElemKey v = stack.back().first;
    auto& edges = out[v];
    std::size_t& cur = cursor[v];
    while (cur < edges.size() && edges[cur].remaining == 0) ++cur;
    if (cur == edges.size()) {
      if (stack.back().second.gen != 0) reversed.push_back(stack.back().second);
      stack.pop_back();
      continue;
    }
    OutEdge& e = edges[cur];
    --e.remaining;
    stack.emplace_back(e.head, Letter{e.gen, e.sign});
  }
  std::reverse(reversed.begin(), reversed.end());
  Word result{std::move(reversed)};
  if (Int(result.size()) != ds.totalEdgeCount) {
    throw std::logic_error("euler trail: unreached edges; doubled graph disconnected");
  }
  return result;
}

Word eulerGeodesicWord(const LatticeGroup& B, const Word& w, const SteinerConfig& cfg) {
  Flow f = flowOfWord(B, w);
  if (f.empty()) return Word();
  return eulerWordOfDeltaStar(B, buildDeltaStar(B, f, cfg));
}

}  // namespace magnus
