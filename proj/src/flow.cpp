#include "magnus/flow.hpp"

#include <algorithm>
#include <set>

#include "magnus/errors.hpp"

namespace magnus {

void Flow::add(const EdgeKey& e, const Int& delta) {
  if (delta == 0) return;
  auto [it, inserted] = values_.try_emplace(e, delta);
  if (!inserted) {
    it->second += delta;
    if (it->second == 0) values_.erase(it);
  }
}

Int Flow::value(const EdgeKey& e) const {
  auto it = values_.find(e);
  return it == values_.end() ? Int(0) : it->second;
}

Int Flow::sumAbs() const {
  Int total = 0;
  for (const auto& [e, v] : values_) total += absInt(v);
  return total;
}

std::string Flow::key() const {
  std::string k = "{";
  bool first = true;
  for (const auto& [e, v] : values_) {
    if (!first) k += ';';
    first = false;
    k += e.base;
    k += '*';
    k += std::to_string(e.gen);
    k += '=';
    k += v.str();
  }
  return k + "}";
}

Flow flowOfWord(const BaseGroup& B, const Word& w) {
  Flow f;
  ElemKey at = B.identity();
  Word reduced = freeReduce(w);
  for (const Letter& l : reduced.letters()) {
    B.checkLetter(l);
    if (l.sign > 0) {
      f.add(EdgeKey{at, l.gen}, 1);
      at = B.mul(at, l);
    } else {
      at = B.mul(at, l);  // moved to at*x^-1; the traversed edge has tail there
      f.add(EdgeKey{at, l.gen}, -1);
    }
  }
  return f;
}

Int divergence(const BaseGroup& B, const Flow& f, const ElemKey& b) {
  Int out = 0;
  for (int g = 1; g <= B.rank(); ++g) {
    out += f.value(EdgeKey{b, g});
    out -= f.value(EdgeKey{B.mul(b, Letter{g, -1}), g});
  }
  return out;
}

bool equalModNprime(const BaseGroup& B, const Word& u, const Word& v) {
  return flowOfWord(B, u) == flowOfWord(B, v);
}

Flow translateFlow(const BaseGroup& B, const ElemKey& g, const Flow& f) {
  Flow out;
  for (const auto& [e, v] : f.entries()) out.add(EdgeKey{B.leftMul(g, e.base), e.gen}, v);
  return out;
}

Flow addFlows(const Flow& a, const Flow& b) {
  Flow out = a;
  for (const auto& [e, v] : b.entries()) out.add(e, v);
  return out;
}

Flow negateFlow(const Flow& f) {
  Flow out;
  for (const auto& [e, v] : f.entries()) out.add(e, -v);
  return out;
}

namespace {

// Minimal union-find over dense indices.
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

}  // namespace

SupportGraph supportGraph(const BaseGroup& B, const Flow& f) {
  SupportGraph g;
  std::set<ElemKey> vertices, tails;
  std::vector<std::pair<ElemKey, ElemKey>> edges;
  for (const auto& [e, v] : f.entries()) {
    (void)v;
    ElemKey head = B.mul(e.base, Letter{e.gen, 1});
    vertices.insert(e.base);
    vertices.insert(head);
    tails.insert(e.base);
    edges.emplace_back(e.base, head);
  }
  g.vertices.assign(vertices.begin(), vertices.end());
  g.tails.assign(tails.begin(), tails.end());
  g.edgeCount = edges.size();

  std::map<ElemKey, std::size_t> index;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) index[g.vertices[i]] = i;

  std::map<ElemKey, std::set<ElemKey>> adj;
  UnionFind uf(g.vertices.size());
  for (const auto& [a, b] : edges) {
    adj[a].insert(b);
    adj[b].insert(a);
    uf.unite(index[a], index[b]);
  }
  for (auto& [k, nbrs] : adj) g.adjacency[k] = std::vector<ElemKey>(nbrs.begin(), nbrs.end());

  std::map<std::size_t, std::vector<ElemKey>> byRoot;
  for (const ElemKey& v : g.vertices) byRoot[uf.find(index[v])].push_back(v);
  for (auto& [root, members] : byRoot) {
    (void)root;
    g.components.push_back(std::move(members));  // members already sorted (vertices iterated in order)
  }
  std::sort(g.components.begin(), g.components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return g;
}

}  // namespace magnus
