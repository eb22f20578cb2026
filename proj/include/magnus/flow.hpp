#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "magnus/base_group.hpp"

namespace magnus {

// Directed Cayley-graph edge b -> b*x_gen, identified by its tail.
// Positive flow direction follows the generator; negative traversals
// decrement, so flow equality is literal map equality.
struct EdgeKey {
  ElemKey base;
  int gen;
  friend auto operator<=>(const EdgeKey&, const EdgeKey&) = default;
};

// Finitely supported integer function on directed edges of Cay(B).
// Invariant: no stored value is zero.
class Flow {
 public:
  Flow() = default;

  void add(const EdgeKey& e, const Int& delta);
  Int value(const EdgeKey& e) const;
  const std::map<EdgeKey, Int>& entries() const { return values_; }

  bool empty() const { return values_.empty(); }
  std::size_t supportSize() const { return values_.size(); }
  Int sumAbs() const;

  // Canonical key "{base*gen=value;...}" in entry order.
  std::string key() const;

  friend bool operator==(const Flow&, const Flow&) = default;

 private:
  std::map<EdgeKey, Int> values_;
};

// Trace the path of w from the identity of B and count signed edge crossings.
Flow flowOfWord(const BaseGroup& B, const Word& w);

// Outflow minus inflow at b. For a word flow this is +1 at the identity and
// -1 at the endpoint (0 everywhere when the endpoint is the identity).
Int divergence(const BaseGroup& B, const Flow& f, const ElemKey& b);

// Word problem for F/N': words are equal there iff their flows coincide.
bool equalModNprime(const BaseGroup& B, const Word& u, const Word& v);

// Left translation of every edge tail by g; implements multiplication:
// flow(u v) = flow(u) + translate(image(u), flow(v)).
Flow translateFlow(const BaseGroup& B, const ElemKey& g, const Flow& f);

Flow addFlows(const Flow& a, const Flow& b);
Flow negateFlow(const Flow& f);

// Subgraph of Cay(B) on the edges with nonzero flow. `vertices` holds both
// endpoints of support edges; `tails` only the initial ones (the two sets
// play different roles in the embedding bounds).
struct SupportGraph {
  std::vector<ElemKey> vertices;                    // sorted
  std::vector<ElemKey> tails;                       // sorted
  std::map<ElemKey, std::vector<ElemKey>> adjacency;  // undirected, sorted
  std::vector<std::vector<ElemKey>> components;     // each sorted; ordered by least member
  std::size_t edgeCount = 0;
};

SupportGraph supportGraph(const BaseGroup& B, const Flow& f);

}  // namespace magnus
