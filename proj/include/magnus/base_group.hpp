#pragma once

#include <json.hpp>

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "magnus/int_types.hpp"
#include "magnus/word.hpp"

namespace magnus {

using Json = nlohmann::ordered_json;

// Elements are carried as canonical keys: total-order-comparable, hashable
// strings such that key(a) == key(b) iff a == b in the group. Operating on
// keys keeps flows, group-ring supports and BFS dedup uniform across the
// whole solvable tower.
using ElemKey = std::string;

// Contract for the base group B whose Cayley graph carries flows and lamps.
// Concrete groups: LatticeGroup (Z^r, exact L1 metric) and the recursive
// SolvableTowerGroup (no exact metric; bounded BFS oracle only).
class BaseGroup {
 public:
  virtual ~BaseGroup() = default;

  int rank() const { return rank_; }
  virtual int degree() const = 0;
  const ElemKey& identity() const { return identity_; }

  virtual ElemKey mul(const ElemKey& x, Letter l) const = 0;      // x * x_l
  virtual ElemKey inverse(const ElemKey& x) const = 0;
  virtual ElemKey leftMul(const ElemKey& g, const ElemKey& x) const = 0;  // g * x
  virtual Json encode(const ElemKey& x) const = 0;

  virtual bool hasExactMetric() const = 0;
  // Exact word-metric distance; only available when hasExactMetric().
  virtual Int distance(const ElemKey& a, const ElemKey& b) const;

  // Bounded BFS oracle over the Cayley graph; the only metric access for
  // recursive base groups. Returns nullopt when the distance exceeds radius.
  std::optional<Int> boundedDistance(const ElemKey& a, const ElemKey& b, int radius,
                                     std::size_t stateCap = 2'000'000) const;

  void checkLetter(Letter l) const;

 protected:
  BaseGroup(int rank, ElemKey identity);

 private:
  int rank_;
  ElemKey identity_;
};

// The lattice Z^r with generator x_i = the i-th unit vector; word metric is
// the L1 norm. Keys look like "(1,-2)".
class LatticeGroup final : public BaseGroup {
 public:
  explicit LatticeGroup(int rank);

  int degree() const override { return 1; }
  ElemKey mul(const ElemKey& x, Letter l) const override;
  ElemKey inverse(const ElemKey& x) const override;
  ElemKey leftMul(const ElemKey& g, const ElemKey& x) const override;
  Json encode(const ElemKey& x) const override;
  bool hasExactMetric() const override { return true; }
  Int distance(const ElemKey& a, const ElemKey& b) const override;

  std::vector<Int> coords(const ElemKey& x) const;
  ElemKey keyOf(const std::vector<Int>& coords) const;
};

// Image of w under the canonical epimorphism F -> B.
ElemKey evaluateInBase(const BaseGroup& B, const Word& w);

}  // namespace magnus
