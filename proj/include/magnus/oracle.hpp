#pragma once

#include <optional>
#include <string>
#include <unordered_map>

#include "magnus/base_group.hpp"
#include "magnus/flow.hpp"
#include "magnus/wreath.hpp"

namespace magnus {

struct OracleLimits {
  int hardRadiusCap = 12;
  std::size_t maxStates = 8'000'000;
};

// Independent geodesic-length oracle for the degree-2 quotient: breadth-first
// search from the identity over canonical (flow, endpoint) forms, deduplicated
// by a packed key. The search space is the group, not the free monoid.
class FnBfsOracle {
 public:
  FnBfsOracle(int rank, int radius, OracleLimits limits = {});

  int rank() const { return rank_; }
  int radius() const { return radius_; }
  std::size_t stateCount() const { return dist_.size(); }

  // Depth at which w's canonical form appears; nullopt means "exceeds radius",
  // never a silent fallback.
  std::optional<Int> length(const Word& w) const;

 private:
  int rank_;
  int radius_;
  LatticeGroup lattice_;
  std::unordered_map<std::string, int> dist_;
};

// Geodesic-length oracle over A wr Z^rank with generators {x_i} u {a_i},
// exact for lengths <= radius via meet-in-the-middle: a cached forward
// half-ball from the identity plus a per-query backward half-ball.
class WreathBfsOracle {
 public:
  WreathBfsOracle(int rank, int radius, OracleLimits limits = {.hardRadiusCap = 16});

  int rank() const { return rank_; }
  int radius() const { return radius_; }
  std::size_t stateCount() const { return forward_.size(); }

  std::optional<Int> length(const WreathElement& e) const;

 private:
  int rank_;
  int radius_;
  int forwardRadius_;
  OracleLimits limits_;
  LatticeGroup lattice_;
  std::unordered_map<std::string, int> forward_;
};

std::optional<Int> bfsGeodesicOracleFN(const Word& w, int rank, int radius);
std::optional<Int> bfsGeodesicOracleWreath(const LatticeGroup& B, const WreathElement& e, int radius);

}  // namespace magnus
