#pragma once

#include <optional>
#include <string>
#include <vector>

#include "magnus/geodesic.hpp"
#include "magnus/oracle.hpp"
#include "magnus/wreath.hpp"

namespace magnus {

struct CampaignConfig {
  int rank = 2;
  int degree = 2;  // geodesic campaigns are degree-2 only
  std::size_t samples = 100;
  std::size_t maxWordLength = 12;
  std::uint64_t seed = 1;
  int fnOracleRadius = 6;      // 0 disables the cross-check
  int wreathOracleRadius = 8;  // 0 disables the cross-check
  TourKernelConfig tour{};
  SteinerConfig steiner{};
};

// One verified word. Lengths on the wreath side may be missing when a kernel
// cap was hit; the capacity note says which. Pass flags are recomputed from
// the stored numbers on every call, never cached.
struct QiRecord {
  std::string word;  // reduced text
  int rank = 2;
  Int reducedLength{0};
  std::optional<Int> lengthFN;
  std::optional<Int> lengthWreathCircuit;
  std::optional<Int> lengthWreathWalk;
  Int sumFlowAbs{0};
  Int sumLamp{0};
  Int shadowNorm{0};
  bool oracleFNChecked = false;
  bool oracleWreathChecked = false;
  std::optional<Int> oracleFN;
  std::optional<Int> oracleWreath;
  std::string capacityNote;  // empty when all kernels ran

  // lengthFN <= 2(rank+1) * wreath length, compared in exact integers.
  std::optional<bool> lowerWalkOk() const;
  std::optional<bool> lowerCircuitOk() const;
  // wreath length <= 3 * lengthFN.
  std::optional<bool> upperWalkOk() const;
  std::optional<bool> upperCircuitOk() const;
  std::optional<bool> lemmaLampFlowOk() const;  // sumLamp == sum|flow|
  std::optional<bool> quotientOk() const;       // |shadow| <= lengthFN
  std::optional<bool> oracleFNOk() const;
  std::optional<bool> oracleWreathOk() const;

  Fraction lowerBound() const;  // lengthFN / (2(rank+1)), exact
  std::optional<Int> upperBound() const;  // 3 * lengthFN

  bool anyViolation() const;  // a computed check came back false
};

struct CampaignReport {
  CampaignConfig config;
  std::vector<QiRecord> records;

  // Aggregates, recomputed by finalize().
  std::size_t capacityCount = 0;
  std::size_t oracleMismatches = 0;
  std::size_t circuitRatioExactlyThree = 0;
  std::vector<std::pair<std::string, std::size_t>> violationCounts;  // check name -> count
  std::optional<Fraction> minRatioWalk, maxRatioWalk, minRatioCircuit, maxRatioCircuit;

  void finalize();
  bool anyFailure() const;  // any inequality violation or oracle mismatch

  Json toJson() const;
  std::string toCsv() const;
};

QiRecord verifyQI(const Word& w, const CampaignConfig& cfg, const FnBfsOracle* fnOracle = nullptr,
                  const WreathBfsOracle* wreathOracle = nullptr);

// Deterministic given the seed: samples freely-reduced words with length
// uniform in [0, maxWordLength], verifies each, aggregates.
CampaignReport runCampaign(const CampaignConfig& cfg);

}  // namespace magnus
