#include "magnus/qi.hpp"

#include <algorithm>

#include "magnus/rng.hpp"

namespace magnus {

namespace {

std::optional<bool> lowerOk(const std::optional<Int>& fn, const std::optional<Int>& wreath, int rank) {
  if (!fn || !wreath) return std::nullopt;
  return *fn <= 2 * (rank + 1) * *wreath;
}

std::optional<bool> upperOk(const std::optional<Int>& fn, const std::optional<Int>& wreath) {
  if (!fn || !wreath) return std::nullopt;
  return *wreath <= 3 * *fn;
}

}  // namespace

std::optional<bool> QiRecord::lowerWalkOk() const { return lowerOk(lengthFN, lengthWreathWalk, rank); }
std::optional<bool> QiRecord::lowerCircuitOk() const { return lowerOk(lengthFN, lengthWreathCircuit, rank); }
std::optional<bool> QiRecord::upperWalkOk() const { return upperOk(lengthFN, lengthWreathWalk); }
std::optional<bool> QiRecord::upperCircuitOk() const { return upperOk(lengthFN, lengthWreathCircuit); }

std::optional<bool> QiRecord::lemmaLampFlowOk() const { return sumLamp == sumFlowAbs; }

std::optional<bool> QiRecord::quotientOk() const {
  if (!lengthFN) return std::nullopt;
  return shadowNorm <= *lengthFN;
}

std::optional<bool> QiRecord::oracleFNOk() const {
  if (!oracleFNChecked) return std::nullopt;
  return oracleFN && lengthFN && *oracleFN == *lengthFN;
}

std::optional<bool> QiRecord::oracleWreathOk() const {
  if (!oracleWreathChecked) return std::nullopt;
  return oracleWreath && lengthWreathWalk && *oracleWreath == *lengthWreathWalk;
}

Fraction QiRecord::lowerBound() const {
  return Fraction(lengthFN.value_or(0), 2 * (rank + 1));
}

std::optional<Int> QiRecord::upperBound() const {
  if (!lengthFN) return std::nullopt;
  return 3 * *lengthFN;
}

bool QiRecord::anyViolation() const {
  for (auto check : {lowerWalkOk(), lowerCircuitOk(), upperWalkOk(), upperCircuitOk(), lemmaLampFlowOk(),
                     quotientOk(), oracleFNOk(), oracleWreathOk()}) {
    if (check && !*check) return true;
  }
  return false;
}

QiRecord verifyQI(const Word& w, const CampaignConfig& cfg, const FnBfsOracle* fnOracle,
                  const WreathBfsOracle* wreathOracle) {
  LatticeGroup lattice(cfg.rank);
  QiRecord rec;
  rec.rank = cfg.rank;
  Word reduced = freeReduce(w);
  rec.word = reduced.str();
  rec.reducedLength = reduced.size();

  Flow flow = flowOfWord(lattice, reduced);
  rec.sumFlowAbs = flow.sumAbs();
  rec.shadowNorm = lattice.distance(lattice.identity(), evaluateInBase(lattice, reduced));

  WreathElement embedded = magnusEmbed(lattice, reduced);
  rec.sumLamp = sumLampCosts(embedded);

  auto note = [&rec](const std::string& what, const CapacityError& err) {
    if (!rec.capacityNote.empty()) rec.capacityNote += "; ";
    rec.capacityNote += what + ": " + err.what();
  };
  try {
    rec.lengthFN = geodesicLengthOfFlow(lattice, flow, cfg.steiner);
  } catch (const CapacityError& err) {
    note("lengthFN", err);
  }
  try {
    rec.lengthWreathCircuit = wreathLengthCircuit(lattice, embedded, cfg.tour);
  } catch (const CapacityError& err) {
    note("circuit", err);
  }
  try {
    rec.lengthWreathWalk = wreathLengthWalk(lattice, embedded, cfg.tour);
  } catch (const CapacityError& err) {
    note("walk", err);
  }

  if (fnOracle && rec.lengthFN && *rec.lengthFN <= fnOracle->radius()) {
    rec.oracleFNChecked = true;
    rec.oracleFN = fnOracle->length(reduced);
  }
  if (wreathOracle && rec.lengthWreathWalk && *rec.lengthWreathWalk <= wreathOracle->radius()) {
    rec.oracleWreathChecked = true;
    rec.oracleWreath = wreathOracle->length(embedded);
  }
  return rec;
}

void CampaignReport::finalize() {
  capacityCount = 0;
  oracleMismatches = 0;
  circuitRatioExactlyThree = 0;
  violationCounts.clear();
  minRatioWalk = maxRatioWalk = minRatioCircuit = maxRatioCircuit = std::nullopt;

  std::vector<std::pair<std::string, std::size_t>> counts = {
      {"lowerWalk", 0},   {"lowerCircuit", 0}, {"upperWalk", 0}, {"upperCircuit", 0},
      {"lemmaLampFlow", 0}, {"quotient", 0},
  };
  auto bump = [&counts](const std::string& name, const std::optional<bool>& ok) {
    if (ok && !*ok) {
      for (auto& [n, c] : counts) {
        if (n == name) ++c;
      }
    }
  };
  auto foldRatio = [](std::optional<Fraction>& lo, std::optional<Fraction>& hi, const Fraction& r) {
    if (!lo || r < *lo) lo = r;
    if (!hi || *hi < r) hi = r;
  };

  for (const QiRecord& rec : records) {
    if (!rec.capacityNote.empty()) ++capacityCount;
    bump("lowerWalk", rec.lowerWalkOk());
    bump("lowerCircuit", rec.lowerCircuitOk());
    bump("upperWalk", rec.upperWalkOk());
    bump("upperCircuit", rec.upperCircuitOk());
    bump("lemmaLampFlow", rec.lemmaLampFlowOk());
    bump("quotient", rec.quotientOk());
    if (auto ok = rec.oracleFNOk(); ok && !*ok) ++oracleMismatches;
    if (auto ok = rec.oracleWreathOk(); ok && !*ok) ++oracleMismatches;
    if (rec.lengthFN && *rec.lengthFN > 0) {
      if (rec.lengthWreathWalk) foldRatio(minRatioWalk, maxRatioWalk, Fraction(*rec.lengthWreathWalk, *rec.lengthFN));
      if (rec.lengthWreathCircuit) {
        Fraction ratio(*rec.lengthWreathCircuit, *rec.lengthFN);
        foldRatio(minRatioCircuit, maxRatioCircuit, ratio);
        if (ratio == Fraction(3, 1)) ++circuitRatioExactlyThree;
      }
    }
  }
  violationCounts = std::move(counts);
}

bool CampaignReport::anyFailure() const {
  if (oracleMismatches > 0) return true;
  for (const auto& [name, count] : violationCounts) {
    (void)name;
    if (count > 0) return true;
  }
  return false;
}

CampaignReport runCampaign(const CampaignConfig& cfg) {
  if (cfg.rank < 1) throw RankError("rank must be at least 1");
  if (cfg.degree != 2) throw StructureError("geodesic campaigns run at degree 2");

  std::optional<FnBfsOracle> fnOracle;
  std::optional<WreathBfsOracle> wreathOracle;
  if (cfg.fnOracleRadius > 0) fnOracle.emplace(cfg.rank, cfg.fnOracleRadius);
  if (cfg.wreathOracleRadius > 0) wreathOracle.emplace(cfg.rank, cfg.wreathOracleRadius);

  DetRng rng(cfg.seed);
  CampaignReport report;
  report.config = cfg;
  report.records.reserve(cfg.samples);
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    std::size_t length = static_cast<std::size_t>(rng.below(cfg.maxWordLength + 1));
    Word w = randomReducedWord(rng, cfg.rank, length);
    report.records.push_back(
        verifyQI(w, cfg, fnOracle ? &*fnOracle : nullptr, wreathOracle ? &*wreathOracle : nullptr));
  }
  report.finalize();
  return report;
}

}  // namespace magnus
