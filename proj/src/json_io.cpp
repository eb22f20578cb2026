#include "magnus/json_io.hpp"

#include "magnus/geodesic.hpp"

namespace magnus {

Json intToJson(const Int& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max()) {
    return Json(v.convert_to<long long>());
  }
  return Json(v.str());
}

Json toJson(const BaseGroup& B, const RingElement& p) {
  Json arr = Json::array();
  for (const auto& [at, coeff] : p.terms()) {
    Json term;
    term["at"] = B.encode(at);
    term["coeff"] = intToJson(coeff);
    arr.push_back(std::move(term));
  }
  return arr;
}

Json toJson(const BaseGroup& B, const Flow& f) {
  Json arr = Json::array();
  for (const auto& [e, v] : f.entries()) {
    Json entry;
    entry["base"] = B.encode(e.base);
    entry["gen"] = e.gen;
    entry["flow"] = intToJson(v);
    arr.push_back(std::move(entry));
  }
  return arr;
}

Json toJson(const BaseGroup& B, const WreathElement& e) {
  Json lamps = Json::array();
  for (const auto& [at, value] : e.lamps()) {
    Json lamp;
    lamp["at"] = B.encode(at);
    Json vec = Json::array();
    for (const Int& x : value) vec.push_back(intToJson(x));
    lamp["value"] = std::move(vec);
    lamps.push_back(std::move(lamp));
  }
  Json out;
  out["shadow"] = B.encode(e.shadow());
  out["lamps"] = std::move(lamps);
  return out;
}

Json geodesicReport(const LatticeGroup& B, const Word& input, const SteinerConfig& cfg) {
  Flow f = flowOfWord(B, input);
  Json out;
  out["input"] = freeReduce(input).str();
  if (f.empty()) {
    out["length"] = 0;
    out["sumFlow"] = 0;
    out["qEdges"] = 0;
    out["geodesic"] = "";
    return out;
  }
  DeltaStar ds = buildDeltaStar(B, f, cfg);
  out["length"] = intToJson(ds.totalEdgeCount);
  out["sumFlow"] = intToJson(f.sumAbs());
  out["qEdges"] = intToJson(ds.forest.cost);
  out["geodesic"] = eulerWordOfDeltaStar(B, ds).str();
  return out;
}

std::string dumpJson(const Json& j) { return j.dump(2) + "\n"; }

namespace {

Json optIntToJson(const std::optional<Int>& v) { return v ? intToJson(*v) : Json(nullptr); }

Json optBoolToJson(const std::optional<bool>& v) { return v ? Json(*v) : Json(nullptr); }

Json recordToJson(const QiRecord& rec) {
  Json j;
  j["word"] = rec.word;
  j["reducedLength"] = intToJson(rec.reducedLength);
  j["lengthFN"] = optIntToJson(rec.lengthFN);
  j["wreathCircuit"] = optIntToJson(rec.lengthWreathCircuit);
  j["wreathWalk"] = optIntToJson(rec.lengthWreathWalk);
  j["sumFlow"] = intToJson(rec.sumFlowAbs);
  j["sumLamp"] = intToJson(rec.sumLamp);
  j["shadowNorm"] = intToJson(rec.shadowNorm);
  j["lowerBound"] = rec.lowerBound().str();
  j["upperBound"] = optIntToJson(rec.upperBound());
  Json pass;
  pass["lowerWalk"] = optBoolToJson(rec.lowerWalkOk());
  pass["lowerCircuit"] = optBoolToJson(rec.lowerCircuitOk());
  pass["upperWalk"] = optBoolToJson(rec.upperWalkOk());
  pass["upperCircuit"] = optBoolToJson(rec.upperCircuitOk());
  pass["lemmaLampFlow"] = optBoolToJson(rec.lemmaLampFlowOk());
  pass["quotient"] = optBoolToJson(rec.quotientOk());
  j["pass"] = std::move(pass);
  Json oracle;
  oracle["fnChecked"] = rec.oracleFNChecked;
  oracle["fn"] = optIntToJson(rec.oracleFN);
  oracle["fnMatch"] = optBoolToJson(rec.oracleFNOk());
  oracle["wreathChecked"] = rec.oracleWreathChecked;
  oracle["wreath"] = optIntToJson(rec.oracleWreath);
  oracle["wreathMatch"] = optBoolToJson(rec.oracleWreathOk());
  j["oracle"] = std::move(oracle);
  j["capacity"] = rec.capacityNote;
  return j;
}

std::string ratioCell(const std::optional<Int>& num, const std::optional<Int>& fn) {
  if (!num || !fn || *fn == 0) return "NA";
  return Fraction(*num, *fn).str();
}

std::string passCell(const QiRecord& rec) {
  return rec.anyViolation() ? "fail" : "pass";
}

}  // namespace

Json CampaignReport::toJson() const {
  Json cfg;
  cfg["rank"] = config.rank;
  cfg["degree"] = config.degree;
  cfg["samples"] = config.samples;
  cfg["maxWordLength"] = config.maxWordLength;
  cfg["seed"] = config.seed;
  cfg["fnOracleRadius"] = config.fnOracleRadius;
  cfg["wreathOracleRadius"] = config.wreathOracleRadius;
  cfg["tourCap"] = config.tour.maxPoints;
  cfg["steinerGroupCap"] = config.steiner.maxGroups;
  cfg["wordModel"] = "uniform reduced words, length uniform in [0,maxWordLength]";

  Json recs = Json::array();
  for (const QiRecord& rec : records) recs.push_back(recordToJson(rec));

  Json agg;
  agg["samples"] = records.size();
  agg["capacityErrors"] = capacityCount;
  agg["oracleMismatches"] = oracleMismatches;
  Json violations;
  for (const auto& [name, count] : violationCounts) violations[name] = count;
  agg["violations"] = std::move(violations);
  agg["minRatioWalk"] = minRatioWalk ? Json(minRatioWalk->str()) : Json(nullptr);
  agg["maxRatioWalk"] = maxRatioWalk ? Json(maxRatioWalk->str()) : Json(nullptr);
  agg["minRatioCircuit"] = minRatioCircuit ? Json(minRatioCircuit->str()) : Json(nullptr);
  agg["maxRatioCircuit"] = maxRatioCircuit ? Json(maxRatioCircuit->str()) : Json(nullptr);
  agg["circuitRatioExactlyThree"] = circuitRatioExactlyThree;

  Json out;
  out["config"] = std::move(cfg);
  out["aggregate"] = std::move(agg);
  out["records"] = std::move(recs);
  return out;
}

std::string CampaignReport::toCsv() const {
  std::string csv =
      "word,reducedLength,lengthFN,wreathCircuit,wreathWalk,ratioWalk,ratioCircuit,pass\n";
  auto cell = [](const std::optional<Int>& v) { return v ? v->str() : std::string("NA"); };
  for (const QiRecord& rec : records) {
    csv += '"' + rec.word + '"';
    csv += ',' + rec.reducedLength.str();
    csv += ',' + cell(rec.lengthFN);
    csv += ',' + cell(rec.lengthWreathCircuit);
    csv += ',' + cell(rec.lengthWreathWalk);
    csv += ',' + ratioCell(rec.lengthWreathWalk, rec.lengthFN);
    csv += ',' + ratioCell(rec.lengthWreathCircuit, rec.lengthFN);
    csv += ',' + passCell(rec);
    csv += '\n';
  }
  return csv;
}

}  // namespace magnus
