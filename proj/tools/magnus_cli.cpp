// Command-line surface over the library: Fox derivatives, flows, the Magnus
// embedding, geodesic lengths on both sides, BFS oracles and the QI campaign.
// Exit codes: 0 success, 1 verification/usage failure, 2 kernel capacity.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "magnus/fox.hpp"
#include "magnus/geodesic.hpp"
#include "magnus/json_io.hpp"
#include "magnus/oracle.hpp"
#include "magnus/qi.hpp"
#include "magnus/solvable.hpp"

using namespace magnus;

namespace {

struct CommonOpts {
  int rank = 0;
  int degree = 2;
  std::string format = "json";
  std::string word;
};

void emit(const Json& j) { std::cout << dumpJson(j); }

std::shared_ptr<const BaseGroup> flowBase(const CommonOpts& o) {
  if (o.degree < 2) throw StructureError("this command needs degree >= 2 (flows live over the level below)");
  return makeSolvableGroup(o.rank, o.degree - 1);
}

LatticeGroup latticeBase(const CommonOpts& o) {
  if (o.degree != 2) {
    throw MetricError("geodesic machinery needs degree 2; higher degrees expose only the BFS oracle");
  }
  return LatticeGroup(o.rank);
}

int runDerive(const CommonOpts& o) {
  auto base = flowBase(o);
  Word w = Word::parse(o.word, o.rank);
  Json derivatives = Json::array();
  for (int g = 1; g <= o.rank; ++g) {
    Json d;
    d["gen"] = g;
    d["terms"] = toJson(*base, foxDerivative(*base, w, g));
    derivatives.push_back(std::move(d));
  }
  Json out;
  out["word"] = freeReduce(w).str();
  out["derivatives"] = std::move(derivatives);
  if (o.format == "text") {
    for (const auto& d : out["derivatives"]) {
      std::cout << "d/dx" << d["gen"] << ": " << d["terms"].dump() << "\n";
    }
  } else {
    emit(out);
  }
  return 0;
}

int runFlow(const CommonOpts& o) {
  auto base = flowBase(o);
  Word w = Word::parse(o.word, o.rank);
  Json out;
  out["word"] = freeReduce(w).str();
  out["flow"] = toJson(*base, flowOfWord(*base, w));
  if (o.format == "text") {
    std::cout << out["flow"].dump() << "\n";
  } else {
    emit(out);
  }
  return 0;
}

int runEmbed(const CommonOpts& o) {
  auto base = flowBase(o);
  Word w = Word::parse(o.word, o.rank);
  Json out;
  out["word"] = freeReduce(w).str();
  out["embedding"] = toJson(*base, magnusEmbed(*base, w));
  if (o.format == "text") {
    std::cout << out["embedding"].dump() << "\n";
  } else {
    emit(out);
  }
  return 0;
}

int runLength(const CommonOpts& o, int kernelCap) {
  LatticeGroup lattice = latticeBase(o);
  Word w = freeReduce(Word::parse(o.word, o.rank));
  TourKernelConfig tour;
  if (kernelCap > 0) tour.maxPoints = kernelCap;
  WreathElement e = magnusEmbed(lattice, w);
  Json out;
  out["word"] = w.str();
  out["reducedLength"] = w.size();
  out["lengthFN"] = intToJson(geodesicLengthFN(lattice, w));
  out["wreathCircuit"] = intToJson(wreathLengthCircuit(lattice, e, tour));
  out["wreathWalk"] = intToJson(wreathLengthWalk(lattice, e, tour));
  if (o.format == "text") {
    std::cout << "lengthFN=" << out["lengthFN"] << " wreathCircuit=" << out["wreathCircuit"]
              << " wreathWalk=" << out["wreathWalk"] << "\n";
  } else {
    emit(out);
  }
  return 0;
}

int runGeodesicWord(const CommonOpts& o) {
  LatticeGroup lattice = latticeBase(o);
  Word w = Word::parse(o.word, o.rank);
  Json report = geodesicReport(lattice, w);
  if (o.format == "text") {
    std::cout << report["geodesic"].get<std::string>() << "\n";
  } else {
    emit(report);
  }
  return 0;
}

int runWordProblem(const CommonOpts& o, const std::string& second) {
  Word u = Word::parse(o.word, o.rank);
  Word v = Word::parse(second, o.rank);
  Config cfg{o.rank, o.degree};
  bool equal = solvableFromWord(u, cfg) == solvableFromWord(v, cfg);
  if (o.format == "text") {
    std::cout << (equal ? "true" : "false") << "\n";
  } else {
    Json out;
    out["u"] = freeReduce(u).str();
    out["v"] = freeReduce(v).str();
    out["equal"] = equal;
    emit(out);
  }
  return 0;
}

Json sentinelLength(const std::optional<Int>& v) {
  return v ? intToJson(*v) : Json("exceeds radius");
}

int runOracle(const CommonOpts& o, int radius) {
  Word w = Word::parse(o.word, o.rank);
  Json out;
  out["word"] = freeReduce(w).str();
  out["degree"] = o.degree;
  out["radius"] = radius;
  if (o.degree == 1) {
    LatticeGroup lattice(o.rank);
    out["length"] = intToJson(lattice.distance(lattice.identity(), evaluateInBase(lattice, w)));
    out["exact"] = true;
  } else if (o.degree == 2) {
    LatticeGroup lattice(o.rank);
    FnBfsOracle fn(o.rank, radius);
    WreathBfsOracle wreath(o.rank, radius);
    out["lengthFN"] = sentinelLength(fn.length(w));
    out["lengthWreath"] = sentinelLength(wreath.length(magnusEmbed(lattice, w)));
  } else {
    auto group = makeSolvableGroup(o.rank, o.degree);
    out["length"] = sentinelLength(group->boundedDistance(group->identity(), evaluateInBase(*group, w), radius));
  }
  if (o.format == "text") {
    std::cout << out.dump() << "\n";
  } else {
    emit(out);
  }
  return 0;
}

int runVerifyQi(const CampaignConfig& cfg, const std::string& format) {
  CampaignReport report = runCampaign(cfg);
  if (format == "csv") {
    std::cout << report.toCsv();
  } else {
    std::cout << dumpJson(report.toJson());
  }
  return report.anyFailure() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computation in free metabelian and free solvable groups"};
  app.require_subcommand(1);

  auto fmtCheck = CLI::IsMember({"json", "text", "csv"});

  CommonOpts derive, flow, embed, length, geo, wp, oracle;
  std::string wpSecond;
  int oracleRadius = 8;
  int lengthKernelCap = 0;

  auto setup = [&](CLI::App* cmd, CommonOpts& o, bool takesWord = true) {
    cmd->add_option("--rank", o.rank, "number of generators (required)")->required();
    cmd->add_option("--degree", o.degree, "solvability class")->capture_default_str();
    cmd->add_option("--format", o.format, "json|csv|text")->capture_default_str()->check(fmtCheck);
    if (takesWord) cmd->add_option("word", o.word, "word in x<k> / x<k>^-1 tokens");
  };

  CLI::App* cDerive = app.add_subcommand("derive", "Fox derivatives projected to the base group");
  setup(cDerive, derive);
  CLI::App* cFlow = app.add_subcommand("flow", "flow function of a word");
  setup(cFlow, flow);
  CLI::App* cEmbed = app.add_subcommand("embed", "image under the Magnus embedding");
  setup(cEmbed, embed);
  CLI::App* cLength = app.add_subcommand("length", "geodesic lengths: quotient and both wreath variants");
  setup(cLength, length);
  cLength->add_option("--kernel-cap", lengthKernelCap, "tour kernel point cap");
  CLI::App* cGeo = app.add_subcommand("geodesic-word", "explicit geodesic via an Euler trail");
  setup(cGeo, geo);
  CLI::App* cWp = app.add_subcommand("wordproblem", "are two words equal in the group?");
  setup(cWp, wp);
  cWp->add_option("second", wpSecond, "second word");
  CLI::App* cOracle = app.add_subcommand("oracle", "BFS geodesic-length oracles");
  setup(cOracle, oracle);
  cOracle->add_option("--oracle-radius", oracleRadius, "search radius")->capture_default_str();

  CampaignConfig qiCfg;
  std::string qiFormat = "json";
  int qiOracleRadius = -1;
  CLI::App* cQi = app.add_subcommand("verify-qi", "seeded campaign checking the embedding bounds");
  cQi->add_option("--rank", qiCfg.rank, "number of generators (required)")->required();
  cQi->add_option("--degree", qiCfg.degree, "must be 2")->capture_default_str();
  cQi->add_option("--format", qiFormat, "json|csv")->capture_default_str()->check(CLI::IsMember({"json", "csv"}));
  cQi->add_option("--seed", qiCfg.seed, "campaign seed")->capture_default_str();
  cQi->add_option("--samples", qiCfg.samples, "number of random words")->capture_default_str();
  cQi->add_option("--max-len", qiCfg.maxWordLength, "maximum word length")->capture_default_str();
  cQi->add_option("--oracle-radius", qiOracleRadius, "cross-check radius for both oracles (0 disables)");
  cQi->add_option("--kernel-cap", qiCfg.tour.maxPoints, "tour kernel point cap")->capture_default_str();
  cQi->add_option("--steiner-cap", qiCfg.steiner.maxGroups, "forest kernel group cap")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (cDerive->parsed()) return runDerive(derive);
    if (cFlow->parsed()) return runFlow(flow);
    if (cEmbed->parsed()) return runEmbed(embed);
    if (cLength->parsed()) return runLength(length, lengthKernelCap);
    if (cGeo->parsed()) return runGeodesicWord(geo);
    if (cWp->parsed()) return runWordProblem(wp, wpSecond);
    if (cOracle->parsed()) return runOracle(oracle, oracleRadius);
    if (cQi->parsed()) {
      if (qiOracleRadius >= 0) {
        qiCfg.fnOracleRadius = qiOracleRadius;
        qiCfg.wreathOracleRadius = qiOracleRadius;
      }
      return runVerifyQi(qiCfg, qiFormat);
    }
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
