#pragma once

#include "magnus/flow.hpp"
#include "magnus/qi.hpp"
#include "magnus/ring.hpp"
#include "magnus/wreath.hpp"

namespace magnus {

// All encoders emit in canonical key order with insertion-ordered objects, so
// equal inputs serialize to identical bytes. Integers beyond 64 bits fall
// back to decimal strings.
Json intToJson(const Int& v);

Json toJson(const BaseGroup& B, const RingElement& p);   // [{"at":..,"coeff":..}]
Json toJson(const BaseGroup& B, const Flow& f);          // [{"base":..,"gen":..,"flow":..}]
Json toJson(const BaseGroup& B, const WreathElement& e); // {"shadow":..,"lamps":[..]}

// {"input","length","sumFlow","qEdges","geodesic"}
Json geodesicReport(const LatticeGroup& B, const Word& input, const SteinerConfig& cfg = {});

std::string dumpJson(const Json& j);

}  // namespace magnus
