#include "magnus/solvable.hpp"

#include "magnus/errors.hpp"

namespace magnus {

namespace {

// Scan s from `from`, returning the index just past the first `stop` found at
// bracket depth 0. Keys use balanced ()[]{} so depth counting is enough.
std::size_t scanTo(const std::string& s, std::size_t from, std::size_t end, char stop) {
  int depth = 0;
  for (std::size_t i = from; i < end; ++i) {
    char c = s[i];
    if (c == '(' || c == '[' || c == '{') ++depth;
    else if (c == ')' || c == ']' || c == '}') --depth;
    else if (c == stop && depth == 0) return i;
  }
  throw StructureError("malformed element key: '" + s + "'");
}

}  // namespace

SolvableTowerGroup::SolvableTowerGroup(std::shared_ptr<const BaseGroup> base)
    : BaseGroup(base->rank(), "[" + base->identity() + "|{}]"), base_(std::move(base)) {}

ElemKey SolvableTowerGroup::keyOf(const ElemKey& shadow, const Flow& flow) const {
  return "[" + shadow + "|" + flow.key() + "]";
}

SolvableTowerGroup::Parts SolvableTowerGroup::parts(const ElemKey& x) const {
  if (x.size() < 5 || x.front() != '[' || x.back() != ']') {
    throw StructureError("not a degree-" + std::to_string(degree()) + " element key: '" + x + "'");
  }
  std::size_t bar = scanTo(x, 1, x.size() - 1, '|');
  Parts p;
  p.shadow = x.substr(1, bar - 1);
  if (bar + 1 >= x.size() - 1 || x[bar + 1] != '{' || x[x.size() - 2] != '}') {
    throw StructureError("malformed element key: '" + x + "'");
  }
  std::size_t at = bar + 2;              // first char inside {...}
  std::size_t close = x.size() - 2;      // index of '}'
  try {
    while (at < close) {
      std::size_t star = scanTo(x, at, close, '*');
      std::size_t eq = scanTo(x, star + 1, close, '=');
      std::size_t semi = close;
      int depth = 0;
      for (std::size_t i = eq + 1; i < close; ++i) {
        char c = x[i];
        if (c == '(' || c == '[' || c == '{') ++depth;
        else if (c == ')' || c == ']' || c == '}') --depth;
        else if (c == ';' && depth == 0) { semi = i; break; }
      }
      EdgeKey e{x.substr(at, star - at), std::stoi(x.substr(star + 1, eq - star - 1))};
      p.flow.add(e, Int(x.substr(eq + 1, semi - eq - 1)));
      at = semi + 1;
    }
  } catch (const StructureError&) {
    throw;
  } catch (const std::exception&) {  // stoi / cpp_int on garbage digits
    throw StructureError("malformed element key: '" + x + "'");
  }
  return p;
}

ElemKey SolvableTowerGroup::mul(const ElemKey& x, Letter l) const {
  checkLetter(l);
  Parts p = parts(x);
  if (l.sign > 0) {
    p.flow.add(EdgeKey{p.shadow, l.gen}, 1);
    p.shadow = base_->mul(p.shadow, l);
  } else {
    p.shadow = base_->mul(p.shadow, l);
    p.flow.add(EdgeKey{p.shadow, l.gen}, -1);
  }
  return keyOf(p.shadow, p.flow);
}

ElemKey SolvableTowerGroup::inverse(const ElemKey& x) const {
  Parts p = parts(x);
  ElemKey inv = base_->inverse(p.shadow);
  return keyOf(inv, negateFlow(translateFlow(*base_, inv, p.flow)));
}

ElemKey SolvableTowerGroup::leftMul(const ElemKey& g, const ElemKey& x) const {
  Parts pg = parts(g), px = parts(x);
  Flow combined = addFlows(pg.flow, translateFlow(*base_, pg.shadow, px.flow));
  return keyOf(base_->leftMul(pg.shadow, px.shadow), combined);
}

Json SolvableTowerGroup::encode(const ElemKey& x) const {
  Parts p = parts(x);
  Json flowJson = Json::array();
  for (const auto& [e, v] : p.flow.entries()) {
    Json entry;
    entry["base"] = base_->encode(e.base);
    entry["gen"] = e.gen;
    entry["flow"] = (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
                        ? Json(v.convert_to<long long>())
                        : Json(v.str());
    flowJson.push_back(std::move(entry));
  }
  Json out;
  out["shadow"] = base_->encode(p.shadow);
  out["flow"] = std::move(flowJson);
  return out;
}

std::shared_ptr<const BaseGroup> makeSolvableGroup(int rank, int degree) {
  if (degree < 1) throw StructureError("degree must be at least 1");
  if (degree == 1) return std::make_shared<LatticeGroup>(rank);
  return std::make_shared<SolvableTowerGroup>(makeSolvableGroup(rank, degree - 1));
}

ElemKey solvableFromWord(const Word& w, const Config& cfg) {
  auto group = makeSolvableGroup(cfg.rank, cfg.degree);
  return evaluateInBase(*group, w);
}

}  // namespace magnus
