#include "magnus/wreath.hpp"

#include <algorithm>

#include "magnus/errors.hpp"

namespace magnus {

namespace {

bool isZero(const std::vector<Int>& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

void checkLampSize(const BaseGroup& B, const std::vector<Int>& v) {
  if (static_cast<int>(v.size()) != B.rank()) {
    throw StructureError("lamp vector size " + std::to_string(v.size()) + " does not match rank " +
                         std::to_string(B.rank()));
  }
}

}  // namespace

WreathElement WreathElement::identityOf(const BaseGroup& B) {
  WreathElement e;
  e.shadow_ = B.identity();
  return e;
}

WreathElement WreathElement::shadowOnly(const BaseGroup& B, ElemKey shadow) {
  (void)B;
  WreathElement e;
  e.shadow_ = std::move(shadow);
  return e;
}

WreathElement WreathElement::singleLamp(const BaseGroup& B, const ElemKey& at, std::vector<Int> value) {
  checkLampSize(B, value);
  WreathElement e = identityOf(B);
  e.addLamp(at, value);
  return e;
}

void WreathElement::addLamp(const ElemKey& at, const std::vector<Int>& delta) {
  if (isZero(delta)) return;
  auto [it, inserted] = lamps_.try_emplace(at, delta);
  if (!inserted) {
    for (std::size_t i = 0; i < delta.size(); ++i) it->second[i] += delta[i];
    if (isZero(it->second)) lamps_.erase(it);
  }
}

std::string WreathElement::key() const {
  std::string k = shadow_ + "|";
  for (const auto& [at, v] : lamps_) {
    k += at;
    k += ':';
    k += '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) k += ',';
      k += v[i].str();
    }
    k += ");";
  }
  return k;
}

WreathElement wreathMultiply(const BaseGroup& B, const WreathElement& e, const WreathElement& f) {
  WreathElement out;
  out.shadow_ = B.leftMul(e.shadow_, f.shadow_);
  out.lamps_ = e.lamps_;
  for (const auto& [at, v] : f.lamps_) {
    checkLampSize(B, v);
    out.addLamp(B.leftMul(e.shadow_, at), v);
  }
  return out;
}

WreathElement wreathInverse(const BaseGroup& B, const WreathElement& e) {
  WreathElement out;
  out.shadow_ = B.inverse(e.shadow_);
  for (const auto& [at, v] : e.lamps_) {
    std::vector<Int> neg(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
    out.addLamp(B.leftMul(out.shadow_, at), neg);
  }
  return out;
}

WreathElement magnusEmbed(const BaseGroup& B, const Word& w) {
  WreathElement e = WreathElement::identityOf(B);
  ElemKey prefix = B.identity();
  std::vector<Int> unit(B.rank(), 0);
  Word reduced = freeReduce(w);
  for (const Letter& l : reduced.letters()) {
    B.checkLetter(l);
    unit[l.gen - 1] = l.sign;
    if (l.sign > 0) {
      e.addLamp(prefix, unit);
      prefix = B.mul(prefix, l);
    } else {
      prefix = B.mul(prefix, l);
      e.addLamp(prefix, unit);
    }
    unit[l.gen - 1] = 0;
  }
  e.shadow_ = prefix;
  return e;
}

Int sumLampCosts(const WreathElement& e) {
  Int total = 0;
  for (const auto& [at, v] : e.lamps()) {
    for (const Int& x : v) total += absInt(x);
  }
  return total;
}

namespace {

std::vector<Point> lampSupportPoints(const LatticeGroup& B, const WreathElement& e) {
  std::vector<Point> pts;
  pts.reserve(e.lamps().size() + 1);
  for (const auto& [at, v] : e.lamps()) {
    (void)v;
    pts.push_back(B.coords(at));
  }
  pts.push_back(B.coords(B.identity()));
  return pts;
}

}  // namespace

Int wreathLengthCircuit(const LatticeGroup& B, const WreathElement& e, const TourKernelConfig& cfg) {
  Int shadowNorm = B.distance(B.identity(), e.shadow());
  TourResult tour = shortestClosedTour(lampSupportPoints(B, e), {}, cfg);
  return shadowNorm + sumLampCosts(e) + tour.length;
}

Int wreathLengthWalk(const LatticeGroup& B, const WreathElement& e, const TourKernelConfig& cfg) {
  Point origin = B.coords(B.identity());
  Point target = B.coords(e.shadow());
  TourResult walk = shortestWalk(origin, target, lampSupportPoints(B, e), {}, cfg);
  return sumLampCosts(e) + walk.length;
}

}  // namespace magnus
