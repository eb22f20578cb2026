#include "magnus/ring.hpp"

namespace magnus {

RingElement RingElement::single(const ElemKey& at, Int coeff) {
  RingElement p;
  p.add(at, coeff);
  return p;
}

void RingElement::add(const ElemKey& at, const Int& delta) {
  if (delta == 0) return;
  auto [it, inserted] = terms_.try_emplace(at, delta);
  if (!inserted) {
    it->second += delta;
    if (it->second == 0) terms_.erase(it);
  }
}

Int RingElement::coeff(const ElemKey& at) const {
  auto it = terms_.find(at);
  return it == terms_.end() ? Int(0) : it->second;
}

RingElement ringAdd(const RingElement& p, const RingElement& q) {
  RingElement out = p;
  for (const auto& [at, c] : q.terms()) out.add(at, c);
  return out;
}

RingElement ringNegate(const RingElement& p) {
  RingElement out;
  for (const auto& [at, c] : p.terms()) out.add(at, -c);
  return out;
}

RingElement ringTranslate(const BaseGroup& B, const ElemKey& g, const RingElement& p) {
  RingElement out;
  for (const auto& [at, c] : p.terms()) out.add(B.leftMul(g, at), c);
  return out;
}

Int augmentation(const RingElement& p) {
  Int total = 0;
  for (const auto& [at, c] : p.terms()) total += c;
  return total;
}

}  // namespace magnus
