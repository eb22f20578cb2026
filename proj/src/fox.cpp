#include "magnus/fox.hpp"

#include "magnus/errors.hpp"

namespace magnus {

RingElement foxDerivative(const BaseGroup& B, const Word& w, int gen) {
  if (gen < 1 || gen > B.rank()) {
    throw RankError("derivative with respect to x" + std::to_string(gen) + " outside rank " +
                    std::to_string(B.rank()));
  }
  RingElement d;
  ElemKey prefix = B.identity();
  Word reduced = freeReduce(w);
  for (const Letter& l : reduced.letters()) {
    B.checkLetter(l);
    if (l.gen == gen) {
      if (l.sign > 0) {
        d.add(prefix, 1);
        prefix = B.mul(prefix, l);
      } else {
        prefix = B.mul(prefix, l);
        d.add(prefix, -1);
      }
    } else {
      prefix = B.mul(prefix, l);
    }
  }
  return d;
}

namespace {

// Right multiplication of every support key by the generator x_gen.
RingElement ringRightMulGen(const BaseGroup& B, const RingElement& p, int gen) {
  RingElement out;
  for (const auto& [at, c] : p.terms()) out.add(B.mul(at, Letter{gen, 1}), c);
  return out;
}

}  // namespace

bool fundamentalIdentityCheck(const BaseGroup& B, const Word& w) {
  RingElement lhs;
  for (int g = 1; g <= B.rank(); ++g) {
    RingElement d = foxDerivative(B, w, g);
    lhs = ringAdd(lhs, ringAdd(ringRightMulGen(B, d, g), ringNegate(d)));
  }
  RingElement rhs = RingElement::single(evaluateInBase(B, w), 1);
  rhs.add(B.identity(), -1);
  return lhs == rhs;
}

}  // namespace magnus
