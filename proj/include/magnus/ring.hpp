#pragma once

#include <map>

#include "magnus/base_group.hpp"

namespace magnus {

// Finitely supported integer combination over a base group: an element of the
// group ring Z[B], keyed by canonical element keys. No stored coefficient is
// zero.
class RingElement {
 public:
  RingElement() = default;

  static RingElement single(const ElemKey& at, Int coeff);

  void add(const ElemKey& at, const Int& delta);
  Int coeff(const ElemKey& at) const;
  const std::map<ElemKey, Int>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  friend bool operator==(const RingElement&, const RingElement&) = default;

 private:
  std::map<ElemKey, Int> terms_;
};

RingElement ringAdd(const RingElement& p, const RingElement& q);
RingElement ringNegate(const RingElement& p);

// Left multiplication by the group element g: shifts every support key.
RingElement ringTranslate(const BaseGroup& B, const ElemKey& g, const RingElement& p);

// Sum of all coefficients (the augmentation map Z[B] -> Z).
Int augmentation(const RingElement& p);

}  // namespace magnus
