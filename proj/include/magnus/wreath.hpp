#pragma once

#include <map>
#include <vector>

#include "magnus/base_group.hpp"
#include "magnus/tour.hpp"

namespace magnus {

// Element of A wr B with A = Z^rank: a shadow in B plus a finitely supported
// lamp map B -> Z^rank. No stored lamp is the zero vector.
class WreathElement {
 public:
  WreathElement() = default;

  static WreathElement identityOf(const BaseGroup& B);
  static WreathElement shadowOnly(const BaseGroup& B, ElemKey shadow);
  static WreathElement singleLamp(const BaseGroup& B, const ElemKey& at, std::vector<Int> value);

  const ElemKey& shadow() const { return shadow_; }
  const std::map<ElemKey, std::vector<Int>>& lamps() const { return lamps_; }

  void addLamp(const ElemKey& at, const std::vector<Int>& delta);  // prunes zero vectors

  std::string key() const;
  friend bool operator==(const WreathElement&, const WreathElement&) = default;

 private:
  ElemKey shadow_;
  std::map<ElemKey, std::vector<Int>> lamps_;

  friend WreathElement wreathMultiply(const BaseGroup&, const WreathElement&, const WreathElement&);
  friend WreathElement wreathInverse(const BaseGroup&, const WreathElement&);
  friend WreathElement magnusEmbed(const BaseGroup&, const Word&);
};

// Product in B ⋉ A^(B): lamps of the right factor are translated by the left
// shadow, which is exactly what makes the Magnus embedding a homomorphism.
WreathElement wreathMultiply(const BaseGroup& B, const WreathElement& e, const WreathElement& f);
WreathElement wreathInverse(const BaseGroup& B, const WreathElement& e);

// phi(w): shadow = image of w in B; lamp at b = the vector of coefficients of
// b in the projected Fox derivatives of w (equivalently, the flow values on
// the edges leaving b).
WreathElement magnusEmbed(const BaseGroup& B, const Word& w);

// Sum of L1 norms of all lamps; equals the total absolute flow of any word
// mapping to e.
Int sumLampCosts(const WreathElement& e);

// Geodesic-length upper forms over B = Z^rank.
// Circuit variant: |shadow| + lamp costs + shortest closed circuit through
// the lamp support and the identity. Walk variant: lamp costs + shortest
// walk from the identity through the support ending at the shadow; the walk
// variant matches the BFS oracle exactly.
Int wreathLengthCircuit(const LatticeGroup& B, const WreathElement& e, const TourKernelConfig& cfg = {});
Int wreathLengthWalk(const LatticeGroup& B, const WreathElement& e, const TourKernelConfig& cfg = {});

}  // namespace magnus
