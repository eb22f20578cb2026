#pragma once

#include <memory>

#include "magnus/base_group.hpp"
#include "magnus/flow.hpp"

namespace magnus {

// Free solvable group of degree d >= 2 over a base of degree d-1, in the
// flow normal form: an element is (shadow in the base, flow over Cay(base)),
// equal elements having identical keys. The shadow is the endpoint of any
// word realizing the flow.
//
// Keys look like "[<shadow key>|{<edge>=<value>;...}]" and nest with degree.
class SolvableTowerGroup final : public BaseGroup {
 public:
  explicit SolvableTowerGroup(std::shared_ptr<const BaseGroup> base);

  const BaseGroup& base() const { return *base_; }
  int degree() const override { return base_->degree() + 1; }

  ElemKey mul(const ElemKey& x, Letter l) const override;
  ElemKey inverse(const ElemKey& x) const override;
  ElemKey leftMul(const ElemKey& g, const ElemKey& x) const override;
  Json encode(const ElemKey& x) const override;
  bool hasExactMetric() const override { return false; }  // NP-hard beyond degree 2

  struct Parts {
    ElemKey shadow;
    Flow flow;
  };
  Parts parts(const ElemKey& x) const;
  ElemKey keyOf(const ElemKey& shadow, const Flow& flow) const;

 private:
  std::shared_ptr<const BaseGroup> base_;
};

// The tower S_{d,r}: degree 1 is the lattice Z^r, degree d >= 2 wraps degree d-1.
std::shared_ptr<const BaseGroup> makeSolvableGroup(int rank, int degree);

// Recursive normal form of w in S_{degree,rank}; equal group elements yield
// equal keys.
ElemKey solvableFromWord(const Word& w, const Config& cfg);

}  // namespace magnus
