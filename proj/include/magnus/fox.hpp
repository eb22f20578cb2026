#pragma once

#include "magnus/ring.hpp"
#include "magnus/word.hpp"

namespace magnus {

// Fox derivative of w with respect to x_gen, projected to Z[B]. Computed in a
// single left-to-right pass: the coefficient of b equals the signed number of
// times the traced path crosses the edge (b, b*x_gen).
RingElement foxDerivative(const BaseGroup& B, const Word& w, int gen);

// Checks the fundamental identity sum_i (dw/dx_i)(x_i - 1) = w - 1 in Z[B].
bool fundamentalIdentityCheck(const BaseGroup& B, const Word& w);

}  // namespace magnus
