#pragma once

#include "surfcc/overlay.hpp"

namespace surfcc {

// One factor of a multitwist / twist word: the twist T_curve^power.
struct TwistFactor {
  CurveDiagram curve;
  int power;  // nonzero
};
using TwistWord = std::vector<TwistFactor>;

// The image of `target` under the n-th power of the Dehn twist about
// `twister` (n > 0 is the right-handed twist).  Both curves must be
// simple; they are put taut and in minimal joint position first, then
// |n| parallel copies of the twister are spliced in at each crossing,
// and the result is normalized.
CurveDiagram dehn_twist(const CurveDiagram& target, const CurveDiagram& twister, int n,
                        const ContractOracle& oracle);

// Left-to-right composition of the factors applied to c.
CurveDiagram apply_twist_word(const TwistWord& w, CurveDiagram c,
                              const ContractOracle& oracle);

// The inverse word: reversed order, negated powers.
TwistWord inverse_twist_word(TwistWord w);

}  // namespace surfcc
