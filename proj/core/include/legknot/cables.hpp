#pragma once

#include <optional>

#include "legknot/diagram.hpp"

namespace legknot {

/// w - m for a braid word on m strands.
int braid_sl(const BraidWord& b);

/// Lower bound on tb of the n-framed double given tb of the knot.
int double_tb_floor(int tb, int n);

/// Replaces each letter by the four-letter band crossing on 2m strands and
/// appends sigma_1^(2n - 2w); the closure is the n-framed double of the
/// closure of b.
BraidWord braid_double(const BraidWord& b, int n);

/// Blackboard 2-parallel of a knot diagram with |n - w| full twists inserted
/// on the copies of the highest-numbered arc. Throws NotAKnot for links and
/// CrossingLimitExceeded when the result would exceed crossing_limit.
LinkDiagram diagram_double(const LinkDiagram& d, int n, int crossing_limit = 200);

/// Upper bound on tb(K) implied by tb(D_n(K)) <= u, if the framing allows one.
std::optional<int> refine_tb_from_cable(int u, int n);

/// Upper bound on sl(K) implied by sl(D_n(K)) <= u; always odd.
int refine_sl_from_cable(int u, int n);

}  // namespace legknot
