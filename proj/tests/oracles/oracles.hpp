#pragma once

// Slow reference implementations used only by the tests. They share the
// library's PD and polynomial types but none of its algorithms.

#include "legknot/diagram.hpp"
#include "legknot/grid.hpp"
#include "legknot/laurent.hpp"

namespace oracle {

/// Kauffman F by plain skein recursion: no memo, no curl removal, no splitting.
legknot::LaurentPoly2 kauffman(const legknot::LinkDiagram& d);

/// HOMFLY-PT by plain skein recursion, a P(L+) - a^-1 P(L-) = z P(L0).
legknot::LaurentPoly2 homfly(const legknot::LinkDiagram& d);

/// Unnormalized Jones polynomial from the bracket state sum, in the grading
/// where the unknot is q + q^-1.
legknot::UniPoly jones_unnormalized(const legknot::LinkDiagram& d);

/// tb of a grid by direct enumeration over every pair of segments.
int grid_tb(const legknot::GridDiagram& g);

}  // namespace oracle
