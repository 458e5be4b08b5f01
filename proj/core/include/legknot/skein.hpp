#pragma once

#include "legknot/diagram.hpp"
#include "legknot/laurent.hpp"

namespace legknot {

struct SkeinOptions {
  /// Diagrams with more crossings are refused with CrossingLimitExceeded.
  int crossing_limit = 20;
  /// Remove Reidemeister I curls before recursing.
  bool reduce_kinks = true;
};

/// Kauffman polynomial F(a,z) with unknot value 1. A positive curl multiplies
/// the regular-isotopy polynomial by a, and F = a^-w times that polynomial.
LaurentPoly2 kauffman_F(const LinkDiagram& d, const SkeinOptions& opts = {});

/// HOMFLY-PT polynomial with a P(L+) - a^-1 P(L-) = z P(L0) and unknot value 1.
LaurentPoly2 homfly(const LinkDiagram& d, const SkeinOptions& opts = {});

/// F(ia, -iz): sends c a^p z^q to c i^(p-q) a^p z^q. Throws NonRealResult if
/// some term would get an imaginary coefficient.
LaurentPoly2 dubrovnik_transform(const LaurentPoly2& f);

/// Coefficient of the top power of the first variable, as a polynomial in the
/// second. Throws DegreeOfZero on the zero polynomial.
UniPoly leading_a_part(const LaurentPoly2& p);

/// Number of distinct sub-diagrams evaluated by the last call on this thread
/// (for benchmarks and diagnostics).
std::size_t last_skein_memo_size() noexcept;

}  // namespace legknot
