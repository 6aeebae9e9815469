#pragma once

#include <string>
#include <vector>

#include "core/braid.hpp"
#include "core/orbifold.hpp"
#include "core/perm.hpp"

namespace surfcalc {

// Cycle notation over 1-based points: "(5,4,1)(2,6)", "id" for the
// identity.  Ranges expand ascending: "(4..8)" = "(4,5,6,7,8)".
Perm parse_perm(const std::string& text, int degree);
std::string format_perm(const Perm& p);

// Braid words: "s1 s2^-1 s1"; free words: "g1 g2^-1".  A caret exponent
// repeats (or inverts) the generator.
BraidWord parse_braid(const std::string& text, int strands);
FreeWord parse_freeword(const std::string& text, int rank);
std::string format_braid(const BraidWord& b);
std::string format_freeword(const FreeWord& w);

// Orbifold signatures: "(b; m1,m2,...)", "(b;)" with no branch points.
OrbifoldSignature parse_signature(const std::string& text);
std::string format_signature(const OrbifoldSignature& sig);

std::string format_rational(const Rational& r);

} // namespace surfcalc
