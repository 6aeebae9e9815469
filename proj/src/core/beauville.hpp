#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "core/perm.hpp"

namespace surfcalc {

// Pair of group elements with the third generator derived from
// a b c = identity, i.e. b = a^-1 c^-1.
struct GeneratingPair {
  Perm a, c, b;
  static GeneratingPair from_ac(Perm a, Perm c);
};

// Stabilizer set: all conjugates, by members of `group`, of all powers
// (including the identity power) of a, b and c.
ElementSet sigma_set(const GeneratingPair& pair, const ElementSet& group);

struct BeauvilleChecks {
  bool generation1 = false;
  bool generation2 = false;
  bool disjointness = false;
  bool all() const { return generation1 && generation2 && disjointness; }
};

struct BeauvilleCertificate {
  std::size_t group_order = 0;
  GeneratingPair pair1, pair2;
  std::size_t sigma1_size = 0;
  std::size_t sigma2_size = 0;
  BeauvilleChecks checks;
  std::string failure; // first violated check, empty when valid
  bool valid() const { return checks.all(); }
};

// Unmixed Beauville verification: both pairs must generate `group` and
// their stabilizer sets may meet only in the identity.  Checks are
// evaluated in order and the first failure is named.
BeauvilleCertificate is_beauville(const GeneratingPair& pair1,
                                  const GeneratingPair& pair2,
                                  const ElementSet& group);

// One unmixed structure on (Z/n)^2, stored as vectors.  Canonical
// representatives have pair1 = (e1, e2): the automorphism group acts
// simply transitively on ordered generating pairs, so every equivalence
// class contains exactly one such structure.
struct AbelianStructure {
  int n = 0;
  std::array<int, 2> a1{}, c1{}; // always e1, e2
  std::array<int, 2> a2{}, c2{};
  std::size_t sigma1_size = 0;
  std::size_t sigma2_size = 0;
};

inline constexpr int kAbelianSearchBound = 13;

// Exhaustive search over (Z/n)^2; empty exactly when gcd(n,6) > 1.
std::vector<AbelianStructure> search_abelian(int n, int bound = kAbelianSearchBound);

// Translation by v in the regular action of (Z/n)^2 on n^2 points.
Perm regular_translation(int n, const std::array<int, 2>& v);

// Re-checks a structure through the generic permutation-group verifier
// in the regular representation.
BeauvilleCertificate materialize(const AbelianStructure& s);

// Conjugation witness carrying (a, c) to (a^-1, c^-1); certifies the
// real-structure criterion for triangle covers when found.
ConjugatorResult inverting_witness(const GeneratingPair& pair);

std::array<long long, 3> orders_triple(const GeneratingPair& pair);

} // namespace surfcalc
