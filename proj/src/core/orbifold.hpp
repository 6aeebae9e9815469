#pragma once

#include <vector>

#include "core/errors.hpp"
#include "core/rational.hpp"

namespace surfcalc {

// Genus plus branching orders (b; m_1..m_r).  All arithmetic here is
// exact rational; there is no floating point in this module.
struct OrbifoldSignature {
  long long genus = 0;
  std::vector<long long> branch_orders; // each >= 2, may be empty

  OrbifoldSignature(long long b, std::vector<long long> orders);
};

enum class GroupType { elliptic, parabolic, hyperbolic };

const char* group_type_name(GroupType t) noexcept;

// Elliptic iff 1/m1 + 1/m2 + 1/m3 > 1, parabolic iff = 1, hyperbolic
// iff < 1.
GroupType classify_triangle(long long m1, long long m2, long long m3);

// Order of the finite rotation group of an elliptic triple,
// 2 / (sum 1/m_i - 1); integral for every elliptic triple.
long long elliptic_order(long long m1, long long m2, long long m3);

// 2 - 2b - sum(1 - 1/m_i)
Rational orbifold_euler(const OrbifoldSignature& sig);

// Trichotomy by the sign of the orbifold Euler number, extending the
// triangle classification to arbitrary signatures.
GroupType classify_signature(const OrbifoldSignature& sig);

// Genus forced by 2g - 2 = order * (-orbifold_euler); NotIntegral when
// the data admits no integer solution.
long long cover_genus(const OrbifoldSignature& sig, long long group_order);

struct IsogenousInvariants {
  long long e = 0;
  long long chi = 0;
  long long k2 = 0;
};

// e = 4(g1-1)(g2-1)/|G|, chi = e/4, K^2 = 8 chi for a surface isogenous
// to a product of curves of genera g1, g2 >= 2.
IsogenousInvariants isogenous_invariants(long long g1, long long g2,
                                         long long group_order);

// Lower bound 4(g-1)(b-1) for the Euler number of a fibration with
// fibre genus g over a base of genus b.
long long zeuthen_segre_bound(long long g, long long b);

// Number of singular members of a pencil: mu = (-1)^n (eX + eZ - 2 eY).
long long pencil_singular_fibres(long long e_total, long long e_section,
                                 long long e_base_locus, int dimension);

} // namespace surfcalc
