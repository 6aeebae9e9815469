#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/errors.hpp"

namespace surfcalc {

// Numerical invariants of a minimal algebraic surface.  e and sigma are
// always derived through Noether's formula and the index theorem, and
// both identities are re-checked at construction.
struct SurfaceInvariants {
  long long chi = 0;
  long long p_g = 0;
  long long K2 = 0;
  long long e = 0;
  long long sigma = 0;
  std::optional<long long> r; // divisibility of the canonical class
  bool simply_connected = false;

  friend bool operator==(const SurfaceInvariants&, const SurfaceInvariants&) = default;
};

SurfaceInvariants make_surface_invariants(long long chi, long long p_g, long long K2,
                                          std::optional<long long> r,
                                          bool simply_connected);

// Smooth bidouble cover of the quadric of type (2a,2b),(2c,2d).
struct BidoubleType {
  long long a = 0, b = 0, c = 0, d = 0;
  friend bool operator==(const BidoubleType&, const BidoubleType&) = default;
};

// General type requires a+c >= 3 and b+d >= 3 (OutOfRange otherwise).
SurfaceInvariants bidouble_invariants(const BidoubleType& t);

struct AbcInvariants {
  SurfaceInvariants surface;
  long long moduli_dimension = 0;
  // Set when some even k > 0 satisfies all of the rigidity hypotheses
  // checked by nondef_hypotheses for this (a,b,c).
  bool moduli_dimension_applicable = false;
};

AbcInvariants abc_invariants(long long a, long long b, long long c);

// Oriented homeomorphism test for simply connected minimal surfaces of
// general type: equal chi and K^2 plus matching parity of the canonical
// divisibility.  NotApplicable when a hypothesis is missing.
bool homeo_test(const SurfaceInvariants& s1, const SurfaceInvariants& s2);

enum class DiffeoVerdict { obstructed, no_obstruction };

// The canonical divisibility is a diffeomorphism invariant; distinct r
// obstructs, equal r claims nothing.
DiffeoVerdict diffeo_obstruction(const SurfaceInvariants& s1,
                                 const SurfaceInvariants& s2);

struct BoxBounds {
  int max_exponent = 6; // largest n in the 6^n factorization pool
  int max_scale = 64;   // largest common scaling factor tried
};

// h bidouble types, pairwise homeomorphic but pairwise obstructed from
// being diffeomorphic, all four parameters >= 3 in every type; found by
// scaling distinct-gcd even factorizations of 6^n and equalizing
// a_i b_i + c_i d_i, and re-verified through homeo_test and
// diffeo_obstruction before returning.
std::vector<BidoubleType> box_family(int h, const BoxBounds& bounds = {});

// chi + m(m-1)/2 K^2, m >= 2.
long long plurigenus(long long chi, long long K2, long long m);

// chi + (5m-1)5m/2 K^2; at m = 1 this is the dimension count chi + 10 K^2.
long long hilbert_5canonical(long long chi, long long K2, long long m);

// Bidouble cover of the quadric branched on three (a,b) curves meeting
// in n triple points; r is not known for these surfaces.
SurfaceInvariants manetti_invariants(long long a, long long b, long long n);

struct NondefReport {
  bool positive_even_and_large = false; // a,b,c,k even > 0 with a,b,c-k >= 4
  bool a_dominates_c = false;           // a >= 2c+1
  bool b_exceeds_c = false;             // b >= c+2
  bool iv1 = false;                     // b >= 2a+2k-1
  bool iv2 = false;                     // a >= b+2
  bool all() const {
    return positive_even_and_large && a_dominates_c && b_exceeds_c && (iv1 || iv2);
  }
};

NondefReport nondef_hypotheses(long long a, long long b, long long c, long long k);

} // namespace surfcalc
