#include "core/invariants.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <utility>

namespace surfcalc {

namespace {

long long checked(__int128 v, const char* what) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
    fail(Errc::out_of_range, std::string(what) + " overflows 64 bits");
  return static_cast<long long>(v);
}

} // namespace

SurfaceInvariants make_surface_invariants(long long chi, long long p_g, long long K2,
                                          std::optional<long long> r,
                                          bool simply_connected) {
  SurfaceInvariants s;
  s.chi = chi;
  s.p_g = p_g;
  s.K2 = K2;
  s.e = checked(static_cast<__int128>(12) * chi - K2, "Euler number");
  s.sigma = checked(static_cast<__int128>(K2) - static_cast<__int128>(8) * chi, "signature");
  s.r = r;
  s.simply_connected = simply_connected;
  if (3 * s.sigma != s.K2 - 2 * s.e)
    fail(Errc::out_of_range, "index theorem consistency violated"); // guards regressions
  return s;
}

SurfaceInvariants bidouble_invariants(const BidoubleType& t) {
  const auto [a, b, c, d] = t;
  if (a < 1 || b < 1 || c < 1 || d < 1)
    fail(Errc::out_of_range, "bidouble parameters must be positive");
  if (a + c < 3 || b + d < 3)
    fail(Errc::out_of_range, "general type needs a+c >= 3 and b+d >= 3");
  const long long p_g =
      (a - 1) * (b - 1) + (c - 1) * (d - 1) + (a + c - 1) * (b + d - 1);
  const long long chi = 1 + p_g; // q = 0
  const long long K2 = 8 * (a + c - 2) * (b + d - 2);
  const long long r = std::gcd(a + c - 2, b + d - 2);
  return make_surface_invariants(chi, p_g, K2, r, true);
}

AbcInvariants abc_invariants(long long a, long long b, long long c) {
  if (a < 1 || c < 1) fail(Errc::out_of_range, "a and c must be positive");
  if (b < 2) fail(Errc::out_of_range, "b must be >= 2");
  if (a + c < 3) fail(Errc::out_of_range, "a + c must be >= 3");

  const long long chi = 2 * (a + c - 2) * (b - 1) + b * (a + c);
  const long long K2 = 16 * (a + c - 2) * (b - 1);
  const long long r = std::gcd(a + c - 2, 2 * (b - 1));

  AbcInvariants out;
  out.surface = make_surface_invariants(chi, chi - 1, K2, r, true);
  out.moduli_dimension = (b + 1) * (4 * a + c + 3) + 2 * b * (a + c + 1) - 8;
  for (long long k = 2; c - k >= 4; k += 2)
    if (nondef_hypotheses(a, b, c, k).all()) {
      out.moduli_dimension_applicable = true;
      break;
    }
  return out;
}

bool homeo_test(const SurfaceInvariants& s1, const SurfaceInvariants& s2) {
  if (!s1.simply_connected || !s2.simply_connected)
    fail(Errc::not_applicable, "both surfaces must be simply connected");
  if (s1.chi < 2 || s2.chi < 2)
    fail(Errc::not_applicable, "test needs chi >= 2 on both sides");
  if (!s1.r || !s2.r)
    fail(Errc::not_applicable, "canonical divisibility unknown for an input");
  return s1.chi == s2.chi && s1.K2 == s2.K2 && (*s1.r - *s2.r) % 2 == 0;
}

DiffeoVerdict diffeo_obstruction(const SurfaceInvariants& s1,
                                 const SurfaceInvariants& s2) {
  if (!s1.r || !s2.r)
    fail(Errc::not_applicable, "canonical divisibility unknown for an input");
  return *s1.r != *s2.r ? DiffeoVerdict::obstructed : DiffeoVerdict::no_obstruction;
}

namespace {

long long pow_ll(long long base, int exp) {
  long long v = 1;
  for (int i = 0; i < exp; ++i) v = checked(static_cast<__int128>(v) * base, "power");
  return v;
}

struct ScaledPair {
  long long u = 0, v = 0;
};

// Even w, z with w z = -2*delta, 0 <= w <= u-4, |z| <= v-4.
std::optional<std::pair<long long, long long>> split_offsets(long long delta,
                                                             long long u, long long v) {
  if (delta == 0) {
    if (u >= 4 && v >= 4) return std::make_pair(0LL, 0LL);
    return std::nullopt;
  }
  const long long target = 2 * delta;
  for (long long w = 2; w <= u - 4; w += 2) {
    if (target % w != 0) continue;
    const long long z = target / w;
    if (z % 2 == 0 && z <= v - 4) return std::make_pair(w, -z);
  }
  return std::nullopt;
}

} // namespace

std::vector<BidoubleType> box_family(int h, const BoxBounds& bounds) {
  if (h < 1) fail(Errc::out_of_range, "family size must be >= 1");
  if (h == 1) return {BidoubleType{3, 3, 3, 3}};

  for (int n = 2; n <= bounds.max_exponent; ++n) {
    const long long total = pow_ll(6, n);

    // Even unordered factorizations of 6^n, one per distinct gcd, keyed
    // ascending; ties resolved by the smaller first factor.
    std::map<long long, std::pair<long long, long long>> by_gcd;
    for (long long u = 2; u * u <= total; u += 2) {
      if (total % u != 0) continue;
      const long long v = total / u;
      if (v % 2 != 0) continue;
      const long long g = std::gcd(u, v);
      auto it = by_gcd.find(g);
      if (it == by_gcd.end() || u < it->second.first) by_gcd[g] = {u, v};
    }
    if (static_cast<int>(by_gcd.size()) < h) continue;

    std::vector<std::pair<long long, long long>> chosen;
    for (const auto& [g, pair] : by_gcd) {
      chosen.push_back(pair);
      if (static_cast<int>(chosen.size()) == h) break;
    }

    for (int scale = 1; scale <= bounds.max_scale; ++scale) {
      std::vector<ScaledPair> scaled;
      long long key = 0;
      for (const auto& [u, v] : chosen) {
        scaled.push_back({scale * u, scale * v});
        key = std::max(key, scaled.back().u + scaled.back().v);
      }
      std::vector<BidoubleType> family;
      bool ok = true;
      for (const auto& [u, v] : scaled) {
        const long long delta = key - u - v; // even: all of u, v, key are even
        const auto wz = split_offsets(delta, u, v);
        if (!wz) {
          ok = false;
          break;
        }
        const auto [w, z] = *wz;
        family.push_back(BidoubleType{(u + w) / 2 + 1, (v - z) / 2 + 1,
                                      (u - w) / 2 + 1, (v + z) / 2 + 1});
      }
      if (!ok) continue;

      // Re-verify the advertised postcondition before returning.
      std::vector<SurfaceInvariants> inv;
      for (const auto& t : family) {
        if (t.a < 3 || t.b < 3 || t.c < 3 || t.d < 3) {
          ok = false;
          break;
        }
        inv.push_back(bidouble_invariants(t));
      }
      for (std::size_t i = 0; ok && i < inv.size(); ++i)
        for (std::size_t j = i + 1; j < inv.size(); ++j)
          if (!homeo_test(inv[i], inv[j]) ||
              diffeo_obstruction(inv[i], inv[j]) != DiffeoVerdict::obstructed) {
            ok = false;
            break;
          }
      if (ok) return family;
    }
  }
  fail(Errc::not_found_within_bound,
       "no family of size " + std::to_string(h) + " up to 6^" +
           std::to_string(bounds.max_exponent) + " with scale <= " +
           std::to_string(bounds.max_scale));
}

long long plurigenus(long long chi, long long K2, long long m) {
  if (m < 2) fail(Errc::out_of_range, "plurigenus needs m >= 2");
  if (chi < 1 || K2 < 1) fail(Errc::out_of_range, "needs chi >= 1 and K^2 >= 1");
  return checked(chi + static_cast<__int128>(m) * (m - 1) / 2 * K2, "plurigenus");
}

long long hilbert_5canonical(long long chi, long long K2, long long m) {
  if (m < 1) fail(Errc::out_of_range, "needs m >= 1");
  if (chi < 1 || K2 < 1) fail(Errc::out_of_range, "needs chi >= 1 and K^2 >= 1");
  return checked(chi + static_cast<__int128>(5 * m - 1) * (5 * m) / 2 * K2,
                 "Hilbert polynomial value");
}

SurfaceInvariants manetti_invariants(long long a, long long b, long long n) {
  if (a < 1 || b < 1) fail(Errc::out_of_range, "a and b must be positive");
  if (n < 0) fail(Errc::out_of_range, "triple point count must be nonnegative");
  const long long K2 = 18 * a * b - 24 * (a + b) + 32 - n;
  const long long chi = 4 + 3 * (a * b - a - b);
  const bool simply_connected = !(a % 2 == 0 && b % 2 == 0);
  return make_surface_invariants(chi, chi - 1, K2, std::nullopt, simply_connected);
}

NondefReport nondef_hypotheses(long long a, long long b, long long c, long long k) {
  NondefReport rep;
  rep.positive_even_and_large = a > 0 && b > 0 && c > 0 && k > 0 && a % 2 == 0 &&
                                b % 2 == 0 && c % 2 == 0 && k % 2 == 0 && a >= 4 &&
                                b >= 4 && c - k >= 4;
  rep.a_dominates_c = a >= 2 * c + 1;
  rep.b_exceeds_c = b >= c + 2;
  rep.iv1 = b >= 2 * a + 2 * k - 1;
  rep.iv2 = a >= b + 2;
  return rep;
}

} // namespace surfcalc
