#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "core/invariants.hpp"

using namespace surfcalc;

TEST_CASE("bidouble cover invariants") {
  const auto s = bidouble_invariants({2, 3, 2, 3});
  CHECK(s.p_g == 19);
  CHECK(s.chi == 20);
  CHECK(s.K2 == 64);
  CHECK(s.r == 2);
  CHECK(s.e == 176);
  CHECK(s.sigma == -96);
  CHECK(s.simply_connected);

  const auto t = bidouble_invariants({3, 2, 2, 3});
  CHECK(t.p_g == 20);
  CHECK(t.chi == 21);
  CHECK(t.K2 == 72);
  CHECK(t.r == 3);

  SUBCASE("swapping the two branch curves changes nothing") {
    for (long long a = 1; a <= 5; ++a)
      for (long long b = 1; b <= 5; ++b)
        for (long long c = 1; c <= 5; ++c)
          for (long long d = 1; d <= 5; ++d) {
            if (a + c < 3 || b + d < 3) continue;
            CHECK(bidouble_invariants({a, b, c, d}) ==
                  bidouble_invariants({c, d, a, b}));
          }
  }
  SUBCASE("range checks") {
    CHECK_THROWS_AS(bidouble_invariants({1, 1, 1, 1}), Error);
    CHECK_THROWS_AS(bidouble_invariants({0, 3, 2, 3}), Error);
  }
}

TEST_CASE("Noether and index identities hold for every constructor") {
  for (long long a = 1; a <= 6; ++a)
    for (long long b = 1; b <= 6; ++b)
      for (long long c = 1; c <= 6; ++c)
        for (long long d = 1; d <= 6; ++d) {
          if (a + c < 3 || b + d < 3) continue;
          const auto s = bidouble_invariants({a, b, c, d});
          CHECK(s.e == 12 * s.chi - s.K2);
          CHECK(s.sigma == s.K2 - 8 * s.chi);
          CHECK(3 * s.sigma == s.K2 - 2 * s.e);
        }
  for (long long a = 1; a <= 6; ++a)
    for (long long b = 2; b <= 6; ++b)
      for (long long c = 1; c <= 6; ++c) {
        if (a + c < 3) continue;
        const auto s = abc_invariants(a, b, c).surface;
        CHECK(s.e == 12 * s.chi - s.K2);
        CHECK(3 * s.sigma == s.K2 - 2 * s.e);
      }
  for (long long a = 1; a <= 6; ++a)
    for (long long b = 1; b <= 6; ++b) {
      const auto s = manetti_invariants(a, b, 3);
      CHECK(s.e == 12 * s.chi - s.K2);
      CHECK(3 * s.sigma == s.K2 - 2 * s.e);
    }
}

TEST_CASE("abc surfaces") {
  const auto r = abc_invariants(2, 3, 2);
  CHECK(r.surface.chi == 20);
  CHECK(r.surface.K2 == 64);
  CHECK(r.surface.r == 2);
  CHECK(r.surface.sigma == -96);
  CHECK(r.moduli_dimension == 74); // (b+1)(4a+c+3) + 2b(a+c+1) - 8

  SUBCASE("the invariants depend only on b and a+c") {
    for (long long sum = 3; sum <= 20; ++sum)
      for (long long b = 2; b <= 6; ++b) {
        const auto base = abc_invariants(1, b, sum - 1).surface;
        for (long long a = 1; a < sum; ++a) {
          const auto other = abc_invariants(a, b, sum - a).surface;
          CHECK(other.chi == base.chi);
          CHECK(other.K2 == base.K2);
          CHECK(other.r == base.r);
        }
      }
    // but the moduli dimension does not
    CHECK(abc_invariants(2, 3, 3).moduli_dimension !=
          abc_invariants(3, 3, 2).moduli_dimension);
  }
  SUBCASE("agreement with the bidouble formulas on the d = b diagonal") {
    for (long long a = 1; a <= 6; ++a)
      for (long long b = 2; b <= 6; ++b)
        for (long long c = 1; c <= 6; ++c) {
          if (a + c < 3) continue;
          const auto abc = abc_invariants(a, b, c).surface;
          const auto bid = bidouble_invariants({a, b, c, b});
          CHECK(abc.chi == bid.chi);
          CHECK(abc.K2 == bid.K2);
        }
  }
  SUBCASE("moduli dimension applicability follows the rigidity hypotheses") {
    CHECK(abc_invariants(14, 8, 6).moduli_dimension_applicable);  // k = 2 works
    CHECK_FALSE(abc_invariants(2, 3, 2).moduli_dimension_applicable);
    CHECK_FALSE(abc_invariants(14, 6, 6).moduli_dimension_applicable); // b < c+2
    CHECK_FALSE(abc_invariants(14, 6, 5).moduli_dimension_applicable); // odd c
  }
}

TEST_CASE("homeomorphism and diffeomorphism tests") {
  const auto s1 = abc_invariants(2, 3, 3).surface;
  const auto s2 = abc_invariants(3, 3, 2).surface;
  CHECK(homeo_test(s1, s2));
  CHECK(homeo_test(s1, s1));
  CHECK(diffeo_obstruction(s1, s2) == DiffeoVerdict::no_obstruction);

  const auto b1 = bidouble_invariants({2, 3, 2, 3});
  const auto b2 = bidouble_invariants({3, 2, 2, 3});
  CHECK_FALSE(homeo_test(b1, b2)); // chi 20 vs 21

  SUBCASE("distinct divisibility obstructs") {
    const auto x = make_surface_invariants(10, 9, 16, 2, true);
    const auto y = make_surface_invariants(10, 9, 16, 6, true);
    CHECK(diffeo_obstruction(x, y) == DiffeoVerdict::obstructed);
    CHECK(homeo_test(x, y)); // parity still agrees
  }
  SUBCASE("non-simply-connected input is rejected") {
    const auto x = make_surface_invariants(10, 9, 16, 2, false);
    CHECK_THROWS_AS(homeo_test(x, x), Error);
  }
  SUBCASE("unknown divisibility is rejected") {
    const auto m = manetti_invariants(4, 5, 10);
    CHECK_THROWS_AS(homeo_test(m, m), Error);
    CHECK_THROWS_AS(diffeo_obstruction(m, m), Error);
  }
}

TEST_CASE("box-principle families") {
  SUBCASE("a single type is trivial") {
    const auto fam = box_family(1);
    CHECK(fam.size() == 1);
  }
  SUBCASE("pairs and triples verify pairwise") {
    for (int h : {2, 3}) {
      const auto fam = box_family(h);
      REQUIRE(fam.size() == static_cast<std::size_t>(h));
      std::vector<SurfaceInvariants> inv;
      for (const auto& t : fam) {
        CHECK(t.a >= 3);
        CHECK(t.b >= 3);
        CHECK(t.c >= 3);
        CHECK(t.d >= 3);
        inv.push_back(bidouble_invariants(t));
      }
      for (std::size_t i = 0; i < inv.size(); ++i)
        for (std::size_t j = i + 1; j < inv.size(); ++j) {
          CHECK(homeo_test(inv[i], inv[j]));
          CHECK(diffeo_obstruction(inv[i], inv[j]) == DiffeoVerdict::obstructed);
        }
    }
  }
  SUBCASE("first pair found, frozen") {
    const auto fam = box_family(2);
    REQUIRE(fam.size() == 2);
    CHECK(fam[0] == BidoubleType{3, 19, 3, 19});
    CHECK(fam[1] == BidoubleType{9, 11, 5, 3});
  }
  SUBCASE("impossible bounds report the frontier") {
    CHECK_THROWS_AS(box_family(40, {.max_exponent = 2, .max_scale = 2}), Error);
    try {
      box_family(40, {.max_exponent = 2, .max_scale = 2});
    } catch (const Error& e) {
      CHECK(e.code() == Errc::not_found_within_bound);
    }
  }
}

TEST_CASE("plurigenera and Hilbert polynomial values") {
  CHECK(plurigenus(20, 64, 2) == 84);
  CHECK(plurigenus(1, 1, 2) == 2);
  CHECK_THROWS_AS(plurigenus(20, 0, 2), Error);
  CHECK_THROWS_AS(plurigenus(20, 64, 1), Error);

  CHECK(hilbert_5canonical(20, 64, 1) == 660);
  CHECK(hilbert_5canonical(1, 1, 1) == 11);
  for (long long m = 1; m <= 6; ++m)
    CHECK(hilbert_5canonical(20, 64, m) == plurigenus(20, 64, 5 * m));
}

TEST_CASE("Manetti surface invariants") {
  const auto s = manetti_invariants(4, 5, 10);
  CHECK(s.K2 == 166);
  CHECK(s.chi == 37);
  CHECK(s.simply_connected);
  CHECK_FALSE(s.r.has_value());

  SUBCASE("each triple point lowers K^2 by one and fixes chi") {
    for (long long a = 1; a <= 8; ++a)
      for (long long b = 1; b <= 8; ++b) {
        const auto base = manetti_invariants(a, b, 0);
        for (long long n = 1; n <= 20; ++n) {
          const auto bumped = manetti_invariants(a, b, n);
          CHECK(bumped.K2 == base.K2 - n);
          CHECK(bumped.chi == base.chi);
        }
      }
  }
  SUBCASE("simply connected unless both parameters are even") {
    CHECK(manetti_invariants(4, 5, 0).simply_connected);
    CHECK(manetti_invariants(5, 5, 0).simply_connected);
    CHECK_FALSE(manetti_invariants(4, 6, 0).simply_connected);
  }
}

TEST_CASE("rigidity hypothesis clauses") {
  SUBCASE("odd a fails the parity clause") {
    const auto rep = nondef_hypotheses(3, 6, 6, 2);
    CHECK_FALSE(rep.positive_even_and_large);
    CHECK_FALSE(rep.all());
  }
  SUBCASE("c - k too small fails clause one") {
    const auto rep = nondef_hypotheses(10, 6, 4, 2);
    CHECK_FALSE(rep.positive_even_and_large); // c - k = 2 < 4
    CHECK(rep.a_dominates_c);                 // 10 >= 9
    CHECK(rep.b_exceeds_c);                   // 6 >= 6
    CHECK(rep.iv2);                           // 10 >= 8
    CHECK_FALSE(rep.all());
  }
  SUBCASE("a short of 2c + 1 fails clause two") {
    const auto rep = nondef_hypotheses(12, 8, 6, 2);
    CHECK(rep.positive_even_and_large); // c - k = 4
    CHECK_FALSE(rep.a_dominates_c);     // 12 < 13
    CHECK_FALSE(rep.all());
  }
  SUBCASE("a satisfying quadruple") {
    const auto rep = nondef_hypotheses(14, 8, 6, 2);
    CHECK(rep.positive_even_and_large); // c - k = 4
    CHECK(rep.a_dominates_c);           // 14 >= 13
    CHECK(rep.b_exceeds_c);             // 8 >= 8
    CHECK(rep.iv2);                     // 14 >= 10
    CHECK(rep.all());
  }
}
