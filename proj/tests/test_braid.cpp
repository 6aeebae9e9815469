#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "core/braid.hpp"
#include "core/text_io.hpp"

using namespace surfcalc;

namespace {

BraidWord random_braid(std::mt19937& rng, int strands, int length) {
  std::vector<int> letters;
  for (int k = 0; k < length; ++k) {
    const int i = 1 + static_cast<int>(rng() % (strands - 1));
    letters.push_back(rng() % 2 ? i : -i);
  }
  return BraidWord::from_letters(strands, std::move(letters));
}

FreeWord random_word(std::mt19937& rng, int rank, int length) {
  std::vector<int> letters;
  for (int k = 0; k < length; ++k) {
    const int i = 1 + static_cast<int>(rng() % rank);
    letters.push_back(rng() % 2 ? i : -i);
  }
  return FreeWord::from_letters(rank, std::move(letters));
}

FreeWord basis_product(int rank) {
  std::vector<int> letters(rank);
  std::iota(letters.begin(), letters.end(), 1);
  return FreeWord::from_letters(rank, std::move(letters));
}

} // namespace

TEST_CASE("free word multiplication reduces freely") {
  const int rank = 3;
  const FreeWord g1 = FreeWord::generator(rank, 1);
  CHECK(multiply(g1, g1.inverse()).empty());

  const FreeWord g1g2 = parse_freeword("g1 g2", rank);
  CHECK(multiply(g1, FreeWord::generator(rank, 2)) == g1g2);

  const FreeWord left = parse_freeword("g1 g2^-1", rank);
  const FreeWord right = parse_freeword("g2 g3", rank);
  CHECK(multiply(left, right) == parse_freeword("g1 g3", rank));

  CHECK_THROWS_AS(multiply(FreeWord(2), FreeWord(3)), Error);
}

TEST_CASE("free multiplication is associative and inverses cancel") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const int rank = 2 + static_cast<int>(rng() % 4);
    const FreeWord u = random_word(rng, rank, 6), v = random_word(rng, rank, 6),
                   w = random_word(rng, rank, 6);
    CHECK(multiply(multiply(u, v), w) == multiply(u, multiply(v, w)));
    CHECK(multiply(u, u.inverse()).empty());
  }
}

TEST_CASE("generator action on the geometric basis") {
  const int n = 3;
  const BraidWord s1 = parse_braid("s1", n);
  CHECK(artin_apply(s1, FreeWord::generator(n, 1)) == FreeWord::generator(n, 2));
  CHECK(artin_apply(s1, FreeWord::generator(n, 3)) == FreeWord::generator(n, 3));
  CHECK(artin_apply(s1, FreeWord::generator(n, 2)) == parse_freeword("g2^-1 g1 g2", n));

  const BraidWord s1inv = parse_braid("s1^-1", n);
  CHECK(artin_apply(s1inv, FreeWord::generator(n, 1)) == parse_freeword("g1 g2 g1^-1", n));
  CHECK(artin_apply(s1inv, FreeWord::generator(n, 2)) == FreeWord::generator(n, 1));
}

TEST_CASE("braid words act as automorphisms invertibly") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const BraidWord b = random_braid(rng, n, 8);
    const FreeWord w = random_word(rng, n, 8);
    CHECK(artin_apply(b, artin_apply(b.inverse(), w)) == w);
    CHECK(artin_apply(concat(b.inverse(), b), w) == w);
  }
}

TEST_CASE("the action fixes the product of the basis") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const BraidWord b = random_braid(rng, n, 20);
    CHECK(artin_apply(b, basis_product(n)) == basis_product(n));
  }
}

TEST_CASE("braid_equal decides the defining relations") {
  CHECK(braid_equal(parse_braid("s1 s3", 4), parse_braid("s3 s1", 4)));
  CHECK(braid_equal(parse_braid("s1 s2 s1", 3), parse_braid("s2 s1 s2", 3)));
  CHECK_FALSE(braid_equal(parse_braid("s1", 3), parse_braid("s2", 3)));
  CHECK_THROWS_AS(braid_equal(parse_braid("s1", 3), parse_braid("s1", 4)), Error);

  for (int n = 3; n <= 8; ++n) {
    for (int i = 1; i + 2 <= n - 1; ++i)
      for (int j = i + 2; j <= n - 1; ++j) {
        const auto si = BraidWord::generator(n, i), sj = BraidWord::generator(n, j);
        CHECK(braid_equal(concat(si, sj), concat(sj, si)));
      }
    for (int i = 1; i + 1 <= n - 1; ++i) {
      const auto si = BraidWord::generator(n, i), sj = BraidWord::generator(n, i + 1);
      CHECK(braid_equal(concat(concat(si, sj), si), concat(concat(sj, si), sj)));
    }
  }
}

TEST_CASE("full twist is the expected word and is central") {
  CHECK(full_twist(2).letters() == std::vector<int>{1, 1});
  CHECK(full_twist(3).letters() == std::vector<int>{2, 1, 2, 1, 2, 1});

  for (int d = 2; d <= 6; ++d) {
    const BraidWord delta2 = full_twist(d);
    for (int i = 1; i <= d - 1; ++i) {
      const BraidWord si = BraidWord::generator(d, i);
      CHECK(braid_equal(concat(delta2, si), concat(si, delta2)));
    }
  }
}

TEST_CASE("full twist on 4 strands acts by conjugation with the basis product") {
  const int d = 4;
  const BraidWord delta2 = full_twist(d);
  const FreeWord pi = basis_product(d);
  for (int j = 1; j <= d; ++j) {
    const FreeWord image = artin_apply(delta2, FreeWord::generator(d, j));
    const FreeWord conj = multiply(multiply(pi.inverse(), FreeWord::generator(d, j)), pi);
    CHECK(image == conj);
  }
}

TEST_CASE("chain elements square to the full twist") {
  CHECK(coxeter_chain(1).letters() == std::vector<int>{1});
  CHECK(coxeter_chain(2).letters() == std::vector<int>{1, 2, 1});
  for (int n = 1; n <= 5; ++n) {
    const BraidWord delta = coxeter_chain(n);
    CHECK(braid_equal(concat(delta, delta), full_twist(n + 1)));
  }
}

TEST_CASE("braid_to_perm tracks strand endpoints") {
  CHECK(braid_to_perm(parse_braid("s1", 3)) == parse_perm("(1,2)", 3));
  CHECK(braid_to_perm(full_twist(3)).is_identity());
  CHECK(braid_to_perm(parse_braid("s1 s2", 3)).cycle_type() == std::vector<int>{3});

  std::mt19937 rng(37);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const BraidWord b1 = random_braid(rng, n, 6), b2 = random_braid(rng, n, 6);
    CHECK(braid_to_perm(concat(b1, b2)) ==
          compose(braid_to_perm(b2), braid_to_perm(b1)));
  }
}

TEST_CASE("braid text round-trips") {
  const BraidWord b = parse_braid("s1 s2^-1 s1", 3);
  CHECK(format_braid(b) == "s1 s2^-1 s1");
  CHECK(parse_braid("s1^3", 3).letters() == std::vector<int>{1, 1, 1});
  CHECK_THROWS_AS(parse_braid("s9", 3), Error);
  CHECK(format_freeword(parse_freeword("g1 g1^-1", 2)) == "e");
}
