#pragma once

#include <vector>

#include "core/errors.hpp"
#include "core/perm.hpp"

namespace surfcalc {

// Freely reduced word in the free group on generators g1..g_rank.
// Letters are signed 1-based indices: +i for g_i, -i for g_i^-1.
class FreeWord {
public:
  explicit FreeWord(int rank);
  static FreeWord from_letters(int rank, std::vector<int> letters); // reduces
  static FreeWord generator(int rank, int index, int sign = +1);

  int rank() const { return rank_; }
  const std::vector<int>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }

  FreeWord inverse() const;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;

private:
  int rank_;
  std::vector<int> letters_;
};

FreeWord multiply(const FreeWord& u, const FreeWord& v);

// Word in the braid group on `strands` strands, generators s1..s_{n-1}.
// No normalization is imposed; equality is decided semantically through
// the action on the free group.
class BraidWord {
public:
  explicit BraidWord(int strands);
  static BraidWord from_letters(int strands, std::vector<int> letters);
  static BraidWord generator(int strands, int index, int sign = +1);

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }

  BraidWord inverse() const;

  friend BraidWord concat(const BraidWord& u, const BraidWord& v);

private:
  int strands_;
  std::vector<int> letters_;
};

// Image of w under the free-group automorphism of the braid word; letters
// act left to right (the leftmost letter acts first).  On the geometric
// basis a positive generator s_i sends g_i to g_{i+1} and g_{i+1} to
// g_{i+1}^-1 g_i g_{i+1}, fixing the rest.
FreeWord artin_apply(const BraidWord& b, const FreeWord& w);

// Semantic word problem: equal iff both words act identically on every
// basis generator.  Relies on faithfulness of the classical Artin
// representation of the braid group on the free group.
bool braid_equal(const BraidWord& b1, const BraidWord& b2);

// Full twist on d strands, (s_{d-1} s_{d-2} ... s_1)^d; generates the
// center of the braid group.
BraidWord full_twist(int d);

// Chain element (s_1)(s_2 s_1)...(s_n ... s_1) on n+1 strands; its square
// is the full twist on n+1 strands.
BraidWord coxeter_chain(int n);

// Homomorphic image in the symmetric group, s_i -> (i, i+1).
Perm braid_to_perm(const BraidWord& b);

} // namespace surfcalc
