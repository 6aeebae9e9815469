#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "core/errors.hpp"

namespace surfcalc {

// Permutation of {1..n} stored as a 0-based image array.  Composition is
// right-to-left throughout: compose(p, q) applies q first.  Values are
// immutable after construction.
class Perm {
public:
  Perm() : Perm(1) {}
  explicit Perm(int degree); // identity

  // images[i] = image of point i, 0-based; must be a bijection.
  static Perm from_images(std::vector<int> images);

  // Disjoint cycles over 1-based points, unlisted points fixed.
  static Perm from_cycles(const std::vector<std::vector<int>>& cycles, int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int apply(int point) const { return images_[point]; } // 0-based
  bool is_identity() const;

  Perm inverse() const;
  long long order() const; // lcm of cycle lengths

  // Canonical cycle decomposition: 1-based, each cycle starts at its
  // smallest point, cycles sorted by first point, fixed points omitted.
  std::vector<std::vector<int>> cycles() const;

  // Partition of the degree by cycle lengths, sorted descending.
  std::vector<int> cycle_type() const;

  const std::vector<int>& images() const { return images_; }

  friend auto operator<=>(const Perm&, const Perm&) = default;

private:
  std::vector<int> images_;
};

Perm compose(const Perm& p, const Perm& q); // p(q(i))
Perm conjugate(const Perm& g, const Perm& x); // g x g^-1
Perm power(const Perm& p, long long k);

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

// Deduplicated set of permutations of a common degree, kept sorted
// lexicographically by image sequence so set-valued results are
// byte-for-byte reproducible.
class ElementSet {
public:
  ElementSet() = default;
  static ElementSet from_vector(std::vector<Perm> members);

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  int degree() const;
  bool contains(const Perm& p) const;
  const Perm& at(std::size_t i) const { return members_[i]; }
  const std::vector<Perm>& members() const { return members_; }

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

private:
  std::vector<Perm> members_;
};

// Subgroup generated by breadth-first multiplication with deduplication.
// Throws CapExceededError (carrying the partial count) once more than
// `cap` distinct elements have been seen.
ElementSet closure(const ElementSet& generators, std::size_t cap);

// Full symmetric group of the given degree, degree <= kConjugatorScanBound.
ElementSet symmetric_group(int degree);

inline constexpr int kConjugatorScanBound = 9;

struct ConjugatorResult {
  std::optional<Perm> witness; // g with g a g^-1 = a2 and g c g^-1 = c2
  // Set for degree-6 inputs: Out(S6) is nontrivial, so a failed scan over
  // inner automorphisms does not rule out an abstract automorphism.
  bool outer_automorphism_caveat = false;
};

// Exhaustive scan of the ambient symmetric group, pruned by cycle-type
// compatibility.  Degrees above kConjugatorScanBound raise DegreeTooLarge.
ConjugatorResult pair_conjugator(const Perm& a, const Perm& c,
                                 const Perm& a2, const Perm& c2);

} // namespace surfcalc
