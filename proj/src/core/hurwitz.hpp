#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "core/perm.hpp"

namespace surfcalc {

// Ordered tuple of permutations with its monodromy product (factors
// multiplied left to right) cached at construction.
class Factorization {
public:
  explicit Factorization(std::vector<Perm> factors);

  std::size_t size() const { return factors_.size(); }
  int degree() const { return factors_.front().degree(); }
  const Perm& factor(int i) const { return factors_[i - 1]; } // 1-based
  const std::vector<Perm>& factors() const { return factors_; }
  const Perm& product() const { return product_; }

  friend auto operator<=>(const Factorization&, const Factorization&);
  friend bool operator==(const Factorization& a, const Factorization& b) {
    return a.factors_ == b.factors_;
  }

private:
  std::vector<Perm> factors_;
  Perm product_;
};

struct FactorizationHash {
  std::size_t operator()(const Factorization& f) const noexcept;
};

struct Move {
  int index;    // 1 <= index <= m-1
  bool forward; // forward = braid generator, backward = its inverse
  friend bool operator==(const Move&, const Move&) = default;
};

// forward:  (t_i, t_{i+1}) -> (t_i t_{i+1} t_i^-1, t_i)
// backward: (t_i, t_{i+1}) -> (t_{i+1}, t_{i+1}^-1 t_i t_{i+1})
// The product is unchanged either way.
Factorization hurwitz_move(const Factorization& f, int index, bool forward);

// Every factor t is replaced by b t b^-1 (relabelling by b); the product
// is conjugated accordingly.
Factorization simultaneous_conjugate(const Factorization& f, const Perm& b);

Factorization replay(Factorization f, std::span<const Move> path);

struct OrbitReport {
  std::size_t size = 0;
  bool exhausted = false;
  std::vector<Factorization> representatives; // canonical sorted, may be truncated
  bool representatives_truncated = false;
  Perm product;
  std::vector<std::vector<int>> cycle_types; // multiset of factor cycle types, sorted
  std::size_t subgroup_order = 0;            // size of <factors>

  OrbitReport() : product(1) {}
};

struct OrbitOptions {
  std::size_t cap = 1000000;
  bool mod_conjugation = false;
  int threads = 1;
  std::size_t representative_limit = 16;
};

// BFS over single moves; with mod_conjugation every node is replaced by its
// canonical minimal conjugate under the subgroup generated by the factors.
// Output is bit-deterministic regardless of the worker count.
OrbitReport orbit(const Factorization& start, const OrbitOptions& options);

enum class Equivalence { yes, no, unknown };

struct EquivalenceResult {
  Equivalence verdict = Equivalence::unknown;
  std::vector<Move> path; // replayable, only for yes
};

// Hurwitz equivalence decided by BFS from f1; products and cycle-type
// multisets are compared first for fast rejection.
EquivalenceResult equivalent(const Factorization& f1, const Factorization& f2,
                             std::size_t cap);

// Move sequence carrying simultaneous_conjugate(f, t_h) back to f, for a
// factorization whose product is central in the subgroup generated by the
// factors (checked).  The returned path is verified by replay; a replay
// mismatch aborts with ReplayFailed.
std::vector<Move> auroux_path(const Factorization& f, int h);

} // namespace surfcalc
