#include "core/perm.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <unordered_set>

namespace surfcalc {

Perm::Perm(int degree) {
  if (degree < 1) fail(Errc::out_of_range, "degree must be positive");
  images_.resize(degree);
  std::iota(images_.begin(), images_.end(), 0);
}

Perm Perm::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  if (n < 1) fail(Errc::out_of_range, "degree must be positive");
  std::vector<char> seen(n, 0);
  for (int v : images) {
    if (v < 0 || v >= n) fail(Errc::out_of_range, "image out of range");
    if (seen[v]) fail(Errc::repeated_point, "image sequence is not a bijection");
    seen[v] = 1;
  }
  Perm p(n);
  p.images_ = std::move(images);
  return p;
}

Perm Perm::from_cycles(const std::vector<std::vector<int>>& cycles, int degree) {
  if (degree < 1) fail(Errc::out_of_range, "degree must be positive");
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  std::vector<char> used(degree, 0);
  for (const auto& cyc : cycles) {
    for (int pt : cyc) {
      if (pt < 1 || pt > degree) fail(Errc::out_of_range, "cycle entry out of 1..degree");
      if (used[pt - 1]) fail(Errc::repeated_point, "cycles are not disjoint");
      used[pt - 1] = 1;
    }
    const int len = static_cast<int>(cyc.size());
    for (int k = 0; k < len; ++k)
      images[cyc[k] - 1] = cyc[(k + 1) % len] - 1;
  }
  Perm p(degree);
  p.images_ = std::move(images);
  return p;
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i) inv[images_[i]] = i;
  Perm p(degree());
  p.images_ = std::move(inv);
  return p;
}

namespace {

long long checked_lcm(long long a, long long b) {
  const long long g = std::gcd(a, b);
  const long long q = a / g;
  if (q != 0 && b > (std::numeric_limits<long long>::max)() / q)
    fail(Errc::out_of_range, "order overflows 64 bits");
  return q * b;
}

} // namespace

long long Perm::order() const {
  long long ord = 1;
  std::vector<char> seen(images_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    long long len = 0;
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      ++len;
    }
    ord = checked_lcm(ord, len);
  }
  return ord;
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(images_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) {
      seen[i] = 1;
      continue;
    }
    std::vector<int> cyc;
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      cyc.push_back(j + 1);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::vector<int> Perm::cycle_type() const {
  std::vector<int> lens;
  std::vector<char> seen(images_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end(), std::greater<>());
  return lens;
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree())
    fail(Errc::degree_mismatch, "cannot compose permutations of different degree");
  std::vector<int> images(p.degree());
  for (int i = 0; i < p.degree(); ++i) images[i] = p.apply(q.apply(i));
  return Perm::from_images(std::move(images));
}

Perm conjugate(const Perm& g, const Perm& x) {
  return compose(compose(g, x), g.inverse());
}

Perm power(const Perm& p, long long k) {
  Perm acc(p.degree());
  Perm base = k < 0 ? p.inverse() : p;
  long long e = k < 0 ? -k : k;
  while (e > 0) {
    if (e & 1) acc = compose(acc, base);
    base = compose(base, base);
    e >>= 1;
  }
  return acc;
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (int v : p.images()) h = h * 1099511628211ull + static_cast<std::size_t>(v);
  return h;
}

ElementSet ElementSet::from_vector(std::vector<Perm> members) {
  if (!members.empty()) {
    const int deg = members.front().degree();
    for (const auto& p : members)
      if (p.degree() != deg)
        fail(Errc::degree_mismatch, "element set members must share a degree");
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  ElementSet s;
  s.members_ = std::move(members);
  return s;
}

int ElementSet::degree() const {
  if (members_.empty()) fail(Errc::out_of_range, "empty element set has no degree");
  return members_.front().degree();
}

bool ElementSet::contains(const Perm& p) const {
  return std::binary_search(members_.begin(), members_.end(), p);
}

ElementSet closure(const ElementSet& generators, std::size_t cap) {
  if (generators.empty())
    fail(Errc::out_of_range, "closure needs at least one generator");
  const int deg = generators.degree();

  std::unordered_set<Perm, PermHash> seen;
  std::deque<Perm> frontier;
  const Perm id(deg);
  seen.insert(id);
  frontier.push_back(id);
  for (const auto& g : generators)
    if (seen.insert(g).second) frontier.push_back(g);

  while (!frontier.empty()) {
    Perm cur = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : generators) {
      Perm next = compose(cur, g);
      if (seen.insert(next).second) {
        if (seen.size() > cap)
          throw CapExceededError(seen.size(), "group closure exceeded cap");
        frontier.push_back(std::move(next));
      }
    }
  }
  return ElementSet::from_vector(std::vector<Perm>(seen.begin(), seen.end()));
}

ElementSet symmetric_group(int degree) {
  if (degree < 1) fail(Errc::out_of_range, "degree must be positive");
  if (degree > kConjugatorScanBound)
    fail(Errc::degree_too_large, "symmetric group enumeration bounded at degree 9");
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  std::vector<Perm> all;
  do {
    all.push_back(Perm::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return ElementSet::from_vector(std::move(all));
}

ConjugatorResult pair_conjugator(const Perm& a, const Perm& c,
                                 const Perm& a2, const Perm& c2) {
  const int deg = a.degree();
  if (c.degree() != deg || a2.degree() != deg || c2.degree() != deg)
    fail(Errc::degree_mismatch, "all four permutations must share a degree");
  if (deg > kConjugatorScanBound)
    fail(Errc::degree_too_large, "conjugator scan bounded at degree 9");

  ConjugatorResult result;
  result.outer_automorphism_caveat = (deg == 6);

  // Conjugation preserves cycle type, so incompatible targets need no scan.
  if (a.cycle_type() != a2.cycle_type() || c.cycle_type() != c2.cycle_type())
    return result;

  std::vector<int> images(deg);
  std::iota(images.begin(), images.end(), 0);
  do {
    const Perm g = Perm::from_images(images);
    if (conjugate(g, a) == a2 && conjugate(g, c) == c2) {
      result.witness = g;
      return result;
    }
  } while (std::next_permutation(images.begin(), images.end()));
  return result;
}

} // namespace surfcalc
