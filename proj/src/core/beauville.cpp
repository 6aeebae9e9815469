#include "core/beauville.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

namespace surfcalc {

GeneratingPair GeneratingPair::from_ac(Perm a, Perm c) {
  if (a.degree() != c.degree())
    fail(Errc::degree_mismatch, "pair members must share a degree");
  Perm b = compose(a.inverse(), c.inverse());
  return GeneratingPair{std::move(a), std::move(c), std::move(b)};
}

ElementSet sigma_set(const GeneratingPair& pair, const ElementSet& group) {
  if (!group.contains(pair.a) || !group.contains(pair.c))
    fail(Errc::member_missing, "group must contain both pair members");

  // Spot-check closedness on a few products; full verification would be
  // quadratic in the group order.
  const std::size_t n = group.size();
  for (std::size_t k = 0; k < std::min<std::size_t>(n, 16); ++k) {
    const Perm prod = compose(group.at(k), group.at((k * 7 + 3) % n));
    if (!group.contains(prod))
      fail(Errc::not_closed, "group is not closed under composition");
  }

  std::unordered_set<Perm, PermHash> sigma;
  for (const Perm* x : {&pair.a, &pair.b, &pair.c}) {
    Perm pow(x->degree());
    const long long ord = x->order();
    for (long long i = 0; i < ord; ++i) {
      for (const auto& g : group) sigma.insert(conjugate(g, pow));
      pow = compose(pow, *x);
    }
  }
  return ElementSet::from_vector(std::vector<Perm>(sigma.begin(), sigma.end()));
}

BeauvilleCertificate is_beauville(const GeneratingPair& pair1,
                                  const GeneratingPair& pair2,
                                  const ElementSet& group) {
  BeauvilleCertificate cert;
  cert.group_order = group.size();
  cert.pair1 = pair1;
  cert.pair2 = pair2;

  auto generates = [&](const GeneratingPair& p) {
    const ElementSet sub =
        closure(ElementSet::from_vector({p.a, p.c}), group.size());
    return sub.size() == group.size();
  };

  cert.checks.generation1 = generates(pair1);
  if (!cert.checks.generation1) {
    cert.failure = "generation1";
    return cert;
  }
  cert.checks.generation2 = generates(pair2);
  if (!cert.checks.generation2) {
    cert.failure = "generation2";
    return cert;
  }

  const ElementSet sigma1 = sigma_set(pair1, group);
  const ElementSet sigma2 = sigma_set(pair2, group);
  cert.sigma1_size = sigma1.size();
  cert.sigma2_size = sigma2.size();

  std::vector<Perm> common;
  std::set_intersection(sigma1.begin(), sigma1.end(), sigma2.begin(), sigma2.end(),
                        std::back_inserter(common));
  cert.checks.disjointness =
      common.size() == 1 && common.front().is_identity();
  if (!cert.checks.disjointness) cert.failure = "disjointness";
  return cert;
}

namespace {

using Vec2 = std::array<int, 2>;

Vec2 add(const Vec2& u, const Vec2& v, int n) {
  return {(u[0] + v[0]) % n, (u[1] + v[1]) % n};
}

// <u> as a set of encoded points x*n + y.
void insert_cyclic(std::set<int>& out, const Vec2& u, int n) {
  Vec2 cur{0, 0};
  do {
    out.insert(cur[0] * n + cur[1]);
    cur = add(cur, u, n);
  } while (cur != Vec2{0, 0});
}

std::set<int> vector_sigma(const Vec2& u, const Vec2& w, int n) {
  std::set<int> out;
  insert_cyclic(out, u, n);
  insert_cyclic(out, w, n);
  insert_cyclic(out, add(u, w, n), n);
  return out;
}

bool generates_full(const Vec2& u, const Vec2& w, int n) {
  const long long det = static_cast<long long>(u[0]) * w[1] -
                        static_cast<long long>(u[1]) * w[0];
  return std::gcd(((det % n) + n) % n, static_cast<long long>(n)) == 1;
}

} // namespace

std::vector<AbelianStructure> search_abelian(int n, int bound) {
  if (n < 2) fail(Errc::out_of_range, "modulus must be >= 2");
  if (n > bound) fail(Errc::bound_exceeded, "modulus exceeds the search bound");

  const Vec2 e1{1, 0}, e2{0, 1};
  const std::set<int> sigma1 = vector_sigma(e1, e2, n);

  std::vector<AbelianStructure> found;
  for (int u0 = 0; u0 < n; ++u0)
    for (int u1 = 0; u1 < n; ++u1)
      for (int w0 = 0; w0 < n; ++w0)
        for (int w1 = 0; w1 < n; ++w1) {
          const Vec2 u{u0, u1}, w{w0, w1};
          if (!generates_full(u, w, n)) continue;
          const std::set<int> sigma2 = vector_sigma(u, w, n);
          std::vector<int> common;
          std::set_intersection(sigma1.begin(), sigma1.end(), sigma2.begin(),
                                sigma2.end(), std::back_inserter(common));
          if (common.size() != 1 || common.front() != 0) continue;
          AbelianStructure s;
          s.n = n;
          s.a1 = e1;
          s.c1 = e2;
          s.a2 = u;
          s.c2 = w;
          s.sigma1_size = sigma1.size();
          s.sigma2_size = sigma2.size();
          found.push_back(s);
        }
  return found; // enumeration order is already canonical
}

Perm regular_translation(int n, const std::array<int, 2>& v) {
  std::vector<int> images(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      images[x * n + y] = ((x + v[0]) % n) * n + (y + v[1]) % n;
  return Perm::from_images(std::move(images));
}

BeauvilleCertificate materialize(const AbelianStructure& s) {
  std::vector<Perm> all;
  all.reserve(static_cast<std::size_t>(s.n) * s.n);
  for (int x = 0; x < s.n; ++x)
    for (int y = 0; y < s.n; ++y) all.push_back(regular_translation(s.n, {x, y}));
  const ElementSet group = ElementSet::from_vector(std::move(all));

  const auto p1 = GeneratingPair::from_ac(regular_translation(s.n, s.a1),
                                          regular_translation(s.n, s.c1));
  const auto p2 = GeneratingPair::from_ac(regular_translation(s.n, s.a2),
                                          regular_translation(s.n, s.c2));
  return is_beauville(p1, p2, group);
}

ConjugatorResult inverting_witness(const GeneratingPair& pair) {
  return pair_conjugator(pair.a, pair.c, pair.a.inverse(), pair.c.inverse());
}

std::array<long long, 3> orders_triple(const GeneratingPair& pair) {
  return {pair.a.order(), pair.b.order(), pair.c.order()};
}

} // namespace surfcalc
