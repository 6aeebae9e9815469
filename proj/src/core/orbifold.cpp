#include "core/orbifold.hpp"

namespace surfcalc {

OrbifoldSignature::OrbifoldSignature(long long b, std::vector<long long> orders)
    : genus(b), branch_orders(std::move(orders)) {
  if (genus < 0) fail(Errc::out_of_range, "genus must be nonnegative");
  for (long long m : branch_orders)
    if (m < 2) fail(Errc::out_of_range, "branch orders must be >= 2");
}

const char* group_type_name(GroupType t) noexcept {
  switch (t) {
    case GroupType::elliptic: return "Elliptic";
    case GroupType::parabolic: return "Parabolic";
    case GroupType::hyperbolic: return "Hyperbolic";
  }
  return "?";
}

namespace {

Rational reciprocal_sum(long long m1, long long m2, long long m3) {
  if (m1 < 2 || m2 < 2 || m3 < 2) fail(Errc::out_of_range, "orders must be >= 2");
  return Rational(1, m1) + Rational(1, m2) + Rational(1, m3);
}

} // namespace

GroupType classify_triangle(long long m1, long long m2, long long m3) {
  const Rational s = reciprocal_sum(m1, m2, m3);
  if (s > 1) return GroupType::elliptic;
  if (s == 1) return GroupType::parabolic;
  return GroupType::hyperbolic;
}

long long elliptic_order(long long m1, long long m2, long long m3) {
  const Rational s = reciprocal_sum(m1, m2, m3);
  if (s <= 1) fail(Errc::not_elliptic, "triple is not of elliptic type");
  const Rational order = Rational(2) / (s - 1);
  if (order.denominator() != 1)
    fail(Errc::not_integral, "elliptic order came out non-integral"); // unreachable
  return order.numerator();
}

Rational orbifold_euler(const OrbifoldSignature& sig) {
  Rational e(2 - 2 * sig.genus);
  for (long long m : sig.branch_orders) e -= Rational(m - 1, m);
  return e;
}

GroupType classify_signature(const OrbifoldSignature& sig) {
  const Rational e = orbifold_euler(sig);
  if (e > 0) return GroupType::elliptic;
  if (e == 0) return GroupType::parabolic;
  return GroupType::hyperbolic;
}

long long cover_genus(const OrbifoldSignature& sig, long long group_order) {
  if (group_order < 1) fail(Errc::out_of_range, "group order must be positive");
  const Rational rhs = Rational(group_order) * (-orbifold_euler(sig));
  if (rhs.denominator() != 1)
    fail(Errc::not_integral, "2g - 2 is not an integer for this data");
  const long long two_g_minus_2 = rhs.numerator();
  if ((two_g_minus_2 + 2) % 2 != 0)
    fail(Errc::not_integral, "2g - 2 is odd for this data");
  return (two_g_minus_2 + 2) / 2;
}

IsogenousInvariants isogenous_invariants(long long g1, long long g2,
                                         long long group_order) {
  if (g1 < 2 || g2 < 2) fail(Errc::out_of_range, "both genera must be >= 2");
  if (group_order < 1) fail(Errc::out_of_range, "group order must be positive");
  const Rational e = Rational(4 * (g1 - 1) * (g2 - 1), group_order);
  if (e.denominator() != 1)
    fail(Errc::not_integral, "Euler number is not an integer for this data");
  const Rational chi = e / 4;
  if (chi.denominator() != 1)
    fail(Errc::not_integral, "chi is not an integer for this data");
  return {e.numerator(), chi.numerator(), 8 * chi.numerator()};
}

long long zeuthen_segre_bound(long long g, long long b) {
  return 4 * (g - 1) * (b - 1);
}

long long pencil_singular_fibres(long long e_total, long long e_section,
                                 long long e_base_locus, int dimension) {
  const long long mu = e_total + e_base_locus - 2 * e_section;
  return dimension % 2 == 0 ? mu : -mu;
}

} // namespace surfcalc
