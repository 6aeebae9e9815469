#include "surfcalc.h"

#include <cstring>
#include <string>

#include "core/beauville.hpp"
#include "core/braid.hpp"
#include "core/dynkin.hpp"
#include "core/hurwitz.hpp"
#include "core/invariants.hpp"
#include "core/json_io.hpp"
#include "core/orbifold.hpp"
#include "core/perm.hpp"
#include "core/text_io.hpp"

using namespace surfcalc;

// Opaque handle definitions: each wraps one core value.
struct sc_perm { Perm value; };
struct sc_elementset { ElementSet value; };
struct sc_braid { BraidWord value; };
struct sc_freeword { FreeWord value; };
struct sc_factorization { Factorization value; };
struct sc_curveconfig { CurveConfig value; };

namespace {

thread_local std::string g_last_error;

sc_status map_errc(Errc code) {
  switch (code) {
    case Errc::degree_mismatch: return SC_ERROR_DEGREE_MISMATCH;
    case Errc::out_of_range: return SC_ERROR_OUT_OF_RANGE;
    case Errc::repeated_point: return SC_ERROR_REPEATED_POINT;
    case Errc::cap_exceeded: return SC_ERROR_CAP_EXCEEDED;
    case Errc::degree_too_large: return SC_ERROR_DEGREE_TOO_LARGE;
    case Errc::rank_mismatch: return SC_ERROR_RANK_MISMATCH;
    case Errc::strand_mismatch: return SC_ERROR_STRAND_MISMATCH;
    case Errc::index_out_of_range: return SC_ERROR_INDEX_OUT_OF_RANGE;
    case Errc::length_mismatch: return SC_ERROR_LENGTH_MISMATCH;
    case Errc::not_central: return SC_ERROR_NOT_CENTRAL;
    case Errc::replay_failed: return SC_ERROR_REPLAY_FAILED;
    case Errc::not_elliptic: return SC_ERROR_NOT_ELLIPTIC;
    case Errc::not_integral: return SC_ERROR_NOT_INTEGRAL;
    case Errc::not_closed: return SC_ERROR_NOT_CLOSED;
    case Errc::member_missing: return SC_ERROR_MEMBER_MISSING;
    case Errc::bound_exceeded: return SC_ERROR_BOUND_EXCEEDED;
    case Errc::disconnected: return SC_ERROR_DISCONNECTED;
    case Errc::not_ade: return SC_ERROR_NOT_ADE;
    case Errc::not_extended: return SC_ERROR_NOT_EXTENDED;
    case Errc::unknown_label: return SC_ERROR_UNKNOWN_LABEL;
    case Errc::not_applicable: return SC_ERROR_NOT_APPLICABLE;
    case Errc::not_found_within_bound: return SC_ERROR_NOT_FOUND_WITHIN_BOUND;
    case Errc::parse_error: return SC_ERROR_PARSE;
  }
  return SC_ERROR_INTERNAL;
}

template <typename Fn>
sc_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return SC_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return map_errc(e.code());
  } catch (const nlohmann::json::exception& e) {
    g_last_error = std::string("ParseError: ") + e.what();
    return SC_ERROR_PARSE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SC_ERROR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

sc_surface_invariants to_c(const SurfaceInvariants& s) {
  sc_surface_invariants out{};
  out.chi = s.chi;
  out.p_g = s.p_g;
  out.k2 = s.K2;
  out.e = s.e;
  out.sigma = s.sigma;
  out.r = s.r.value_or(0);
  out.r_known = s.r.has_value() ? 1 : 0;
  out.simply_connected = s.simply_connected ? 1 : 0;
  return out;
}

SurfaceInvariants from_c(const sc_surface_invariants& s) {
  SurfaceInvariants out;
  out.chi = s.chi;
  out.p_g = s.p_g;
  out.K2 = s.k2;
  out.e = s.e;
  out.sigma = s.sigma;
  if (s.r_known) out.r = s.r;
  out.simply_connected = s.simply_connected != 0;
  return out;
}

} // namespace

extern "C" {

const char* sc_status_name(sc_status status) {
  switch (status) {
    case SC_OK: return "OK";
    case SC_ERROR_DEGREE_MISMATCH: return "DegreeMismatch";
    case SC_ERROR_OUT_OF_RANGE: return "OutOfRange";
    case SC_ERROR_REPEATED_POINT: return "RepeatedPoint";
    case SC_ERROR_CAP_EXCEEDED: return "CapExceeded";
    case SC_ERROR_DEGREE_TOO_LARGE: return "DegreeTooLarge";
    case SC_ERROR_RANK_MISMATCH: return "RankMismatch";
    case SC_ERROR_STRAND_MISMATCH: return "StrandMismatch";
    case SC_ERROR_INDEX_OUT_OF_RANGE: return "IndexOutOfRange";
    case SC_ERROR_LENGTH_MISMATCH: return "LengthMismatch";
    case SC_ERROR_NOT_CENTRAL: return "NotCentral";
    case SC_ERROR_REPLAY_FAILED: return "ReplayFailed";
    case SC_ERROR_NOT_ELLIPTIC: return "NotElliptic";
    case SC_ERROR_NOT_INTEGRAL: return "NotIntegral";
    case SC_ERROR_NOT_CLOSED: return "NotClosed";
    case SC_ERROR_MEMBER_MISSING: return "MemberMissing";
    case SC_ERROR_BOUND_EXCEEDED: return "BoundExceeded";
    case SC_ERROR_DISCONNECTED: return "Disconnected";
    case SC_ERROR_NOT_ADE: return "NotADE";
    case SC_ERROR_NOT_EXTENDED: return "NotExtended";
    case SC_ERROR_UNKNOWN_LABEL: return "UnknownLabel";
    case SC_ERROR_NOT_APPLICABLE: return "NotApplicable";
    case SC_ERROR_NOT_FOUND_WITHIN_BOUND: return "NotFoundWithinBound";
    case SC_ERROR_PARSE: return "ParseError";
    case SC_ERROR_INTERNAL: return "InternalError";
  }
  return "UnknownStatus";
}

const char* sc_last_error(void) { return g_last_error.c_str(); }

void sc_string_free(char* s) { delete[] s; }

/* --- permutations ------------------------------------------------------ */

sc_status sc_perm_parse(const char* cycles, int degree, sc_perm** out) {
  return guarded([&] { *out = new sc_perm{parse_perm(cycles, degree)}; });
}

sc_status sc_perm_identity(int degree, sc_perm** out) {
  return guarded([&] { *out = new sc_perm{Perm(degree)}; });
}

void sc_perm_free(sc_perm* p) { delete p; }

int sc_perm_degree(const sc_perm* p) { return p->value.degree(); }

sc_status sc_perm_compose(const sc_perm* p, const sc_perm* q, sc_perm** out) {
  return guarded([&] { *out = new sc_perm{compose(p->value, q->value)}; });
}

sc_status sc_perm_inverse(const sc_perm* p, sc_perm** out) {
  return guarded([&] { *out = new sc_perm{p->value.inverse()}; });
}

sc_status sc_perm_order(const sc_perm* p, long long* out) {
  return guarded([&] { *out = p->value.order(); });
}

int sc_perm_equal(const sc_perm* p, const sc_perm* q) {
  return p->value == q->value ? 1 : 0;
}

sc_status sc_perm_format(const sc_perm* p, char** out) {
  return guarded([&] { *out = dup_string(format_perm(p->value)); });
}

sc_status sc_perm_to_json(const sc_perm* p, char** out) {
  return guarded([&] { *out = dup_string(dump_sorted(perm_to_json(p->value))); });
}

sc_status sc_closure(const sc_perm* const* generators, size_t count, size_t cap,
                     sc_elementset** out) {
  return guarded([&] {
    std::vector<Perm> gens;
    for (size_t i = 0; i < count; ++i) gens.push_back(generators[i]->value);
    *out = new sc_elementset{closure(ElementSet::from_vector(std::move(gens)), cap)};
  });
}

sc_status sc_symmetric_group(int degree, sc_elementset** out) {
  return guarded([&] { *out = new sc_elementset{symmetric_group(degree)}; });
}

size_t sc_elementset_size(const sc_elementset* s) { return s->value.size(); }

sc_status sc_elementset_get(const sc_elementset* s, size_t index, sc_perm** out) {
  return guarded([&] {
    if (index >= s->value.size())
      fail(Errc::index_out_of_range, "element index out of range");
    *out = new sc_perm{s->value.at(index)};
  });
}

sc_status sc_elementset_to_json(const sc_elementset* s, char** out) {
  return guarded([&] { *out = dup_string(dump_sorted(elementset_to_json(s->value))); });
}

void sc_elementset_free(sc_elementset* s) { delete s; }

sc_status sc_pair_conjugator(const sc_perm* a, const sc_perm* c, const sc_perm* a2,
                             const sc_perm* c2, sc_perm** witness, int* found,
                             int* degree6_caveat) {
  return guarded([&] {
    const auto res = pair_conjugator(a->value, c->value, a2->value, c2->value);
    *found = res.witness.has_value() ? 1 : 0;
    if (degree6_caveat) *degree6_caveat = res.outer_automorphism_caveat ? 1 : 0;
    if (witness) *witness = res.witness ? new sc_perm{*res.witness} : nullptr;
  });
}

/* --- braids ------------------------------------------------------------ */

sc_status sc_braid_parse(const char* text, int strands, sc_braid** out) {
  return guarded([&] { *out = new sc_braid{parse_braid(text, strands)}; });
}

sc_status sc_freeword_parse(const char* text, int rank, sc_freeword** out) {
  return guarded([&] { *out = new sc_freeword{parse_freeword(text, rank)}; });
}

void sc_braid_free(sc_braid* b) { delete b; }
void sc_freeword_free(sc_freeword* w) { delete w; }

sc_status sc_braid_format(const sc_braid* b, char** out) {
  return guarded([&] { *out = dup_string(format_braid(b->value)); });
}

sc_status sc_freeword_format(const sc_freeword* w, char** out) {
  return guarded([&] { *out = dup_string(format_freeword(w->value)); });
}

sc_status sc_artin_apply(const sc_braid* b, const sc_freeword* w, sc_freeword** out) {
  return guarded([&] { *out = new sc_freeword{artin_apply(b->value, w->value)}; });
}

sc_status sc_braid_equal(const sc_braid* b1, const sc_braid* b2, int* out) {
  return guarded([&] { *out = braid_equal(b1->value, b2->value) ? 1 : 0; });
}

sc_status sc_full_twist(int strands, sc_braid** out) {
  return guarded([&] { *out = new sc_braid{full_twist(strands)}; });
}

sc_status sc_coxeter_chain(int length, sc_braid** out) {
  return guarded([&] { *out = new sc_braid{coxeter_chain(length)}; });
}

sc_status sc_braid_permutation(const sc_braid* b, sc_perm** out) {
  return guarded([&] { *out = new sc_perm{braid_to_perm(b->value)}; });
}

/* --- factorizations ----------------------------------------------------- */

sc_status sc_factorization_parse(const char* json, sc_factorization** out) {
  return guarded([&] {
    *out = new sc_factorization{factorization_from_json(Json::parse(json))};
  });
}

void sc_factorization_free(sc_factorization* f) { delete f; }

sc_status sc_factorization_to_json(const sc_factorization* f, char** out) {
  return guarded([&] { *out = dup_string(dump_sorted(factorization_to_json(f->value))); });
}

sc_status sc_factorization_product(const sc_factorization* f, sc_perm** out) {
  return guarded([&] { *out = new sc_perm{f->value.product()}; });
}

sc_status sc_hurwitz_move(const sc_factorization* f, int index, int forward,
                          sc_factorization** out) {
  return guarded([&] {
    *out = new sc_factorization{hurwitz_move(f->value, index, forward != 0)};
  });
}

sc_status sc_simultaneous_conjugate(const sc_factorization* f, const sc_perm* b,
                                    sc_factorization** out) {
  return guarded([&] {
    *out = new sc_factorization{simultaneous_conjugate(f->value, b->value)};
  });
}

sc_status sc_hurwitz_orbit(const sc_factorization* f, size_t cap, int mod_conjugation,
                           int threads, size_t representative_limit, char** report) {
  return guarded([&] {
    OrbitOptions opts;
    opts.cap = cap;
    opts.mod_conjugation = mod_conjugation != 0;
    opts.threads = threads;
    opts.representative_limit = representative_limit;
    *report = dup_string(dump_sorted(orbit_report_to_json(orbit(f->value, opts))));
  });
}

sc_status sc_hurwitz_equivalent(const sc_factorization* f1, const sc_factorization* f2,
                                size_t cap, char** result) {
  return guarded([&] {
    const auto res = equivalent(f1->value, f2->value, cap);
    Json j;
    j["verdict"] = res.verdict == Equivalence::yes      ? "yes"
                   : res.verdict == Equivalence::no     ? "no"
                                                        : "unknown";
    if (res.verdict == Equivalence::yes) j["path"] = path_to_json(res.path);
    *result = dup_string(dump_sorted(j));
  });
}

sc_status sc_auroux_path(const sc_factorization* f, int h, char** path) {
  return guarded([&] {
    *path = dup_string(dump_sorted(path_to_json(auroux_path(f->value, h))));
  });
}

sc_status sc_replay(const sc_factorization* f, const char* path_json,
                    sc_factorization** out) {
  return guarded([&] {
    const auto path = path_from_json(Json::parse(path_json));
    *out = new sc_factorization{replay(f->value, path)};
  });
}

/* --- orbifolds ---------------------------------------------------------- */

sc_status sc_triangle_classify(long long m1, long long m2, long long m3, int* out) {
  return guarded([&] { *out = static_cast<int>(classify_triangle(m1, m2, m3)); });
}

sc_status sc_triangle_order(long long m1, long long m2, long long m3, long long* out) {
  return guarded([&] { *out = elliptic_order(m1, m2, m3); });
}

sc_status sc_orbifold_euler(const char* signature, long long* numerator,
                            long long* denominator) {
  return guarded([&] {
    const Rational e = orbifold_euler(parse_signature(signature));
    *numerator = e.numerator();
    *denominator = e.denominator();
  });
}

sc_status sc_signature_classify(const char* signature, int* out) {
  return guarded([&] {
    *out = static_cast<int>(classify_signature(parse_signature(signature)));
  });
}

sc_status sc_cover_genus(const char* signature, long long group_order, long long* out) {
  return guarded([&] { *out = cover_genus(parse_signature(signature), group_order); });
}

sc_status sc_isogenous_invariants(long long g1, long long g2, long long group_order,
                                  long long* e, long long* chi, long long* k2) {
  return guarded([&] {
    const auto inv = isogenous_invariants(g1, g2, group_order);
    *e = inv.e;
    *chi = inv.chi;
    *k2 = inv.k2;
  });
}

long long sc_zeuthen_segre_bound(long long genus, long long base_genus) {
  return zeuthen_segre_bound(genus, base_genus);
}

long long sc_pencil_singular_fibres(long long e_total, long long e_section,
                                    long long e_base_locus, int dimension) {
  return pencil_singular_fibres(e_total, e_section, e_base_locus, dimension);
}

/* --- Beauville ----------------------------------------------------------- */

sc_status sc_sigma_set(const sc_perm* a, const sc_perm* c, size_t cap,
                       sc_elementset** out) {
  return guarded([&] {
    const auto pair = GeneratingPair::from_ac(a->value, c->value);
    const auto group = closure(ElementSet::from_vector({pair.a, pair.c}), cap);
    *out = new sc_elementset{sigma_set(pair, group)};
  });
}

sc_status sc_beauville_check(const sc_perm* a, const sc_perm* c, const sc_perm* a2,
                             const sc_perm* c2, const sc_perm* const* group_generators,
                             size_t count, size_t cap, char** certificate) {
  return guarded([&] {
    std::vector<Perm> gens;
    for (size_t i = 0; i < count; ++i) gens.push_back(group_generators[i]->value);
    const auto group = closure(ElementSet::from_vector(std::move(gens)), cap);
    const auto cert = is_beauville(GeneratingPair::from_ac(a->value, c->value),
                                   GeneratingPair::from_ac(a2->value, c2->value), group);
    *certificate = dup_string(dump_sorted(certificate_to_json(cert)));
  });
}

sc_status sc_search_abelian(int n, size_t limit, char** result) {
  return guarded([&] {
    const auto found = search_abelian(n);
    Json j;
    j["n"] = n;
    j["count"] = found.size();
    Json arr = Json::array();
    for (size_t i = 0; i < found.size(); ++i) {
      if (limit != 0 && i >= limit) break;
      arr.push_back(abelian_structure_to_json(found[i]));
    }
    j["structures"] = std::move(arr);
    j["truncated"] = limit != 0 && found.size() > limit;
    *result = dup_string(dump_sorted(j));
  });
}

sc_status sc_inverting_witness(const sc_perm* a, const sc_perm* c, sc_perm** witness,
                               int* found, int* degree6_caveat) {
  return guarded([&] {
    const auto res = inverting_witness(GeneratingPair::from_ac(a->value, c->value));
    *found = res.witness.has_value() ? 1 : 0;
    if (degree6_caveat) *degree6_caveat = res.outer_automorphism_caveat ? 1 : 0;
    if (witness) *witness = res.witness ? new sc_perm{*res.witness} : nullptr;
  });
}

sc_status sc_orders_triple(const sc_perm* a, const sc_perm* c, long long out[3]) {
  return guarded([&] {
    const auto ords = orders_triple(GeneratingPair::from_ac(a->value, c->value));
    out[0] = ords[0];
    out[1] = ords[1];
    out[2] = ords[2];
  });
}

/* --- curve configurations ------------------------------------------------ */

sc_status sc_curveconfig_parse(const char* json, sc_curveconfig** out) {
  return guarded([&] {
    *out = new sc_curveconfig{curveconfig_from_json(Json::parse(json))};
  });
}

void sc_curveconfig_free(sc_curveconfig* c) { delete c; }

sc_status sc_dynkin_negative_definite(const sc_curveconfig* c, int* out) {
  return guarded([&] { *out = is_negative_definite(c->value) ? 1 : 0; });
}

namespace {

std::string classify_result_json(const ClassifyResult& res) {
  Json j;
  if (res.label)
    j["label"] = res.label->str();
  else {
    j["label"] = nullptr;
    j["reason"] = res.reason;
  }
  return dump_sorted(j);
}

} // namespace

sc_status sc_dynkin_classify(const sc_curveconfig* c, char** out) {
  return guarded([&] { *out = dup_string(classify_result_json(classify(c->value))); });
}

sc_status sc_dynkin_classify_extended(const sc_curveconfig* c, char** out) {
  return guarded(
      [&] { *out = dup_string(classify_result_json(classify_extended(c->value))); });
}

sc_status sc_fundamental_cycle(const sc_curveconfig* c, char** out) {
  return guarded([&] {
    *out = dup_string(dump_sorted(Json(fundamental_cycle(c->value).coefficients)));
  });
}

sc_status sc_elliptic_divisor(const sc_curveconfig* c, char** out) {
  return guarded([&] {
    *out = dup_string(dump_sorted(Json(elliptic_divisor(c->value).coefficients)));
  });
}

sc_status sc_rdp_data(const char* label, char** out) {
  return guarded([&] {
    const auto data = rdp_data(std::string(label));
    Json j;
    j["equation"] = data.equation;
    j["milnor_number"] = data.milnor_number;
    j["aut_group"] = data.aut_group;
    *out = dup_string(dump_sorted(j));
  });
}

/* --- surface invariants --------------------------------------------------- */

sc_status sc_bidouble_invariants(long long a, long long b, long long c, long long d,
                                 sc_surface_invariants* out) {
  return guarded([&] { *out = to_c(bidouble_invariants({a, b, c, d})); });
}

sc_status sc_abc_invariants(long long a, long long b, long long c,
                            sc_surface_invariants* out, long long* moduli_dimension,
                            int* moduli_dimension_applicable) {
  return guarded([&] {
    const auto res = abc_invariants(a, b, c);
    *out = to_c(res.surface);
    if (moduli_dimension) *moduli_dimension = res.moduli_dimension;
    if (moduli_dimension_applicable)
      *moduli_dimension_applicable = res.moduli_dimension_applicable ? 1 : 0;
  });
}

sc_status sc_manetti_invariants(long long a, long long b, long long n,
                                sc_surface_invariants* out) {
  return guarded([&] { *out = to_c(manetti_invariants(a, b, n)); });
}

sc_status sc_homeo_test(const sc_surface_invariants* s1, const sc_surface_invariants* s2,
                        int* out) {
  return guarded([&] { *out = homeo_test(from_c(*s1), from_c(*s2)) ? 1 : 0; });
}

sc_status sc_diffeo_obstruction(const sc_surface_invariants* s1,
                                const sc_surface_invariants* s2, int* out) {
  return guarded([&] {
    *out = diffeo_obstruction(from_c(*s1), from_c(*s2)) == DiffeoVerdict::obstructed
               ? 1
               : 0;
  });
}

sc_status sc_box_family(int h, int max_exponent, int max_scale, char** out) {
  return guarded([&] {
    BoxBounds bounds;
    if (max_exponent > 0) bounds.max_exponent = max_exponent;
    if (max_scale > 0) bounds.max_scale = max_scale;
    Json arr = Json::array();
    for (const auto& t : box_family(h, bounds)) {
      Json j;
      j["a"] = t.a;
      j["b"] = t.b;
      j["c"] = t.c;
      j["d"] = t.d;
      arr.push_back(std::move(j));
    }
    *out = dup_string(dump_sorted(arr));
  });
}

sc_status sc_plurigenus(long long chi, long long k2, long long m, long long* out) {
  return guarded([&] { *out = plurigenus(chi, k2, m); });
}

sc_status sc_hilbert_5canonical(long long chi, long long k2, long long m,
                                long long* out) {
  return guarded([&] { *out = hilbert_5canonical(chi, k2, m); });
}

sc_status sc_nondef_hypotheses(long long a, long long b, long long c, long long k,
                               char** out) {
  return guarded([&] {
    const auto rep = nondef_hypotheses(a, b, c, k);
    Json j;
    j["all"] = rep.all();
    j["clauses"] = {{"I_positive_even_and_large", rep.positive_even_and_large},
                    {"II_a_dominates_c", rep.a_dominates_c},
                    {"III_b_exceeds_c", rep.b_exceeds_c},
                    {"IV1_b_large", rep.iv1},
                    {"IV2_a_large", rep.iv2}};
    *out = dup_string(dump_sorted(j));
  });
}

} /* extern "C" */
