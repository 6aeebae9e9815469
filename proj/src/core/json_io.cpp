#include "core/json_io.hpp"

#include "core/text_io.hpp"

namespace surfcalc {

namespace {

Json wrap_parse(const char* what, const Json& j, bool want_object = true) {
  if (want_object && !j.is_object())
    fail(Errc::parse_error, std::string(what) + ": expected a JSON object");
  return j;
}

} // namespace

Json perm_to_json(const Perm& p) {
  Json j;
  j["degree"] = p.degree();
  j["cycles"] = p.cycles();
  return j;
}

Perm perm_from_json(const Json& j) {
  wrap_parse("perm", j);
  if (!j.contains("degree"))
    fail(Errc::parse_error, "perm: missing 'degree'");
  const int degree = j.at("degree").get<int>();
  std::vector<std::vector<int>> cycles;
  if (j.contains("cycles")) cycles = j.at("cycles").get<std::vector<std::vector<int>>>();
  return Perm::from_cycles(cycles, degree);
}

Json elementset_to_json(const ElementSet& s) {
  Json arr = Json::array();
  for (const auto& p : s) arr.push_back(perm_to_json(p));
  return arr;
}

Json factorization_to_json(const Factorization& f) {
  Json j;
  j["degree"] = f.degree();
  Json arr = Json::array();
  for (const auto& t : f.factors()) arr.push_back(perm_to_json(t));
  j["factors"] = std::move(arr);
  return j;
}

Factorization factorization_from_json(const Json& j) {
  wrap_parse("factorization", j);
  if (!j.contains("degree") || !j.contains("factors"))
    fail(Errc::parse_error, "factorization: need 'degree' and 'factors'");
  const int degree = j.at("degree").get<int>();
  std::vector<Perm> factors;
  for (const auto& pj : j.at("factors")) {
    if (pj.is_object()) {
      factors.push_back(perm_from_json(pj));
    } else if (pj.is_string()) {
      factors.push_back(parse_perm(pj.get<std::string>(), degree));
    } else {
      fail(Errc::parse_error, "factorization: factors must be perm objects or cycle strings");
    }
    if (factors.back().degree() != degree)
      fail(Errc::degree_mismatch, "factor degree differs from the factorization degree");
  }
  return Factorization(std::move(factors));
}

Json path_to_json(const std::vector<Move>& path) {
  Json arr = Json::array();
  for (const Move& mv : path) {
    Json j;
    j["i"] = mv.index;
    j["dir"] = mv.forward ? "f" : "b";
    arr.push_back(std::move(j));
  }
  return arr;
}

std::vector<Move> path_from_json(const Json& j) {
  if (!j.is_array()) fail(Errc::parse_error, "path: expected a JSON array");
  std::vector<Move> path;
  for (const auto& mj : j) {
    wrap_parse("move", mj);
    const std::string dir = mj.at("dir").get<std::string>();
    if (dir != "f" && dir != "b") fail(Errc::parse_error, "move: dir must be 'f' or 'b'");
    path.push_back(Move{mj.at("i").get<int>(), dir == "f"});
  }
  return path;
}

Json orbit_report_to_json(const OrbitReport& report) {
  Json j;
  j["size"] = report.size;
  j["exhausted"] = report.exhausted;
  Json reps = Json::array();
  for (const auto& f : report.representatives) reps.push_back(factorization_to_json(f));
  j["representatives"] = std::move(reps);
  j["representatives_truncated"] = report.representatives_truncated;
  Json summary;
  summary["product"] = perm_to_json(report.product);
  summary["cycle_types"] = report.cycle_types;
  summary["subgroup_order"] = report.subgroup_order;
  j["invariant_summary"] = std::move(summary);
  return j;
}

Json curveconfig_to_json(const CurveConfig& cfg) {
  Json j;
  j["count"] = cfg.count();
  Json edges = Json::array();
  for (const auto& e : cfg.edges()) edges.push_back({e.a, e.b, e.multiplicity});
  j["edges"] = std::move(edges);
  return j;
}

CurveConfig curveconfig_from_json(const Json& j) {
  wrap_parse("curve config", j);
  if (!j.contains("count") || !j.contains("edges"))
    fail(Errc::parse_error, "curve config: need 'count' and 'edges'");
  std::vector<CurveEdge> edges;
  for (const auto& ej : j.at("edges")) {
    if (!ej.is_array() || ej.size() < 2 || ej.size() > 3)
      fail(Errc::parse_error, "curve config: edges are [i, j] or [i, j, mult]");
    CurveEdge e;
    e.a = ej.at(0).get<int>();
    e.b = ej.at(1).get<int>();
    e.multiplicity = ej.size() == 3 ? ej.at(2).get<int>() : 1;
    edges.push_back(e);
  }
  return CurveConfig(j.at("count").get<int>(), std::move(edges));
}

Json certificate_to_json(const BeauvilleCertificate& cert) {
  auto pair_json = [](const GeneratingPair& p) {
    Json j;
    j["a"] = perm_to_json(p.a);
    j["b"] = perm_to_json(p.b);
    j["c"] = perm_to_json(p.c);
    return j;
  };
  Json j;
  j["group_order"] = cert.group_order;
  j["pair1"] = pair_json(cert.pair1);
  j["pair2"] = pair_json(cert.pair2);
  j["sigma1_size"] = cert.sigma1_size;
  j["sigma2_size"] = cert.sigma2_size;
  j["checks"] = {{"generation1", cert.checks.generation1},
                 {"generation2", cert.checks.generation2},
                 {"disjointness", cert.checks.disjointness}};
  j["valid"] = cert.valid();
  if (!cert.failure.empty()) j["failure"] = cert.failure;
  return j;
}

Json abelian_structure_to_json(const AbelianStructure& s) {
  Json j;
  j["group"] = "(Z/" + std::to_string(s.n) + ")^2";
  j["group_order"] = s.n * s.n;
  j["pair1"] = {{"a", s.a1}, {"c", s.c1}};
  j["pair2"] = {{"a", s.a2}, {"c", s.c2}};
  j["sigma1_size"] = s.sigma1_size;
  j["sigma2_size"] = s.sigma2_size;
  return j;
}

Json surface_invariants_to_json(const SurfaceInvariants& s) {
  Json j;
  j["chi"] = s.chi;
  j["p_g"] = s.p_g;
  j["K2"] = s.K2;
  j["e"] = s.e;
  j["sigma"] = s.sigma;
  if (s.r)
    j["r"] = *s.r;
  else
    j["r"] = nullptr;
  j["simply_connected"] = s.simply_connected;
  return j;
}

std::string dump_sorted(const Json& j) { return j.dump(); }

} // namespace surfcalc
