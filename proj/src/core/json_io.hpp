#pragma once

#include <json.hpp>

#include "core/beauville.hpp"
#include "core/dynkin.hpp"
#include "core/hurwitz.hpp"
#include "core/invariants.hpp"
#include "core/perm.hpp"

namespace surfcalc {

using Json = nlohmann::json;

// Perm: {"degree": n, "cycles": [[...], ...]} with fixed points omitted.
Json perm_to_json(const Perm& p);
Perm perm_from_json(const Json& j);

// ElementSet: sorted array of permutation objects.
Json elementset_to_json(const ElementSet& s);

// Factorization: {"degree": n, "factors": [perm, ...]}.
Json factorization_to_json(const Factorization& f);
Factorization factorization_from_json(const Json& j);

// Move paths: [{"i": k, "dir": "f"|"b"}, ...].
Json path_to_json(const std::vector<Move>& path);
std::vector<Move> path_from_json(const Json& j);

Json orbit_report_to_json(const OrbitReport& report);

// CurveConfig: {"count": k, "edges": [[i, j, mult], ...]} (1-based).
Json curveconfig_to_json(const CurveConfig& cfg);
CurveConfig curveconfig_from_json(const Json& j);

Json certificate_to_json(const BeauvilleCertificate& cert);
Json abelian_structure_to_json(const AbelianStructure& s);

Json surface_invariants_to_json(const SurfaceInvariants& s);

std::string dump_sorted(const Json& j); // compact, keys sorted: stable bytes

} // namespace surfcalc
