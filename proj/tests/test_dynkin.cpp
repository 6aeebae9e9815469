#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <optional>

#include "core/dynkin.hpp"

using namespace surfcalc;

namespace {

CurveConfig path(int n) {
  std::vector<CurveEdge> edges;
  for (int i = 1; i < n; ++i) edges.push_back({i, i + 1, 1});
  return CurveConfig(n, std::move(edges));
}

// Fork at one end: vertices 1..n-2 form a path, n-1 and n hang off vertex n-2.
CurveConfig d_diagram(int n) {
  std::vector<CurveEdge> edges;
  for (int i = 1; i < n - 2; ++i) edges.push_back({i, i + 1, 1});
  edges.push_back({n - 2, n - 1, 1});
  edges.push_back({n - 2, n, 1});
  return CurveConfig(n, std::move(edges));
}

// Path of length `tail` + arm of 1 or 2 vertices at the branch point.
CurveConfig e_diagram(int n) {
  // 1-2-3-4-5[-6[-7]] with the extra vertex attached to vertex 3
  std::vector<CurveEdge> edges;
  for (int i = 1; i < n - 1; ++i) edges.push_back({i, i + 1, 1});
  edges.push_back({3, n, 1});
  return CurveConfig(n, std::move(edges));
}

CurveConfig cycle(int n) {
  std::vector<CurveEdge> edges;
  for (int i = 1; i < n; ++i) edges.push_back({i, i + 1, 1});
  edges.push_back({1, n, 1});
  return CurveConfig(n, std::move(edges));
}

CurveConfig double_edge() { return CurveConfig(2, {{1, 2, 2}}); }

CurveConfig star(int tips) {
  std::vector<CurveEdge> edges;
  for (int i = 2; i <= tips + 1; ++i) edges.push_back({1, i, 1});
  return CurveConfig(tips + 1, std::move(edges));
}

// Extended D~n: path 1..n-3 with tips n-2, n-1 at vertex 1 and n, n+1 at
// vertex n-3.
CurveConfig d_extended(int n) {
  const int chain = n - 3;
  std::vector<CurveEdge> edges;
  for (int i = 1; i < chain; ++i) edges.push_back({i, i + 1, 1});
  edges.push_back({1, chain + 1, 1});
  edges.push_back({1, chain + 2, 1});
  edges.push_back({chain, chain + 3, 1});
  edges.push_back({chain, chain + 4, 1});
  return CurveConfig(n + 1, std::move(edges));
}

// Extended E~n built by lengthening one arm of the plain diagram.
CurveConfig e_extended(int n) {
  if (n == 6) {
    // arms (2,2,2) around a center: vertices 1-2-C, 3-4-C, 5-6-C
    return CurveConfig(7, {{1, 2, 1}, {2, 7, 1}, {3, 4, 1}, {4, 7, 1}, {5, 6, 1}, {6, 7, 1}});
  }
  if (n == 7) {
    // path of 7 with a tip in the middle: arms (3,3,1)
    std::vector<CurveEdge> edges;
    for (int i = 1; i < 7; ++i) edges.push_back({i, i + 1, 1});
    edges.push_back({4, 8, 1});
    return CurveConfig(8, std::move(edges));
  }
  // E~8: path of 8 with a tip at the third vertex: arms (5,2,1)
  std::vector<CurveEdge> edges;
  for (int i = 1; i < 8; ++i) edges.push_back({i, i + 1, 1});
  edges.push_back({3, 9, 1});
  return CurveConfig(9, std::move(edges));
}

// Brute-force (**) oracle: all positive coefficient vectors with entries
// <= 6 satisfying Z.C_i <= 0 and Z^2 = -2; picks the componentwise
// minimum and insists it is itself a solution.  Row i can be checked as
// soon as every vertex it involves has been assigned, which prunes the
// search enough for nine vertices.
std::optional<std::vector<long long>> minimal_cycle_oracle(const CurveConfig& cfg) {
  const int n = cfg.count();
  std::vector<int> last_needed(n);
  for (int i = 0; i < n; ++i) {
    int last = i;
    for (int j : cfg.neighbors(i)) last = std::max(last, j);
    last_needed[i] = last;
  }

  std::vector<long long> z(n, 1);
  std::vector<std::vector<long long>> solutions;
  auto dfs = [&](auto&& self, int v) -> void {
    if (v == n) {
      if (cfg.self_intersection(z) == -2) solutions.push_back(z);
      return;
    }
    for (z[v] = 1; z[v] <= 6; ++z[v]) {
      bool ok = true;
      for (int i = 0; i <= v && ok; ++i)
        if (last_needed[i] == v && cfg.pairing_row(z, i) > 0) ok = false;
      if (ok) self(self, v + 1);
    }
    z[v] = 1;
  };
  dfs(dfs, 0);

  if (solutions.empty()) return std::nullopt;
  std::vector<long long> lower = solutions.front();
  for (const auto& s : solutions)
    for (int i = 0; i < n; ++i) lower[i] = std::min(lower[i], s[i]);
  if (std::find(solutions.begin(), solutions.end(), lower) == solutions.end())
    return std::nullopt;
  return lower;
}

} // namespace

TEST_CASE("negative definiteness by exact leading minors") {
  CHECK(is_negative_definite(path(2)));  // A2
  CHECK(is_negative_definite(path(1)));  // single curve
  CHECK_FALSE(is_negative_definite(double_edge()));
  CHECK_FALSE(is_negative_definite(cycle(3)));
  for (int n = 1; n <= 9; ++n) CHECK(is_negative_definite(path(n)));
}

TEST_CASE("ADE recognition") {
  CHECK(classify(path(3)).label == DynkinLabel{DynkinSeries::A, 3});
  CHECK(classify(star(3)).label == DynkinLabel{DynkinSeries::D, 4});
  for (int n = 1; n <= 9; ++n)
    CHECK(classify(path(n)).label == DynkinLabel{DynkinSeries::A, n});
  for (int n = 4; n <= 9; ++n)
    CHECK(classify(d_diagram(n)).label == DynkinLabel{DynkinSeries::D, n});
  for (int n = 6; n <= 8; ++n)
    CHECK(classify(e_diagram(n)).label == DynkinLabel{DynkinSeries::E, n});

  SUBCASE("rejections name a forbidden extended subdiagram") {
    const auto triangle = classify(cycle(3));
    CHECK_FALSE(triangle.label.has_value());
    CHECK(triangle.reason.find("A~2") != std::string::npos);

    const auto square = classify(cycle(4));
    CHECK(square.reason.find("A~3") != std::string::npos);

    const auto multi = classify(double_edge());
    CHECK(multi.reason.find("multiple edge") != std::string::npos);
    CHECK(multi.reason.find("A~1") != std::string::npos);

    const auto deg4 = classify(star(4));
    CHECK(deg4.reason.find("D~4") != std::string::npos);

    const auto two_branches = classify(d_extended(5));
    CHECK(two_branches.reason.find("D~") != std::string::npos);

    const auto e6_ext = classify(e_extended(6));
    CHECK(e6_ext.reason.find("E~6") != std::string::npos);
    const auto e7_ext = classify(e_extended(7));
    CHECK(e7_ext.reason.find("E~7") != std::string::npos);
    const auto e8_ext = classify(e_extended(8));
    CHECK(e8_ext.reason.find("E~8") != std::string::npos);
  }

  SUBCASE("degree-4 vertices always report D~4") {
    // any simple connected config with a vertex of degree >= 4
    auto cfg = CurveConfig(6, {{1, 2, 1}, {1, 3, 1}, {1, 4, 1}, {1, 5, 1}, {5, 6, 1}});
    const auto res = classify(cfg);
    CHECK_FALSE(res.label.has_value());
    CHECK(res.reason.find("D~4") != std::string::npos);
  }

  SUBCASE("classified configurations are negative definite") {
    for (const auto& cfg :
         {path(5), d_diagram(6), e_diagram(6), e_diagram(7), e_diagram(8)}) {
      CHECK(classify(cfg).label.has_value());
      CHECK(is_negative_definite(cfg));
    }
  }
}

TEST_CASE("extended recognition") {
  CHECK(classify_extended(cycle(3)).label == DynkinLabel{DynkinSeries::A, 2, true});
  CHECK(classify_extended(double_edge()).label == DynkinLabel{DynkinSeries::A, 1, true});
  CHECK(classify_extended(star(4)).label == DynkinLabel{DynkinSeries::D, 4, true});
  for (int n = 5; n <= 8; ++n)
    CHECK(classify_extended(d_extended(n)).label == DynkinLabel{DynkinSeries::D, n, true});
  for (int n = 6; n <= 8; ++n)
    CHECK(classify_extended(e_extended(n)).label == DynkinLabel{DynkinSeries::E, n, true});

  CHECK_FALSE(classify_extended(path(3)).label.has_value()); // definite, not extended
  CHECK_FALSE(classify_extended(star(5)).label.has_value()); // indefinite
}

TEST_CASE("elliptic divisors generate the radical") {
  CHECK(elliptic_divisor(cycle(3)).coefficients == std::vector<long long>{1, 1, 1});
  CHECK(elliptic_divisor(double_edge()).coefficients == std::vector<long long>{1, 1});
  CHECK(elliptic_divisor(star(4)).coefficients ==
        std::vector<long long>{2, 1, 1, 1, 1});

  for (const auto& cfg : {cycle(5), d_extended(4 + 2), e_extended(6), e_extended(7),
                          e_extended(8)}) {
    const auto f = elliptic_divisor(cfg).coefficients;
    for (int i = 0; i < cfg.count(); ++i) {
      CHECK(f[i] > 0);
      CHECK(cfg.pairing_row(f, i) == 0);
    }
    CHECK(cfg.self_intersection(f) == 0);
  }

  CHECK_THROWS_AS(elliptic_divisor(path(3)), Error);
}

TEST_CASE("fundamental cycles by ascent, checked against the (**) oracle") {
  CHECK(fundamental_cycle(path(4)).coefficients ==
        std::vector<long long>{1, 1, 1, 1});
  CHECK(fundamental_cycle(star(3)).coefficients ==
        std::vector<long long>{2, 1, 1, 1});

  std::vector<CurveConfig> all;
  for (int n = 1; n <= 9; ++n) all.push_back(path(n));
  for (int n = 4; n <= 9; ++n) all.push_back(d_diagram(n));
  for (int n = 6; n <= 8; ++n) all.push_back(e_diagram(n));

  for (const auto& cfg : all) {
    const auto z = fundamental_cycle(cfg).coefficients;
    for (int i = 0; i < cfg.count(); ++i) {
      CHECK(z[i] > 0);
      CHECK(cfg.pairing_row(z, i) <= 0);
    }
    CHECK(cfg.self_intersection(z) == -2);
    const auto oracle = minimal_cycle_oracle(cfg);
    REQUIRE(oracle.has_value());
    CHECK(z == *oracle);
  }

  SUBCASE("E8 coefficients, frozen") {
    // e_diagram(8): path 1..7 with vertex 8 attached at vertex 3
    CHECK(fundamental_cycle(e_diagram(8)).coefficients ==
          std::vector<long long>{2, 4, 6, 5, 4, 3, 2, 3});
  }

  CHECK_THROWS_AS(fundamental_cycle(cycle(3)), Error);
}

TEST_CASE("fundamental cycle equals the elliptic divisor minus the attached curve") {
  // Deleting any radical-coefficient-1 vertex of an extended diagram
  // leaves a plain diagram whose fundamental cycle is the restricted
  // radical generator.
  auto delete_vertex = [](const CurveConfig& cfg, int v) {
    std::vector<CurveEdge> edges;
    for (const auto& e : cfg.edges()) {
      if (e.a - 1 == v || e.b - 1 == v) continue;
      CurveEdge kept = e;
      if (kept.a - 1 > v) --kept.a;
      if (kept.b - 1 > v) --kept.b;
      edges.push_back(kept);
    }
    return CurveConfig(cfg.count() - 1, std::move(edges));
  };

  std::vector<CurveConfig> extended{double_edge(), star(4)};
  for (int k = 3; k <= 9; ++k) extended.push_back(cycle(k));
  for (int n = 5; n <= 8; ++n) extended.push_back(d_extended(n));
  for (int n = 6; n <= 8; ++n) extended.push_back(e_extended(n));

  int attachments_checked = 0;
  for (const auto& cfg : extended) {
    REQUIRE(classify_extended(cfg).label.has_value());
    const auto f = elliptic_divisor(cfg).coefficients;
    for (int v = 0; v < cfg.count(); ++v) {
      if (f[v] != 1) continue;
      const CurveConfig sub = delete_vertex(cfg, v);
      REQUIRE(classify(sub).label.has_value());
      const auto z = fundamental_cycle(sub).coefficients;
      std::vector<long long> restricted;
      for (int i = 0; i < cfg.count(); ++i)
        if (i != v) restricted.push_back(f[i]);
      CHECK(restricted == z);
      ++attachments_checked;
    }
  }
  CHECK(attachments_checked > 20);
}

TEST_CASE("rational double point table") {
  const auto a3 = rdp_data("A3");
  CHECK(a3.equation == "z^2 = x^2 + y^4");
  CHECK(a3.milnor_number == 3);
  CHECK(a3.aut_group == "(C*)^2 x Z/2");

  CHECK(rdp_data("A1").aut_group == "GL(2,C)/{+-1}");
  CHECK(rdp_data("E8").equation == "z^2 = x^3 + y^5");
  CHECK(rdp_data("E8").milnor_number == 8);
  CHECK(rdp_data("E8").aut_group == "C*");
  CHECK(rdp_data("E7").aut_group == "C*");
  CHECK(rdp_data("E6").aut_group == "C* x Z/2");

  const auto d4 = rdp_data("D4");
  CHECK(d4.equation == "z^2 = y(x^2 + y^2)");
  CHECK(d4.milnor_number == 4);
  CHECK(d4.aut_group == "C* x S3");
  CHECK(rdp_data("D5").aut_group == "C* x Z/2");

  // Milnor number equals the vertex count for every label
  for (int n = 1; n <= 9; ++n) CHECK(rdp_data("A" + std::to_string(n)).milnor_number == n);
  for (int n = 4; n <= 9; ++n) CHECK(rdp_data("D" + std::to_string(n)).milnor_number == n);
  for (int n = 6; n <= 8; ++n) CHECK(rdp_data("E" + std::to_string(n)).milnor_number == n);

  CHECK_THROWS_AS(rdp_data("D3"), Error);
  CHECK_THROWS_AS(rdp_data("E9"), Error);
  CHECK_THROWS_AS(rdp_data("F4"), Error);
}

TEST_CASE("construction rejects bad input") {
  CHECK_THROWS_AS(CurveConfig(4, {{1, 2, 1}, {3, 4, 1}}), Error); // disconnected
  try {
    CurveConfig(4, {{1, 2, 1}, {3, 4, 1}});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::disconnected);
  }
  CHECK_THROWS_AS(CurveConfig(2, {{1, 2, 3}}), Error); // multiplicity > 2
  CHECK_THROWS_AS(CurveConfig(2, {{1, 1, 1}}), Error); // loop
  CHECK_THROWS_AS(CurveConfig(2, {{1, 2, 1}, {2, 1, 1}}), Error); // duplicate
}
