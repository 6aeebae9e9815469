#include "core/dynkin.hpp"

#include <algorithm>
#include <numeric>

#include "core/rational.hpp"

namespace surfcalc {

CurveConfig::CurveConfig(int count, std::vector<CurveEdge> edges)
    : count_(count), edges_(std::move(edges)) {
  if (count < 1) fail(Errc::out_of_range, "configuration needs at least one curve");
  matrix_.assign(static_cast<std::size_t>(count) * count, 0);
  for (int i = 0; i < count; ++i) matrix_[i * count + i] = -2;

  for (auto& e : edges_) {
    if (e.a < 1 || e.a > count || e.b < 1 || e.b > count || e.a == e.b)
      fail(Errc::out_of_range, "edge endpoints must be distinct vertices in 1..count");
    if (e.multiplicity < 1 || e.multiplicity > 2)
      fail(Errc::out_of_range, "edge multiplicity must be 1 or 2");
    if (e.a > e.b) std::swap(e.a, e.b);
    const int i = e.a - 1, j = e.b - 1;
    if (matrix_[i * count + j] != 0)
      fail(Errc::out_of_range, "duplicate edge");
    matrix_[i * count + j] = e.multiplicity;
    matrix_[j * count + i] = e.multiplicity;
  }
  std::sort(edges_.begin(), edges_.end(), [](const CurveEdge& x, const CurveEdge& y) {
    return std::tie(x.a, x.b) < std::tie(y.a, y.b);
  });

  // connectivity
  std::vector<char> seen(count, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < count; ++w)
      if (w != v && entry(v, w) != 0 && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  if (reached != count)
    fail(Errc::disconnected, "configuration graph must be connected");
}

int CurveConfig::degree_of(int v) const {
  int d = 0;
  for (int w = 0; w < count_; ++w)
    if (w != v) d += entry(v, w);
  return d;
}

std::vector<int> CurveConfig::neighbors(int v) const {
  std::vector<int> out;
  for (int w = 0; w < count_; ++w)
    if (w != v && entry(v, w) != 0) out.push_back(w);
  return out;
}

long long CurveConfig::pairing_row(const std::vector<long long>& z, int i) const {
  long long s = 0;
  for (int j = 0; j < count_; ++j) s += z[j] * entry(i, j);
  return s;
}

long long CurveConfig::self_intersection(const std::vector<long long>& z) const {
  long long s = 0;
  for (int i = 0; i < count_; ++i) s += z[i] * pairing_row(z, i);
  return s;
}

std::string DynkinLabel::str() const {
  std::string s(1, series == DynkinSeries::A ? 'A' : series == DynkinSeries::D ? 'D' : 'E');
  if (extended) s += '~';
  return s + std::to_string(index);
}

bool is_negative_definite(const CurveConfig& cfg) {
  const int n = cfg.count();
  // Fraction-free Gaussian elimination (Bareiss) on -M; the pivots it
  // produces are exactly the leading principal minors.
  std::vector<long long> m(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i * n + j] = -cfg.entry(i, j);

  long long prev = 1;
  for (int k = 0; k < n; ++k) {
    if (m[k * n + k] <= 0) return false; // minor of order k+1 not positive
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i * n + j] = (m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j]) / prev;
    prev = m[k * n + k];
  }
  return true;
}

namespace {

struct GraphShape {
  bool has_multiple_edge = false;
  bool is_tree = false;
  int max_degree = 0;
  std::vector<int> branch_vertices; // 0-based vertices of degree >= 3
  std::vector<int> arm_lengths;     // for a single degree-3 branch: sorted arm edge counts
};

GraphShape analyze(const CurveConfig& cfg) {
  GraphShape shape;
  int edge_count = 0;
  for (const auto& e : cfg.edges()) {
    edge_count += 1;
    if (e.multiplicity >= 2) shape.has_multiple_edge = true;
  }
  shape.is_tree = (edge_count == cfg.count() - 1); // connected by construction
  for (int v = 0; v < cfg.count(); ++v) {
    const int d = cfg.degree_of(v);
    shape.max_degree = std::max(shape.max_degree, d);
    if (!shape.has_multiple_edge && d >= 3) shape.branch_vertices.push_back(v);
  }
  if (shape.branch_vertices.size() == 1 && shape.max_degree == 3 && shape.is_tree) {
    const int center = shape.branch_vertices.front();
    for (int start : cfg.neighbors(center)) {
      int len = 1, prev = center, cur = start;
      while (true) {
        const auto nbrs = cfg.neighbors(cur);
        if (nbrs.size() != 2) break; // tip (degree 1); degree 3 impossible here
        const int next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
        prev = cur;
        cur = next;
        ++len;
      }
      shape.arm_lengths.push_back(len);
    }
    std::sort(shape.arm_lengths.begin(), shape.arm_lengths.end());
  }
  return shape;
}

int branch_distance(const CurveConfig& cfg, int u, int v) {
  std::vector<int> dist(cfg.count(), -1);
  std::vector<int> queue{u};
  dist[u] = 0;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const int x = queue[k];
    for (int w : cfg.neighbors(x))
      if (dist[w] < 0) {
        dist[w] = dist[x] + 1;
        queue.push_back(w);
      }
  }
  return dist[v];
}

} // namespace

ClassifyResult classify(const CurveConfig& cfg) {
  ClassifyResult result;
  const int n = cfg.count();
  const GraphShape shape = analyze(cfg);

  if (shape.has_multiple_edge) {
    result.reason = "multiple edge (contains A~1)";
    return result;
  }
  if (!shape.is_tree) {
    // Connected with a cycle: the shortest cycle is an extended A diagram.
    // Report via the vertex count of some cycle; for a simple graph the
    // cycle has at least 3 vertices.
    int cycle_len = n; // upper bound; refine by BFS from each edge
    for (const auto& e : cfg.edges()) {
      // shortest path between endpoints avoiding the edge itself
      std::vector<int> dist(n, -1);
      std::vector<int> queue{e.a - 1};
      dist[e.a - 1] = 0;
      for (std::size_t k = 0; k < queue.size(); ++k) {
        const int x = queue[k];
        for (int w : cfg.neighbors(x)) {
          if (x == e.a - 1 && w == e.b - 1) continue;
          if (dist[w] < 0) {
            dist[w] = dist[x] + 1;
            queue.push_back(w);
          }
        }
      }
      if (dist[e.b - 1] > 0) cycle_len = std::min(cycle_len, dist[e.b - 1] + 1);
    }
    result.reason = "cycle present (contains A~" + std::to_string(cycle_len - 1) + ")";
    return result;
  }
  if (shape.max_degree >= 4) {
    result.reason = "vertex of degree >= 4 (contains D~4)";
    return result;
  }
  if (shape.branch_vertices.size() >= 2) {
    const int d = branch_distance(cfg, shape.branch_vertices[0], shape.branch_vertices[1]);
    result.reason = "two branch vertices (contains D~" + std::to_string(d + 4) + ")";
    return result;
  }
  if (shape.branch_vertices.empty()) {
    result.label = DynkinLabel{DynkinSeries::A, n};
  } else {
    const auto& arms = shape.arm_lengths; // sorted, size 3
    if (arms[0] >= 2) {
      result.reason = "branch arms too long (contains E~6)";
      return result;
    }
    if (arms[1] == 1) {
      result.label = DynkinLabel{DynkinSeries::D, n};
    } else if (arms[1] >= 3) {
      result.reason = "branch arms too long (contains E~7)";
      return result;
    } else if (arms[2] == 2) {
      result.label = DynkinLabel{DynkinSeries::E, 6};
    } else if (arms[2] == 3) {
      result.label = DynkinLabel{DynkinSeries::E, 7};
    } else if (arms[2] == 4) {
      result.label = DynkinLabel{DynkinSeries::E, 8};
    } else {
      result.reason = "branch arms too long (contains E~8)";
      return result;
    }
  }

  if (!is_negative_definite(cfg)) {
    result.label.reset();
    result.reason = "not negative definite";
  }
  return result;
}

namespace {

// Rational kernel of the intersection matrix; returns the primitive
// integer generator when the radical is one-dimensional, all entries
// positive after sign normalization.
std::optional<std::vector<long long>> radical_generator(const CurveConfig& cfg) {
  using Rat = Rational;
  const int n = cfg.count();
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = cfg.entry(i, j);

  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int p = -1;
    for (int r = row; r < n; ++r)
      if (m[r][col] != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    std::swap(m[p], m[row]);
    const Rat lead = m[row][col];
    for (int j = 0; j < n; ++j) m[row][j] /= lead;
    for (int r = 0; r < n; ++r)
      if (r != row && m[r][col] != 0) {
        const Rat f = m[r][col];
        for (int j = 0; j < n; ++j) m[r][j] -= f * m[row][j];
      }
    pivot_col.push_back(col);
    ++row;
  }
  if (row != n - 1) return std::nullopt; // radical not one-dimensional

  std::vector<char> is_pivot(n, 0);
  for (int c : pivot_col) is_pivot[c] = 1;
  int free_col = -1;
  for (int c = 0; c < n; ++c)
    if (!is_pivot[c]) free_col = c;

  std::vector<Rat> v(n, Rat(0));
  v[free_col] = 1;
  for (int r = 0; r < row; ++r) v[pivot_col[r]] = -m[r][free_col];

  long long denom = 1;
  for (const Rat& x : v) denom = std::lcm(denom, x.denominator());
  std::vector<long long> out(n);
  long long g = 0;
  for (int i = 0; i < n; ++i) {
    out[i] = (v[i] * denom).numerator();
    g = std::gcd(g, out[i]);
  }
  if (g == 0) return std::nullopt;
  for (auto& x : out) x /= g;
  bool all_pos = true, all_neg = true;
  for (long long x : out) {
    if (x <= 0) all_pos = false;
    if (x >= 0) all_neg = false;
  }
  if (all_neg)
    for (auto& x : out) x = -x;
  else if (!all_pos)
    return std::nullopt;
  return out;
}

bool semidefinite_with_null_direction(const CurveConfig& cfg,
                                      const std::vector<long long>& f) {
  for (int i = 0; i < cfg.count(); ++i)
    if (cfg.pairing_row(f, i) != 0) return false;
  if (cfg.self_intersection(f) != 0) return false;
  // Deleting any vertex of an extended diagram leaves a definite,
  // possibly disconnected, union of plain diagrams; check definiteness
  // of the largest proper leading block after every relabelling is
  // overkill at this size, so verify all principal minors of -M are
  // nonnegative via leading minors of each vertex-deleted matrix.
  const int n = cfg.count();
  std::vector<long long> m(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i * n + j] = -cfg.entry(i, j);
  // Bareiss on the first n-1 rows/cols after moving each vertex last
  for (int drop = 0; drop < n; ++drop) {
    std::vector<long long> a;
    a.reserve(static_cast<std::size_t>(n - 1) * (n - 1));
    for (int i = 0; i < n; ++i) {
      if (i == drop) continue;
      for (int j = 0; j < n; ++j) {
        if (j == drop) continue;
        a.push_back(m[i * n + j]);
      }
    }
    const int k = n - 1;
    long long prev = 1;
    for (int p = 0; p < k; ++p) {
      if (a[p * k + p] <= 0) return false;
      for (int i = p + 1; i < k; ++i)
        for (int j = p + 1; j < k; ++j)
          a[i * k + j] = (a[i * k + j] * a[p * k + p] - a[i * k + p] * a[p * k + j]) / prev;
      prev = a[p * k + p];
    }
  }
  return true;
}

} // namespace

ClassifyResult classify_extended(const CurveConfig& cfg) {
  ClassifyResult result;
  const int n = cfg.count();
  const auto radical = radical_generator(cfg);
  if (!radical || !semidefinite_with_null_direction(cfg, *radical)) {
    result.reason = "not negative semidefinite with one-dimensional radical";
    return result;
  }

  const GraphShape shape = analyze(cfg);
  if (n == 2 && shape.has_multiple_edge) {
    result.label = DynkinLabel{DynkinSeries::A, 1, true};
    return result;
  }
  if (shape.has_multiple_edge) {
    result.reason = "unrecognized shape";
    return result;
  }
  if (!shape.is_tree) {
    // semidefinite + connected + cycle forces a plain cycle
    result.label = DynkinLabel{DynkinSeries::A, n - 1, true};
    return result;
  }
  if (shape.max_degree == 4 && n == 5) {
    result.label = DynkinLabel{DynkinSeries::D, 4, true};
    return result;
  }
  if (shape.branch_vertices.size() == 2) {
    result.label = DynkinLabel{DynkinSeries::D, n - 1, true};
    return result;
  }
  if (shape.arm_lengths.size() == 3) {
    const auto& arms = shape.arm_lengths;
    if (arms == std::vector<int>{2, 2, 2}) {
      result.label = DynkinLabel{DynkinSeries::E, 6, true};
      return result;
    }
    if (arms == std::vector<int>{1, 3, 3}) {
      result.label = DynkinLabel{DynkinSeries::E, 7, true};
      return result;
    }
    if (arms == std::vector<int>{1, 2, 5}) {
      result.label = DynkinLabel{DynkinSeries::E, 8, true};
      return result;
    }
  }
  result.reason = "unrecognized shape";
  return result;
}

Cycle fundamental_cycle(const CurveConfig& cfg) {
  const ClassifyResult cls = classify(cfg);
  if (!cls.label)
    fail(Errc::not_ade, "fundamental cycle needs an ADE configuration: " + cls.reason);

  std::vector<long long> z(cfg.count(), 1);
  // Artin ascent: while some Z.C_i > 0, bump that coefficient.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < cfg.count(); ++i)
      if (cfg.pairing_row(z, i) > 0) {
        ++z[i];
        changed = true;
        break;
      }
  }
  if (cfg.self_intersection(z) != -2)
    fail(Errc::not_ade, "ascent terminated with Z^2 != -2"); // unreachable for ADE
  return Cycle{std::move(z)};
}

Cycle elliptic_divisor(const CurveConfig& cfg) {
  const ClassifyResult cls = classify_extended(cfg);
  if (!cls.label)
    fail(Errc::not_extended, "elliptic divisor needs an extended configuration: " + cls.reason);
  auto radical = radical_generator(cfg);
  if (!radical) fail(Errc::not_extended, "radical is not one-dimensional");
  return Cycle{std::move(*radical)};
}

RdpData rdp_data(const DynkinLabel& label) {
  if (label.extended) fail(Errc::unknown_label, "rdp data is keyed by plain ADE labels");
  const int n = label.index;
  switch (label.series) {
    case DynkinSeries::A:
      if (n < 1) fail(Errc::unknown_label, "A_n needs n >= 1");
      return {"z^2 = x^2 + y^" + std::to_string(n + 1), n,
              n == 1 ? "GL(2,C)/{+-1}" : "(C*)^2 x Z/2"};
    case DynkinSeries::D:
      if (n < 4) fail(Errc::unknown_label, "D_n needs n >= 4");
      return {"z^2 = y(x^2 + y^" + std::to_string(n - 2) + ")", n,
              n == 4 ? "C* x S3" : "C* x Z/2"};
    case DynkinSeries::E:
      if (n == 6) return {"z^2 = x^3 + y^4", 6, "C* x Z/2"};
      if (n == 7) return {"z^2 = y(x^2 + y^3)", 7, "C*"};
      if (n == 8) return {"z^2 = x^3 + y^5", 8, "C*"};
      fail(Errc::unknown_label, "E_n needs n in {6,7,8}");
  }
  fail(Errc::unknown_label, "unrecognized series");
}

RdpData rdp_data(const std::string& label) { return rdp_data(parse_dynkin_label(label)); }

DynkinLabel parse_dynkin_label(const std::string& text) {
  if (text.size() < 2) fail(Errc::unknown_label, "label too short: '" + text + "'");
  DynkinLabel label{DynkinSeries::A, 0, false};
  switch (text[0]) {
    case 'A': label.series = DynkinSeries::A; break;
    case 'D': label.series = DynkinSeries::D; break;
    case 'E': label.series = DynkinSeries::E; break;
    default: fail(Errc::unknown_label, "label must start with A, D or E");
  }
  std::size_t pos = 1;
  if (text[pos] == '~') {
    label.extended = true;
    ++pos;
  }
  try {
    label.index = std::stoi(text.substr(pos));
  } catch (const std::exception&) {
    fail(Errc::unknown_label, "label index is not a number: '" + text + "'");
  }
  return label;
}

} // namespace surfcalc
