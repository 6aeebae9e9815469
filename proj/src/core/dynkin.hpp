#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/errors.hpp"

namespace surfcalc {

struct CurveEdge {
  int a = 0, b = 0;     // 1-based vertex indices, a < b after normalization
  int multiplicity = 1; // 1 or 2; 2 encodes the double bond of ~A1
  friend bool operator==(const CurveEdge&, const CurveEdge&) = default;
};

// Connected multigraph of (-2)-curves.  The intersection matrix has -2 on
// the diagonal and the edge multiplicities off it.  Disconnected input is
// rejected at construction.
class CurveConfig {
public:
  CurveConfig(int count, std::vector<CurveEdge> edges);

  int count() const { return count_; }
  const std::vector<CurveEdge>& edges() const { return edges_; }
  int entry(int i, int j) const { return matrix_[i * count_ + j]; } // 0-based
  int degree_of(int v) const;                                      // 0-based
  std::vector<int> neighbors(int v) const;                         // 0-based

  // Z . C_i for the divisor with the given coefficients (0-based row i).
  long long pairing_row(const std::vector<long long>& z, int i) const;
  long long self_intersection(const std::vector<long long>& z) const;

private:
  int count_;
  std::vector<CurveEdge> edges_;
  std::vector<int> matrix_;
};

enum class DynkinSeries { A, D, E };

struct DynkinLabel {
  DynkinSeries series;
  int index; // number of vertices (A_n, D_n, E6, E7, E8)
  bool extended = false;
  std::string str() const; // "A3", "D~4", ...
  friend bool operator==(const DynkinLabel&, const DynkinLabel&) = default;
};

struct ClassifyResult {
  std::optional<DynkinLabel> label;
  std::string reason; // set when label is empty; names a forbidden
                      // extended subdiagram where one exists
};

// True iff every leading principal minor of -M is positive (exact
// integer arithmetic, no eigenvalue numerics).
bool is_negative_definite(const CurveConfig& cfg);

// ADE recognition of a connected configuration.
ClassifyResult classify(const CurveConfig& cfg);

// Extended (affine) recognition: negative semidefinite with a
// one-dimensional radical matching one of the five extended shapes.
ClassifyResult classify_extended(const CurveConfig& cfg);

struct Cycle {
  std::vector<long long> coefficients; // one per curve, all positive
};

// Minimal positive divisor Z with Z.C_i <= 0 for all i and Z^2 = -2,
// computed by ascent from the all-ones divisor.  Requires an ADE
// configuration (NotADE otherwise).
Cycle fundamental_cycle(const CurveConfig& cfg);

// Primitive positive generator F of the radical of an extended
// configuration; satisfies F.C_i = 0 for all i and F^2 = 0.
Cycle elliptic_divisor(const CurveConfig& cfg);

struct RdpData {
  std::string equation;  // z^2 = f(x,y) per the classical list
  int milnor_number = 0; // equals the Dynkin index
  std::string aut_group; // graded automorphism group
};

// Static table for rational double points, keyed by plain ADE label.
RdpData rdp_data(const DynkinLabel& label);
RdpData rdp_data(const std::string& label); // "A3", "D4", "E8", ...

DynkinLabel parse_dynkin_label(const std::string& text);

} // namespace surfcalc
