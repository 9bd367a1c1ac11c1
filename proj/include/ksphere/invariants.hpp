#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>

#include <Eigen/Dense>

#include "ksphere/involutions.hpp"
#include "ksphere/sphere_pencil.hpp"

namespace ksphere {

using PointFn = std::function<Eigen::MatrixXcd(std::span<const double>)>;
// Derivative of the function at x along the tangent vector v.
using TangentFn = std::function<Eigen::MatrixXcd(std::span<const double> x, std::span<const double> v)>;

/// A unitary-valued function on S^d given by an evaluator. Pencils carry an
/// exact derivative; other functions fall back to central differences along
/// the integration chart.
struct SampledUnitary {
  int d = 0;
  std::size_t n = 0;
  PointFn eval;
  TangentFn derivative;  // empty for non-pencil functions

  static SampledUnitary from_pencil(const SpherePencil& p);
  static SampledUnitary from_function(int d, std::size_t n, PointFn f);
};

SampledUnitary block_diag(const SampledUnitary& a, const SampledUnitary& b);
// x ↦ V u(x) V* for a constant unitary V.
SampledUnitary conjugate(const SampledUnitary& u, const Eigen::MatrixXcd& v);

Eigen::MatrixXcd numeric_transpose_or_sharp(Involution kind, const Eigen::MatrixXcd& a);

double max_abs(const Eigen::MatrixXcd& a);

inline constexpr double kUnitarityTolerance = 1e-8;
inline constexpr double kSpectralGap = 1e-3;

/// (1/2πi) ∮ tr(u* du) over the circle traversed counterclockwise,
/// t ∈ [0, 1) sampled at `points` equally spaced nodes (periodic trapezoid).
/// Throws DomainError unless d = 1, ContractError on non-unitary samples.
double winding1(const SampledUnitary& u, int points = 10000);

/// First Chern number of the projection P = (1 - q)/2 over S^2 with
/// colatitude θ (midpoint rule, n_theta cells) and azimuth φ (periodic,
/// n_phi nodes). Throws GapError when an eigenvalue of q comes within 1e-3
/// of 0 and ContractError when q is not a self-adjoint unitary.
double chern2(const SampledUnitary& q, int n_theta = 400, int n_phi = 800);

/// (-1/24π²) ∫ tr((u* du)^3) over S^3 in the hyperspherical chart
/// (χ, θ midpoint, φ periodic), n nodes per angle.
double winding3(const SampledUnitary& u, int n = 48);

// Signs realized by the reference generators under the orientation
// conventions above, measured once and kept fixed.
inline constexpr int kWinding1SignOfZ = 1;
inline constexpr int kChern2SignOfBott = 1;
inline constexpr int kWinding3SignOfY1 = 1;

enum class InvariantKind { Winding1, Chern2, Winding3 };

std::string to_string(InvariantKind k);
InvariantKind invariant_kind_from_string(const std::string& s);

struct InvariantValue {
  InvariantKind kind;
  double value = 0;
  long nearest = 0;
  double residual = 0;
};

// grid: points for winding1, θ cells for chern2 (φ gets 2·grid), nodes per angle for winding3.
InvariantValue compute_invariant(const SampledUnitary& u, InvariantKind kind, int grid);

struct GeneratorCertificate {
  RowLabel claimed;
  bool row_satisfied = false;
  std::vector<RowLabel> satisfied;
  std::optional<InvariantValue> invariant;
  bool numeric_ok = true;  // vacuously true when no invariant applies
  std::string note;

  bool ok() const { return row_satisfied && numeric_ok; }
};

/// Exact symmetry-row membership plus, for d ≤ 3, the matching numeric
/// invariant: |winding1| ∈ {1, 2} on S^1, |chern2| = 1 on S^2 (self-adjoint
/// pencils only), |winding3| = 1 on S^3.
GeneratorCertificate certify_generator(const SpherePencil& p, const RowLabel& claimed);

}  // namespace ksphere
