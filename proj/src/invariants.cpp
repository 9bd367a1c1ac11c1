#include "ksphere/invariants.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "ksphere/errors.hpp"

namespace ksphere {
namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;
constexpr double kFiniteDifferenceStep = 1e-5;

// Pairwise reduction so the result does not depend on accumulation order
// beyond the fixed slice layout.
cd pairwise_sum(std::span<const cd> v) {
  if (v.empty()) return {};
  if (v.size() <= 8) {
    cd s{};
    for (const auto& x : v) s += x;
    return s;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

void require_d(const SampledUnitary& u, int d, const char* what) {
  if (u.d != d) {
    std::ostringstream os;
    os << what << " is defined on S^" << d << ", got a function on S^" << u.d;
    throw DomainError(os.str());
  }
}

void require_grid(int n, const char* what) {
  if (n < 8) throw DomainError(std::string(what) + ": grid resolution must be at least 8");
}

void require_unitary(const Eigen::MatrixXcd& m, const char* what) {
  const auto n = m.rows();
  const double err = max_abs(m * m.adjoint() - Eigen::MatrixXcd::Identity(n, n));
  if (err > kUnitarityTolerance) {
    std::ostringstream os;
    os << what << ": sample is not unitary (|uu* - 1| = " << err << ")";
    throw ContractError(os.str());
  }
}

template <std::size_t D>
using Chart = std::function<std::array<double, D>(const std::array<double, D - 1>&)>;

// ∂u/∂c_j at chart coordinates c, analytic when available.
template <std::size_t D>
Eigen::MatrixXcd partial(const SampledUnitary& u, const Chart<D>& chart, const std::array<double, D - 1>& c,
                         const std::array<double, D>& x, const std::array<double, D>& tangent, std::size_t j) {
  if (u.derivative) return u.derivative(x, tangent);
  auto cp = c, cm = c;
  cp[j] += kFiniteDifferenceStep;
  cm[j] -= kFiniteDifferenceStep;
  const auto xp = chart(cp);
  const auto xm = chart(cm);
  return (u.eval(xp) - u.eval(xm)) / (2 * kFiniteDifferenceStep);
}

}  // namespace

SampledUnitary SampledUnitary::from_pencil(const SpherePencil& p) {
  return SampledUnitary{p.d, p.n, [p](std::span<const double> x) { return evaluate(p, x); },
                        [p](std::span<const double>, std::span<const double> v) { return directional_derivative(p, v); }};
}

SampledUnitary SampledUnitary::from_function(int d, std::size_t n, PointFn f) {
  if (d < 0) throw DomainError("sphere dimension must be non-negative");
  return SampledUnitary{d, n, std::move(f), {}};
}

SampledUnitary block_diag(const SampledUnitary& a, const SampledUnitary& b) {
  if (a.d != b.d) throw DimensionError("block_diag: sphere dimensions differ");
  const auto na = static_cast<Eigen::Index>(a.n);
  const auto nb = static_cast<Eigen::Index>(b.n);
  auto stack = [na, nb](const Eigen::MatrixXcd& x, const Eigen::MatrixXcd& y) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(na + nb, na + nb);
    out.topLeftCorner(na, na) = x;
    out.bottomRightCorner(nb, nb) = y;
    return out;
  };
  SampledUnitary out{a.d, a.n + b.n, [=](std::span<const double> x) { return stack(a.eval(x), b.eval(x)); }, {}};
  if (a.derivative && b.derivative)
    out.derivative = [=](std::span<const double> x, std::span<const double> v) {
      return stack(a.derivative(x, v), b.derivative(x, v));
    };
  return out;
}

SampledUnitary conjugate(const SampledUnitary& u, const Eigen::MatrixXcd& v) {
  if (static_cast<std::size_t>(v.rows()) != u.n) throw DimensionError("conjugate: size mismatch");
  const Eigen::MatrixXcd vs = v.adjoint();
  SampledUnitary out{u.d, u.n, [=](std::span<const double> x) -> Eigen::MatrixXcd { return v * u.eval(x) * vs; }, {}};
  if (u.derivative)
    out.derivative = [=](std::span<const double> x, std::span<const double> t) -> Eigen::MatrixXcd {
      return v * u.derivative(x, t) * vs;
    };
  return out;
}

Eigen::MatrixXcd numeric_transpose_or_sharp(Involution kind, const Eigen::MatrixXcd& a) {
  if (kind == Involution::Tr) return a.transpose();
  if (a.rows() % 2 != 0) throw DimensionError("the quaternionic involution needs an even size");
  const Eigen::Index m = a.rows() / 2;
  Eigen::MatrixXcd out(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j) {
      const auto blk = a.block<2, 2>(2 * j, 2 * i);
      out(2 * i, 2 * j) = blk(1, 1);
      out(2 * i, 2 * j + 1) = -blk(0, 1);
      out(2 * i + 1, 2 * j) = -blk(1, 0);
      out(2 * i + 1, 2 * j + 1) = blk(0, 0);
    }
  return out;
}

double max_abs(const Eigen::MatrixXcd& a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }

double winding1(const SampledUnitary& u, int points) {
  require_d(u, 1, "winding1");
  require_grid(points, "winding1");
  const Chart<2> chart = [](const std::array<double, 1>& c) {
    return std::array<double, 2>{std::cos(2 * kPi * c[0]), std::sin(2 * kPi * c[0])};
  };
  std::vector<cd> terms(static_cast<std::size_t>(points));
  for (int j = 0; j < points; ++j) {
    const std::array<double, 1> c{static_cast<double>(j) / points};
    const auto x = chart(c);
    const std::array<double, 2> dx{-2 * kPi * x[1], 2 * kPi * x[0]};
    const Eigen::MatrixXcd m = u.eval(x);
    require_unitary(m, "winding1");
    terms[static_cast<std::size_t>(j)] = (m.adjoint() * partial<2>(u, chart, c, x, dx, 0)).trace();
  }
  const cd total = pairwise_sum(terms) / static_cast<double>(points);
  return (total / cd(0, 2 * kPi)).real();
}

double chern2(const SampledUnitary& q, int n_theta, int n_phi) {
  require_d(q, 2, "chern2");
  require_grid(n_theta, "chern2");
  require_grid(n_phi, "chern2");
  const Chart<3> chart = [](const std::array<double, 2>& c) {
    const double st = std::sin(c[0]);
    return std::array<double, 3>{st * std::cos(c[1]), st * std::sin(c[1]), std::cos(c[0])};
  };
  const double dth = kPi / n_theta;
  const double dph = 2 * kPi / n_phi;
  const auto n = static_cast<Eigen::Index>(q.n);
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig;
  std::vector<cd> slices(static_cast<std::size_t>(n_theta));
  std::vector<cd> row(static_cast<std::size_t>(n_phi));
  for (int a = 0; a < n_theta; ++a) {
    const double th = (a + 0.5) * dth;
    for (int b = 0; b < n_phi; ++b) {
      const double ph = b * dph;
      const std::array<double, 2> c{th, ph};
      const auto x = chart(c);
      const double ct = std::cos(th), st = std::sin(th), cp = std::cos(ph), sp = std::sin(ph);
      const std::array<double, 3> d_th{ct * cp, ct * sp, -st};
      const std::array<double, 3> d_ph{-st * sp, st * cp, 0.0};
      const Eigen::MatrixXcd m = q.eval(x);
      if (max_abs(m - m.adjoint()) > kUnitarityTolerance) throw ContractError("chern2: sample is not self-adjoint");
      eig.compute(m, Eigen::EigenvaluesOnly);
      if (eig.eigenvalues().cwiseAbs().minCoeff() < kSpectralGap) {
        std::ostringstream os;
        os << "chern2: spectral gap closes near (" << x[0] << ", " << x[1] << ", " << x[2] << ")";
        throw GapError(os.str());
      }
      require_unitary(m, "chern2");
      const Eigen::MatrixXcd p = 0.5 * (id - m);
      const Eigen::MatrixXcd pt = -0.5 * partial<3>(q, chart, c, x, d_th, 0);
      const Eigen::MatrixXcd pp = -0.5 * partial<3>(q, chart, c, x, d_ph, 1);
      row[static_cast<std::size_t>(b)] = (p * (pt * pp - pp * pt)).trace();
    }
    slices[static_cast<std::size_t>(a)] = pairwise_sum(row);
  }
  const cd total = pairwise_sum(slices) * dth * dph;
  return (total / cd(0, 2 * kPi)).real();
}

double winding3(const SampledUnitary& u, int n) {
  require_d(u, 3, "winding3");
  require_grid(n, "winding3");
  const Chart<4> chart = [](const std::array<double, 3>& c) {
    const double sc = std::sin(c[0]), st = std::sin(c[1]);
    return std::array<double, 4>{std::cos(c[0]), sc * std::cos(c[1]), sc * st * std::cos(c[2]),
                                 sc * st * std::sin(c[2])};
  };
  const double dchi = kPi / n, dth = kPi / n, dph = 2 * kPi / n;
  std::vector<cd> slices(static_cast<std::size_t>(n));
  std::vector<cd> inner(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    const double chi = (a + 0.5) * dchi;
    const double cc = std::cos(chi), sc = std::sin(chi);
    for (int b = 0; b < n; ++b) {
      const double th = (b + 0.5) * dth;
      const double ct = std::cos(th), st = std::sin(th);
      for (int k = 0; k < n; ++k) {
        const double ph = k * dph;
        const double cp = std::cos(ph), sp = std::sin(ph);
        const std::array<double, 3> c{chi, th, ph};
        const auto x = chart(c);
        const std::array<double, 4> d_chi{-sc, cc * ct, cc * st * cp, cc * st * sp};
        const std::array<double, 4> d_th{0.0, -sc * st, sc * ct * cp, sc * ct * sp};
        const std::array<double, 4> d_ph{0.0, 0.0, -sc * st * sp, sc * st * cp};
        const Eigen::MatrixXcd m = u.eval(x);
        require_unitary(m, "winding3");
        const Eigen::MatrixXcd ms = m.adjoint();
        const Eigen::MatrixXcd a1 = ms * partial<4>(u, chart, c, x, d_chi, 0);
        const Eigen::MatrixXcd a2 = ms * partial<4>(u, chart, c, x, d_th, 1);
        const Eigen::MatrixXcd a3 = ms * partial<4>(u, chart, c, x, d_ph, 2);
        inner[static_cast<std::size_t>(b) * static_cast<std::size_t>(n) + static_cast<std::size_t>(k)] =
            3.0 * (a1 * (a2 * a3 - a3 * a2)).trace();
      }
    }
    slices[static_cast<std::size_t>(a)] = pairwise_sum(inner);
  }
  const cd total = pairwise_sum(slices) * dchi * dth * dph;
  return (-total / (24 * kPi * kPi)).real();
}

std::string to_string(InvariantKind k) {
  switch (k) {
    case InvariantKind::Winding1: return "winding1";
    case InvariantKind::Chern2: return "chern2";
    case InvariantKind::Winding3: return "winding3";
  }
  return "?";
}

InvariantKind invariant_kind_from_string(const std::string& s) {
  if (s == "winding1") return InvariantKind::Winding1;
  if (s == "chern2") return InvariantKind::Chern2;
  if (s == "winding3") return InvariantKind::Winding3;
  throw DomainError("unknown invariant '" + s + "' (expected winding1, chern2 or winding3)");
}

InvariantValue compute_invariant(const SampledUnitary& u, InvariantKind kind, int grid) {
  InvariantValue v{kind};
  switch (kind) {
    case InvariantKind::Winding1: v.value = winding1(u, grid); break;
    case InvariantKind::Chern2: v.value = chern2(u, grid, 2 * grid); break;
    case InvariantKind::Winding3: v.value = winding3(u, grid); break;
  }
  v.nearest = std::lround(v.value);
  v.residual = std::abs(v.value - static_cast<double>(v.nearest));
  return v;
}

GeneratorCertificate certify_generator(const SpherePencil& p, const RowLabel& claimed) {
  GeneratorCertificate cert;
  cert.claimed = claimed;
  try {
    const ClassifyResult r = classify(p);
    cert.satisfied = r.satisfied;
    for (const auto& l : r.satisfied)
      if (l == claimed) cert.row_satisfied = true;
  } catch (const ContractError& e) {
    cert.note = e.what();
    return cert;
  }
  const SampledUnitary u = SampledUnitary::from_pencil(p);
  auto check = [&](InvariantKind kind, int grid, double tol, std::initializer_list<long> allowed) {
    cert.invariant = compute_invariant(u, kind, grid);
    bool magnitude_ok = false;
    for (long a : allowed) magnitude_ok |= std::labs(cert.invariant->nearest) == a;
    cert.numeric_ok = magnitude_ok && cert.invariant->residual <= tol;
  };
  switch (p.d) {
    case 1: check(InvariantKind::Winding1, 10000, 1e-6, {1, 2}); break;
    case 2:
      if (holds(p, Relation::SelfAdjoint)) {
        check(InvariantKind::Chern2, 400, 1e-3, {1});
      } else {
        cert.note = "no numeric invariant for a non-self-adjoint function on S^2; symmetry checked only";
      }
      break;
    case 3: check(InvariantKind::Winding3, 48, 1e-2, {1}); break;
    default:
      cert.note = "symmetry verified; no numeric invariant on S^" + std::to_string(p.d) +
                  ", generator status rests on the complexification argument";
  }
  return cert;
}

}  // namespace ksphere
