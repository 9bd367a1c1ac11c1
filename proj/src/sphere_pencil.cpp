#include "ksphere/sphere_pencil.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "ksphere/errors.hpp"

namespace ksphere {
namespace {

void require_same_shape(const SpherePencil& a, const SpherePencil& b, const char* where) {
  if (a.d != b.d || a.n != b.n) {
    std::ostringstream os;
    os << where << ": pencils on S^" << a.d << " (size " << a.n << ") and S^" << b.d << " (size " << b.n
       << ") do not match";
    throw DimensionError(os.str());
  }
}

template <class F>
SpherePencil map_all(const SpherePencil& p, F f) {
  std::vector<ExactMatrix> coeffs;
  coeffs.reserve(p.coefficients.size());
  for (const auto& m : p.coefficients) coeffs.push_back(f(m));
  std::optional<ExactMatrix> c;
  if (p.constant) c = f(*p.constant);
  return SpherePencil::make(p.d, std::move(coeffs), std::move(c));
}

std::optional<ExactMatrix> drop_if_zero(ExactMatrix m) {
  if (m.is_zero()) return std::nullopt;
  return m;
}

int mod8(int k) { return ((k % 8) + 8) % 8; }

}  // namespace

SpherePencil SpherePencil::make(int d, std::vector<ExactMatrix> coefficients, std::optional<ExactMatrix> constant) {
  if (d < 0) throw DomainError("sphere dimension must be non-negative, got " + std::to_string(d));
  if (coefficients.size() != static_cast<std::size_t>(d) + 1) {
    std::ostringstream os;
    os << "a pencil on S^" << d << " needs " << d + 1 << " coefficients, got " << coefficients.size();
    throw DimensionError(os.str());
  }
  const std::size_t n = coefficients.front().size();
  for (const auto& m : coefficients)
    if (m.size() != n) throw DimensionError("pencil coefficients have different sizes");
  if (constant && constant->size() != n) throw DimensionError("pencil constant has the wrong size");
  return SpherePencil{d, n, std::move(coefficients), std::move(constant)};
}

SpherePencil SpherePencil::constant_pencil(int d, const ExactMatrix& c) {
  if (d < 0) throw DomainError("sphere dimension must be non-negative");
  std::vector<ExactMatrix> coeffs(static_cast<std::size_t>(d) + 1, ExactMatrix::zero(c.size()));
  return make(d, std::move(coeffs), c);
}

ExactMatrix SpherePencil::constant_or_zero() const { return constant ? *constant : ExactMatrix::zero(n); }

bool operator==(const SpherePencil& a, const SpherePencil& b) {
  return a.d == b.d && a.n == b.n && a.coefficients == b.coefficients &&
         a.constant_or_zero() == b.constant_or_zero();
}

Eigen::MatrixXcd to_complex_matrix(const ExactMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.size());
  Eigen::MatrixXcd out(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      out(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).to_complex();
  return out;
}

Eigen::MatrixXcd directional_derivative(const SpherePencil& p, std::span<const double> v) {
  if (v.size() != p.coefficients.size())
    throw DimensionError("point has " + std::to_string(v.size()) + " components, expected " +
                         std::to_string(p.coefficients.size()));
  const auto n = static_cast<Eigen::Index>(p.n);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n, n);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0.0) out += v[i] * to_complex_matrix(p.coefficients[i]);
  return out;
}

Eigen::MatrixXcd evaluate(const SpherePencil& p, std::span<const double> x) {
  if (x.size() != p.coefficients.size())
    throw DimensionError("point has " + std::to_string(x.size()) + " components, expected " +
                         std::to_string(p.coefficients.size()));
  double r2 = 0;
  for (double xi : x) r2 += xi * xi;
  if (std::abs(r2 - 1.0) > 1e-12) {
    std::ostringstream os;
    os << "point is off the unit sphere: |x|^2 - 1 = " << r2 - 1.0;
    throw DomainError(os.str());
  }
  Eigen::MatrixXcd out = directional_derivative(p, x);
  if (p.constant) out += to_complex_matrix(*p.constant);
  return out;
}

SpherePencil pencil_neg(const SpherePencil& p) {
  return map_all(p, [](const ExactMatrix& m) { return neg(m); });
}

SpherePencil pencil_star(const SpherePencil& p) {
  return map_all(p, [](const ExactMatrix& m) { return adjoint(m); });
}

SpherePencil pencil_right_mul(const SpherePencil& p, const ExactMatrix& w) {
  if (w.size() != p.n) throw DimensionError("pencil_right_mul: size mismatch");
  return map_all(p, [&](const ExactMatrix& m) { return mul(m, w); });
}

SpherePencil pencil_conjugate(const SpherePencil& p, const ExactMatrix& v) {
  if (v.size() != p.n) throw DimensionError("pencil_conjugate: size mismatch");
  const ExactMatrix vs = adjoint(v);
  return map_all(p, [&](const ExactMatrix& m) { return mul(mul(v, m), vs); });
}

SpherePencil pencil_scale(const SpherePencil& p, const DyadicGaussian& s) {
  return map_all(p, [&](const ExactMatrix& m) { return scale(m, s); });
}

SpherePencil pencil_add(const SpherePencil& a, const SpherePencil& b) {
  require_same_shape(a, b, "pencil_add");
  std::vector<ExactMatrix> coeffs;
  for (std::size_t i = 0; i < a.coefficients.size(); ++i) coeffs.push_back(add(a.coefficients[i], b.coefficients[i]));
  std::optional<ExactMatrix> c;
  if (a.constant || b.constant) c = drop_if_zero(add(a.constant_or_zero(), b.constant_or_zero()));
  return SpherePencil::make(a.d, std::move(coeffs), std::move(c));
}

SpherePencil pencil_block_diag(const SpherePencil& p, const SpherePencil& q) {
  if (p.d != q.d) throw DimensionError("pencil_block_diag: sphere dimensions differ");
  std::vector<ExactMatrix> coeffs;
  for (std::size_t i = 0; i < p.coefficients.size(); ++i)
    coeffs.push_back(block_diag(p.coefficients[i], q.coefficients[i]));
  std::optional<ExactMatrix> c;
  if (p.constant || q.constant) c = block_diag(p.constant_or_zero(), q.constant_or_zero());
  return SpherePencil::make(p.d, std::move(coeffs), std::move(c));
}

SpherePencil pencil_block2x2(const SpherePencil& a, const SpherePencil& b, const SpherePencil& c,
                             const SpherePencil& d) {
  require_same_shape(a, b, "pencil_block2x2");
  require_same_shape(a, c, "pencil_block2x2");
  require_same_shape(a, d, "pencil_block2x2");
  std::vector<ExactMatrix> coeffs;
  for (std::size_t i = 0; i < a.coefficients.size(); ++i)
    coeffs.push_back(block2x2(a.coefficients[i], b.coefficients[i], c.coefficients[i], d.coefficients[i]));
  std::optional<ExactMatrix> k;
  if (a.constant || b.constant || c.constant || d.constant)
    k = drop_if_zero(
        block2x2(a.constant_or_zero(), b.constant_or_zero(), c.constant_or_zero(), d.constant_or_zero()));
  return SpherePencil::make(a.d, std::move(coeffs), std::move(k));
}

SpherePencil apply_involution_tau(Involution kind, const SpherePencil& p) {
  if (kind == Involution::SharpTr && p.n % 2 != 0)
    throw DimensionError("the quaternionic involution needs an even size, got " + std::to_string(p.n));
  std::vector<ExactMatrix> coeffs;
  coeffs.reserve(p.coefficients.size());
  for (const auto& m : p.coefficients) coeffs.push_back(neg(apply(kind, m)));
  std::optional<ExactMatrix> c;
  if (p.constant) c = apply(kind, *p.constant);
  return SpherePencil::make(p.d, std::move(coeffs), std::move(c));
}

SpherePencil picture_convert(const SpherePencil& u, PictureDirection direction) {
  if (u.n % 2 != 0) throw DimensionError("picture_convert needs an even size, got " + std::to_string(u.n));
  if (!is_unitary_symbolic(u)) throw ContractError("picture_convert: pencil is not unitary");
  const ExactMatrix w = w_matrix(u.n / 2);
  return pencil_right_mul(u, direction == PictureDirection::ToSharpPicture ? w : neg(w));
}

UnitarityCertificate is_unitary_symbolic(const SpherePencil& p) {
  const ExactMatrix c = p.constant_or_zero();
  const ExactMatrix zero = ExactMatrix::zero(p.n);
  const ExactMatrix c_star = adjoint(c);
  const ExactMatrix defect = sub(ExactMatrix::identity(p.n), mul(c, c_star));
  const ExactMatrix two_defect = scale(defect, 2);
  std::vector<ExactMatrix> stars;
  stars.reserve(p.coefficients.size());
  for (const auto& m : p.coefficients) stars.push_back(adjoint(m));

  for (std::size_t i = 0; i < p.coefficients.size(); ++i) {
    const ExactMatrix& mi = p.coefficients[i];
    if (add(mul(mi, c_star), mul(c, stars[i])) != zero)
      return {false, "M_" + std::to_string(i + 1) + " C* + C M_" + std::to_string(i + 1) + "* != 0"};
    for (std::size_t j = i; j < p.coefficients.size(); ++j) {
      const ExactMatrix s = add(mul(mi, stars[j]), mul(p.coefficients[j], stars[i]));
      if (s != (i == j ? two_defect : zero)) {
        std::ostringstream os;
        os << "M_" << i + 1 << " M_" << j + 1 << "* + M_" << j + 1 << " M_" << i + 1 << "* != "
           << (i == j ? "2(I - CC*)" : "0");
        return {false, os.str()};
      }
    }
  }
  return {true, {}};
}

std::string to_string(Relation r) {
  switch (r) {
    case Relation::SelfAdjoint: return "u = u*";
    case Relation::TrTauPlus: return "u^(Tr.tau) = u";
    case Relation::TrTauMinus: return "u^(Tr.tau) = -u";
    case Relation::TrTauStar: return "u^(Tr.tau) = u*";
    case Relation::SharpPlus: return "u^(#.Tr.tau) = u";
    case Relation::SharpMinus: return "u^(#.Tr.tau) = -u";
    case Relation::SharpStar: return "u^(#.Tr.tau) = u*";
  }
  return "?";
}

bool holds(const SpherePencil& p, Relation r) {
  switch (r) {
    case Relation::SelfAdjoint: return pencil_star(p) == p;
    case Relation::TrTauPlus: return apply_tr_tau(p) == p;
    case Relation::TrTauMinus: return apply_tr_tau(p) == pencil_neg(p);
    case Relation::TrTauStar: return apply_tr_tau(p) == pencil_star(p);
    default: break;
  }
  if (p.n % 2 != 0) return false;
  const SpherePencil s = apply_sharp_tr_tau(p);
  switch (r) {
    case Relation::SharpPlus: return s == p;
    case Relation::SharpMinus: return s == pencil_neg(p);
    case Relation::SharpStar: return s == pencil_star(p);
    default: return false;
  }
}

std::string to_string(const RowLabel& l) {
  std::string s = (l.theory == KTheory::KU ? "KU_" : "KO_") + std::to_string(l.degree);
  if (l.variant == RowVariant::Alt) s += " (alt)";
  return s;
}

RowLabel row_label_from_string(const std::string& text) {
  std::string s = text;
  RowVariant variant = RowVariant::Main;
  for (const char* suffix : {" (alt)", "-alt", ":alt", " alt", "(alt)"}) {
    const std::string suf = suffix;
    if (s.size() > suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0) {
      variant = RowVariant::Alt;
      s.resize(s.size() - suf.size());
      break;
    }
  }
  if (s.size() < 4 || (s.rfind("KO_", 0) != 0 && s.rfind("KU_", 0) != 0))
    throw DomainError("unrecognized K-group label '" + text + "'");
  const KTheory theory = s[1] == 'O' ? KTheory::KO : KTheory::KU;
  int degree = 0;
  try {
    std::size_t used = 0;
    degree = std::stoi(s.substr(3), &used);
    if (used != s.size() - 3) throw std::invalid_argument(s);
  } catch (const std::logic_error&) {
    throw DomainError("unrecognized K-group label '" + text + "'");
  }
  if (theory == KTheory::KU) {
    degree = ((degree % 2) + 2) % 2;
  } else {
    degree = mod8(degree);
    if (degree == 7) degree = -1;
  }
  RowLabel l{theory, degree, variant};
  symmetry_row(l);  // rejects alt variants that do not exist
  return l;
}

bool same_degree(const RowLabel& a, const RowLabel& b) {
  if (a.theory != b.theory) return false;
  const int p = a.theory == KTheory::KU ? 2 : 8;
  return ((a.degree - b.degree) % p + p) % p == 0;
}

const std::vector<SymmetryRow>& symmetry_rows() {
  using R = Relation;
  static const std::vector<SymmetryRow> rows = [] {
    const ExactMatrix diag_pm{{1, 0}, {0, -1}};
    const ExactMatrix w{{0, 1}, {-1, 0}};
    const ExactMatrix iw{{0, kImag}, {-kImag, 0}};
    const ExactMatrix one1 = ExactMatrix::identity(1);
    const ExactMatrix one2 = ExactMatrix::identity(2);
    return std::vector<SymmetryRow>{
        {ku(0), {R::SelfAdjoint}, 2, diag_pm},
        {ku(1), {}, 1, one1},
        {ko(-1), {R::TrTauPlus}, 1, one1},
        {ko(-1, RowVariant::Alt), {R::SharpMinus}, 2, w},
        {ko(0), {R::SelfAdjoint, R::TrTauPlus}, 2, diag_pm},
        {ko(1), {R::TrTauStar}, 1, one1},
        {ko(2), {R::SelfAdjoint, R::TrTauMinus}, 2, iw},
        {ko(3), {R::SharpPlus}, 2, one2},
        {ko(3, RowVariant::Alt), {R::TrTauMinus}, 2, w},
        {ko(4), {R::SelfAdjoint, R::SharpPlus}, 4, block_diag(one2, neg(one2))},
        {ko(5), {R::SharpStar}, 2, one2},
        {ko(6), {R::SelfAdjoint, R::SharpMinus}, 2, iw},
    };
  }();
  return rows;
}

const SymmetryRow& symmetry_row(const RowLabel& label) {
  for (const auto& r : symmetry_rows())
    if (r.label == label) return r;
  throw DomainError("no symmetry row " + to_string(label));
}

bool satisfies(const SpherePencil& p, const SymmetryRow& row) {
  return std::all_of(row.relations.begin(), row.relations.end(), [&](Relation r) { return holds(p, r); });
}

namespace {

// Any two of {u = u*, u^f = u, u^f = u*} imply the third, for each involution f.
std::set<Relation> implied(const std::vector<Relation>& rel) {
  std::set<Relation> s(rel.begin(), rel.end());
  auto close = [&](Relation plus, Relation star) {
    const int have = int(s.count(Relation::SelfAdjoint)) + int(s.count(plus)) + int(s.count(star));
    if (have >= 2) s.insert({Relation::SelfAdjoint, plus, star});
  };
  close(Relation::TrTauPlus, Relation::TrTauStar);
  close(Relation::SharpPlus, Relation::SharpStar);
  close(Relation::TrTauPlus, Relation::TrTauStar);  // u = u* may only have appeared in the sharp pass
  return s;
}

bool strictly_weaker(const SymmetryRow& a, const SymmetryRow& b) {
  const auto ca = implied(a.relations);
  const auto cb = implied(b.relations);
  return ca.size() < cb.size() && std::includes(cb.begin(), cb.end(), ca.begin(), ca.end());
}

}  // namespace

ClassifyResult classify(const SpherePencil& p) {
  if (auto cert = is_unitary_symbolic(p); !cert)
    throw ContractError("classify: pencil is not unitary (" + cert.failure + ")");
  ClassifyResult out;
  std::vector<const SymmetryRow*> sat;
  for (const auto& row : symmetry_rows()) {
    if (!satisfies(p, row)) continue;
    sat.push_back(&row);
    out.satisfied.push_back(row.label);
    out.size_divisible.push_back(p.n % row.block_quantum == 0);
  }
  for (const auto* a : sat) {
    const bool dominated = std::any_of(sat.begin(), sat.end(), [&](const SymmetryRow* b) { return strictly_weaker(*a, *b); });
    if (!dominated) out.most_specific.push_back(a->label);
  }
  return out;
}

SpherePencil stabilize(const SpherePencil& p, const SymmetryRow& row) {
  if (!satisfies(p, row)) throw ContractError("stabilize: pencil does not satisfy the relations of " + to_string(row.label));
  return pencil_block_diag(p, SpherePencil::constant_pencil(p.d, row.neutral));
}

}  // namespace ksphere
