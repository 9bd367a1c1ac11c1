#include "ksphere/generators.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

#include "ksphere/errors.hpp"

namespace ksphere {
namespace {

const DyadicGaussian kHalf{1, 0, 1};

SpherePencil pencil_over(const CliffordFamily& f, bool with_imag_coordinate) {
  std::vector<ExactMatrix> coeffs = f.generators;
  if (with_imag_coordinate) coeffs.push_back(scale(ExactMatrix::identity(f.n), kImag));
  const int d = static_cast<int>(coeffs.size()) - 1;
  return SpherePencil::make(d, std::move(coeffs));
}

CliffordFamily family_for(int k, bool real, PhaseConvention phase, int k_cap) {
  return real ? upsilon(k, phase, k_cap) : standard_gamma(k, k_cap);
}

// One entry "-w+ix" → coefficient per coordinate plus a constant.
void parse_form(const std::string& text, const std::string& coords, std::vector<DyadicGaussian>& coeff,
                DyadicGaussian& constant) {
  auto fail = [&](const std::string& why) { throw ParseError("bad linear form '" + text + "': " + why); };
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  if (pos == text.size()) fail("empty");
  bool first = true;
  while (pos < text.size()) {
    std::int64_t sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip_space();
    } else if (!first) {
      fail("expected + or -");
    }
    first = false;
    DyadicGaussian c = sign;
    bool imaginary = false;
    if (pos < text.size() && text[pos] == 'i') {
      c = c.times_i();
      imaginary = true;
      ++pos;
    }
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      std::int64_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        value = value * 10 + (text[pos++] - '0');
      c *= value;
      if (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) {
        const auto at = coords.find(text[pos]);
        if (at == std::string::npos) fail(std::string("unknown coordinate '") + text[pos] + "'");
        coeff[at] += c;
        ++pos;
      } else {
        constant += c;
      }
    } else if (pos < text.size() && coords.find(text[pos]) != std::string::npos) {
      coeff[coords.find(text[pos])] += c;
      ++pos;
    } else if (imaginary && (pos == text.size() || text[pos] == '+' || text[pos] == '-' ||
                             std::isspace(static_cast<unsigned char>(text[pos])))) {
      constant += c;  // a bare "i"
    } else if (pos == text.size()) {
      fail("sign without a term");
    } else {
      fail(std::string("unexpected '") + text[pos] + "'");
    }
    skip_space();
  }
}

GeneratorFixture pencil_fixture(int d, std::string name, RowLabel label, AbelianGroup group,
                                const std::string& coords, const std::vector<std::vector<std::string>>& rows) {
  SpherePencil p = pencil_from_forms(coords, rows);
  if (p.d != d) throw ContractError("fixture " + name + " has the wrong sphere dimension");
  const std::size_t n = p.n;
  return GeneratorFixture{d, std::move(name), label, group, n, std::move(p), {}};
}

GeneratorFixture sampled_fixture(std::string name, RowLabel label, AbelianGroup group, std::size_t n, PointFn f) {
  return GeneratorFixture{1, std::move(name), label, group, n, std::nullopt, std::move(f)};
}

const std::vector<std::vector<std::string>> kCircleX4{
    {"x", "y", "0", "0"}, {"y", "-x", "0", "0"}, {"0", "0", "1", "0"}, {"0", "0", "0", "1"}};
const std::vector<std::vector<std::string>> kTwoSphereBott{{"x", "y+iz"}, {"y-iz", "-x"}};
const std::vector<std::vector<std::string>> kThreeSphereY1{{"x+iw", "y+iz"}, {"y-iz", "-x+iw"}};
const std::vector<std::vector<std::string>> kFourSphereY0{{"v", "0", "x+iy", "w+iz"},
                                                          {"0", "v", "-w+iz", "x-iy"},
                                                          {"x-iy", "-w-iz", "-v", "0"},
                                                          {"w-iz", "x+iy", "0", "-v"}};

// Antisymmetric and symmetric parts of the S^4 Bott pencil.
SpherePencil four_sphere_a() {
  return pencil_from_forms("xyzwv", {{"0", "0", "iy", "iz"}, {"0", "0", "iz", "-iy"}, {"-iy", "-iz", "0", "0"},
                                     {"-iz", "iy", "0", "0"}});
}
SpherePencil four_sphere_b() {
  return pencil_from_forms("xyzwv", {{"v", "0", "x", "w"}, {"0", "v", "-w", "x"}, {"x", "-w", "-v", "0"},
                                     {"w", "x", "0", "-v"}});
}

SpherePencil doubled(const SpherePencil& a, const SpherePencil& b) {
  return pencil_block2x2(a, pencil_scale(b, kImag), pencil_scale(b, -kImag), a);
}

std::vector<GeneratorFixture> circle_fixtures() {
  const std::string c = "xy";
  std::vector<GeneratorFixture> out;
  out.push_back(pencil_fixture(1, "y_0", ku(0), kZ, c, {{"1", "0"}, {"0", "1"}}));
  out.push_back(pencil_fixture(1, "y_1", ku(1), kZ, c, {{"x+iy"}}));
  out.push_back(sampled_fixture("x_-1", ko(-1), kZ, 1, [](std::span<const double> x) {
    const std::complex<double> z(x[0], x[1]);
    Eigen::MatrixXcd m(1, 1);
    m(0, 0) = z * z;
    return m;
  }));
  out.push_back(pencil_fixture(1, "x_0", ko(0), kZ, c, {{"1", "0"}, {"0", "1"}}));
  out.push_back(pencil_fixture(1, "x_1", ko(1), kZ2, c, {{"-1"}}));
  out.push_back(sampled_fixture("x_3", ko(3), kZ, 2, [](std::span<const double> x) {
    const std::complex<double> z(x[0], x[1]);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(2, 2);
    m(x[1] >= 0 ? 0 : 1, x[1] >= 0 ? 0 : 1) = z * z;
    return m;
  }));
  out.push_back(pencil_fixture(1, "x_4", ko(4), kZ, c, kCircleX4));
  out.push_back(pencil_fixture(1, "x_5", ko(5), kZ2, c, kCircleX4));
  return out;
}

std::vector<GeneratorFixture> two_sphere_fixtures() {
  const std::string c = "xyz";
  std::vector<GeneratorFixture> out;
  out.push_back(pencil_fixture(2, "y_0", ku(0), kZ, c, kTwoSphereBott));
  out.push_back(pencil_fixture(
      2, "x_0", ko(0), kZ, c,
      {{"0", "iz", "ix", "iy"}, {"-iz", "0", "iy", "-ix"}, {"-ix", "-iy", "0", "iz"}, {"-iy", "ix", "-iz", "0"}}));
  out.push_back(pencil_fixture(2, "x_4", ko(4), kZ, c, kTwoSphereBott));
  out.push_back(pencil_fixture(2, "x_5", ko(5), kZ2, c, kTwoSphereBott));
  out.push_back(pencil_fixture(2, "x_6", ko(6), kZ2, c,
                               {{"0", "0", "ix", "-z+iy"},
                                {"0", "0", "z+iy", "-ix"},
                                {"-ix", "z-iy", "0", "0"},
                                {"-z-iy", "ix", "0", "0"}}));
  return out;
}

std::vector<GeneratorFixture> three_sphere_fixtures() {
  const std::string c = "xyzw";
  std::vector<GeneratorFixture> out;
  out.push_back(pencil_fixture(3, "y_1", ku(1), kZ, c, kThreeSphereY1));
  out.push_back(pencil_fixture(
      3, "x_1", ko(1), kZ, c,
      {{"iw", "iz", "ix", "iy"}, {"-iz", "iw", "iy", "-ix"}, {"-ix", "-iy", "iw", "iz"}, {"-iy", "ix", "-iz", "iw"}}));
  out.push_back(pencil_fixture(3, "x_5", ko(5), kZ, c, kThreeSphereY1));
  // [[0, B], [B*, 0]]; the lower block is B*, not -B*.
  out.push_back(pencil_fixture(3, "x_6", ko(6), kZ2, c,
                               {{"0", "0", "-w+ix", "-z+iy"},
                                {"0", "0", "z+iy", "-w-ix"},
                                {"-w-ix", "z-iy", "0", "0"},
                                {"-z-iy", "-w+ix", "0", "0"}}));
  out.push_back(pencil_fixture(3, "x_7", ko(-1), kZ2, c,
                               {{"0", "iz", "-w+ix", "iy"},
                                {"-iz", "0", "iy", "-w-ix"},
                                {"w-ix", "-iy", "0", "iz"},
                                {"-iy", "w+ix", "-iz", "0"}}));
  return out;
}

std::vector<GeneratorFixture> four_sphere_fixtures() {
  const std::string c = "xyzwv";
  std::vector<GeneratorFixture> out;
  out.push_back(pencil_fixture(4, "y_0", ku(0), kZ, c, kFourSphereY0));
  const SpherePencil a = four_sphere_a();
  const SpherePencil b = four_sphere_b();
  SpherePencil x0 = doubled(a, b);
  SpherePencil x2 = doubled(b, a);
  out.push_back(GeneratorFixture{4, "x_0", ko(0), kZ2, x0.n, x0, {}});
  out.push_back(GeneratorFixture{4, "x_2", ko(2), kZ, x2.n, x2, {}});
  out.push_back(pencil_fixture(4, "x_6", ko(6), kZ, c, kFourSphereY0));
  out.push_back(pencil_fixture(4, "x_7", ko(-1), kZ2, c,
                               {{"0", "-iv", "-w+iz", "-y-ix"},
                                {"iv", "0", "-y+ix", "w+iz"},
                                {"w-iz", "y-ix", "0", "iv"},
                                {"y+ix", "-w-iz", "-iv", "0"}}));
  return out;
}

NamedCheck from_fixture(const FixtureCheck& c) { return {c.name, c.ok(), c.detail}; }

}  // namespace

SpherePencil build_Q(int k, bool real, PhaseConvention phase, int k_cap) {
  return pencil_over(family_for(k, real, phase, k_cap), false);
}

SpherePencil build_U(int k, bool real, PhaseConvention phase, int k_cap) {
  return pencil_over(family_for(k, real, phase, k_cap), true);
}

SpherePencil pencil_from_forms(const std::string& coords, const std::vector<std::vector<std::string>>& rows) {
  if (coords.empty()) throw ParseError("no coordinates given");
  const std::size_t n = rows.size();
  if (n == 0) throw ParseError("empty matrix");
  const std::size_t m = coords.size();
  std::vector<ExactMatrix> coeffs(m, ExactMatrix(n));
  ExactMatrix constant(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n) throw ParseError("matrix of linear forms is not square");
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<DyadicGaussian> coeff(m);
      DyadicGaussian k;
      parse_form(rows[r][c], coords, coeff, k);
      for (std::size_t i = 0; i < m; ++i) coeffs[i](r, c) = coeff[i];
      constant(r, c) = k;
    }
  }
  std::optional<ExactMatrix> cst;
  if (!constant.is_zero()) cst = constant;
  return SpherePencil::make(static_cast<int>(m) - 1, std::move(coeffs), std::move(cst));
}

SampledUnitary GeneratorFixture::as_sampled() const {
  if (pencil) return SampledUnitary::from_pencil(*pencil);
  return SampledUnitary::from_function(d, n, sampled);
}

std::vector<GeneratorFixture> fixtures(int d) {
  switch (d) {
    case 1: return circle_fixtures();
    case 2: return two_sphere_fixtures();
    case 3: return three_sphere_fixtures();
    case 4: return four_sphere_fixtures();
    default: throw DomainError("fixtures exist for d = 1..4, got d = " + std::to_string(d));
  }
}

const GeneratorFixture& find_fixture(const std::vector<GeneratorFixture>& list, const std::string& name) {
  for (const auto& f : list)
    if (f.name == name) return f;
  throw DomainError("no fixture named " + name);
}

SpherePencil s3_x6_as_printed() {
  return pencil_from_forms("xyzw", {{"0", "0", "-w+ix", "-z+iy"},
                                    {"0", "0", "z+iy", "-w-ix"},
                                    {"w+ix", "-z+iy", "0", "0"},
                                    {"z+iy", "w-ix", "0", "0"}});
}

double sampled_relation_residual(const PointFn& f, std::span<const double> x, Relation r) {
  const Eigen::MatrixXcd u = f(x);
  if (r == Relation::SelfAdjoint) return max_abs(u - u.adjoint());
  std::vector<double> minus_x(x.begin(), x.end());
  for (double& v : minus_x) v = -v;
  const bool tr = r == Relation::TrTauPlus || r == Relation::TrTauMinus || r == Relation::TrTauStar;
  if (!tr && u.rows() % 2 != 0) return INFINITY;
  const Eigen::MatrixXcd image = numeric_transpose_or_sharp(tr ? Involution::Tr : Involution::SharpTr, f(minus_x));
  switch (r) {
    case Relation::TrTauPlus:
    case Relation::SharpPlus: return max_abs(image - u);
    case Relation::TrTauMinus:
    case Relation::SharpMinus: return max_abs(image + u);
    default: return max_abs(image - u.adjoint());
  }
}

FixtureCheck check_fixture(const GeneratorFixture& f) {
  FixtureCheck c;
  c.name = f.name + " on S^" + std::to_string(f.d) + " in " + to_string(f.label);
  const SymmetryRow& row = symmetry_row(f.label);
  if (f.pencil) {
    const auto cert = is_unitary_symbolic(*f.pencil);
    c.unitary = cert.unitary;
    c.row_ok = satisfies(*f.pencil, row);
    if (!c.unitary) c.detail = cert.failure;
    else if (!c.row_ok) c.detail = "relations of " + to_string(f.label) + " fail";
    return c;
  }
  double worst_unitary = 0, worst_relation = 0;
  const auto n = static_cast<Eigen::Index>(f.n);
  for (int j = 0; j < kSampledFixturePoints; ++j) {
    const double t = 2 * M_PI * j / kSampledFixturePoints;
    const std::array<double, 2> x{std::cos(t), std::sin(t)};
    const Eigen::MatrixXcd u = f.sampled(x);
    worst_unitary = std::max(worst_unitary, max_abs(u * u.adjoint() - Eigen::MatrixXcd::Identity(n, n)));
    for (Relation r : row.relations) worst_relation = std::max(worst_relation, sampled_relation_residual(f.sampled, x, r));
  }
  c.unitary = worst_unitary <= kSampledFixtureTolerance;
  c.row_ok = worst_relation <= kSampledFixtureTolerance;
  std::ostringstream os;
  os << "sampled at " << kSampledFixturePoints << " points: unitarity residual " << worst_unitary
     << ", relation residual " << worst_relation;
  c.detail = os.str();
  return c;
}

namespace {

void require_self_adjoint_unitary(const SpherePencil& u, const char* what) {
  if (auto cert = is_unitary_symbolic(u); !cert) throw ContractError(std::string(what) + ": input is not unitary (" + cert.failure + ")");
  if (!holds(u, Relation::SelfAdjoint)) throw ContractError(std::string(what) + ": input is not self-adjoint");
}

}  // namespace

SpherePencil r0_transform(const SpherePencil& u) {
  require_self_adjoint_unitary(u, "r0_transform");
  const SpherePencil t = apply_tr_tau(u);
  const SpherePencil a = pencil_scale(pencil_add(u, t), kHalf);
  const SpherePencil b = pencil_scale(pencil_add(u, pencil_neg(t)), kHalf);
  return doubled(a, b);
}

SpherePencil r6_transform(const SpherePencil& u) {
  if (u.n % 2 != 0) throw ContractError("r6_transform: input size must be even");
  require_self_adjoint_unitary(u, "r6_transform");
  const SpherePencil s = apply_sharp_tr_tau(u);
  const SpherePencil a = pencil_scale(pencil_add(u, pencil_neg(s)), kHalf);
  const SpherePencil b = pencil_scale(pencil_add(u, s), kHalf);
  return doubled(a, b);
}

ExactMatrix r0_fixture_permutation() { return ExactMatrix::identity(4); }
ExactMatrix r6_fixture_permutation() { return ExactMatrix::identity(4); }

LabeledPencil eta4(const SpherePencil& u) {
  if (!satisfies(u, symmetry_row(ko(4)))) throw ContractError("eta4: input does not satisfy the KO_4 relations");
  return {u, ko(5)};
}

LabeledPencil complexify(const SpherePencil& u) { return {u, holds(u, Relation::SelfAdjoint) ? ku(0) : ku(1)}; }

CliffordFamily quaternionic_upsilon5() {
  const ExactMatrix zero = ExactMatrix::zero(2);
  const ExactMatrix one = ExactMatrix::identity(2);
  const std::vector<ExactMatrix> sigma{
      ExactMatrix{{kImag, 0}, {0, -kImag}},
      ExactMatrix{{0, 1}, {-1, 0}},
      ExactMatrix{{0, kImag}, {kImag, 0}},
  };
  std::vector<ExactMatrix> gens;
  for (const auto& s : sigma) gens.push_back(block2x2(zero, s, adjoint(s), zero));
  gens.push_back(block2x2(zero, one, one, zero));
  gens.push_back(block_diag(one, neg(one)));
  return CliffordFamily::make(std::move(gens), Provenance::Custom);
}

std::vector<NamedCheck> table_checks(int d) {
  const auto list = fixtures(d);
  std::vector<NamedCheck> out;
  for (const auto& f : list) out.push_back(from_fixture(check_fixture(f)));
  auto pencil_of = [&](const char* name) { return *find_fixture(list, name).pencil; };
  if (d == 1 || d == 2) {
    const LabeledPencil e = eta4(pencil_of("x_4"));
    out.push_back({"eta4 carries x_4 to x_5", e.pencil == pencil_of("x_5") && e.label == ko(5), ""});
  }
  if (d == 2) {
    const SpherePencil y0 = pencil_of("y_0");
    out.push_back({"r0(y_0) equals x_0", pencil_conjugate(r0_transform(y0), r0_fixture_permutation()) == pencil_of("x_0"), ""});
    out.push_back({"r6(y_0) equals x_6", pencil_conjugate(r6_transform(y0), r6_fixture_permutation()) == pencil_of("x_6"), ""});
  }
  if (d == 3) {
    const LabeledPencil c = complexify(pencil_of("x_5"));
    out.push_back({"complexify(x_5) equals y_1", c.pencil == pencil_of("y_1") && c.label == ku(1), ""});
  }
  if (d == 4) {
    const CliffordFamily ups = quaternionic_upsilon5();
    const VerificationReport rep = verify_clifford(ups);
    bool all_sharp_plus = true;
    for (Sign s : rep.audit.sharp_tr) all_sharp_plus &= s == Sign::Plus;
    out.push_back({"quaternionic 5-generator family is Clifford and sharp-fixed", rep.all_pass() && all_sharp_plus,
                   rep.first_failure().value_or("")});
    // y_0 in the coordinate order (x, y, z, w, v) uses generators 4, 1, 3, 2, 5.
    const SpherePencil q = SpherePencil::make(4, {ups.at(4), ups.at(1), ups.at(3), ups.at(2), ups.at(5)});
    out.push_back({"y_0 is the pencil over the quaternionic family", q == pencil_of("y_0"), ""});
  }
  return out;
}

}  // namespace ksphere
