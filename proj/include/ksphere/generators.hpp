#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ksphere/clifford.hpp"
#include "ksphere/invariants.hpp"
#include "ksphere/k_groups.hpp"
#include "ksphere/sphere_pencil.hpp"

namespace ksphere {

/// Q_{k-1}(x) = Σ x_i G_i on S^{k-1}, with G the symmetry-adapted family when
/// `real` and the standard family otherwise.
SpherePencil build_Q(int k, bool real, PhaseConvention phase = PhaseConvention::PerFactorI, int k_cap = kDefaultKCap);
/// U_k(x) = Σ x_i G_i + x_{k+1} i·I on S^k.
SpherePencil build_U(int k, bool real, PhaseConvention phase = PhaseConvention::PerFactorI, int k_cap = kDefaultKCap);

/// Pencil from a grid of linear forms such as "y+iz", "-w-ix", "1" or "0".
/// `coords` names the ambient coordinates in order; a bare digit term goes to
/// the constant. Throws ParseError on malformed entries.
SpherePencil pencil_from_forms(const std::string& coords, const std::vector<std::vector<std::string>>& rows);

/// Unitary representing a generator of one K-group of a low-dimensional
/// sphere. Most are degree-one pencils; two circle generators are not and
/// carry a closed-form evaluator instead.
struct GeneratorFixture {
  int d = 0;
  std::string name;  // "x_4", "y_0", ...
  RowLabel label;
  AbelianGroup group;  // the group (reduced part for d ≥ 2) it generates
  std::size_t n = 0;
  std::optional<SpherePencil> pencil;
  PointFn sampled;

  bool is_pencil() const { return pencil.has_value(); }
  SampledUnitary as_sampled() const;
};

// Every listed generator for d ∈ {1, 2, 3, 4}; DomainError otherwise.
std::vector<GeneratorFixture> fixtures(int d);
const GeneratorFixture& find_fixture(const std::vector<GeneratorFixture>& list, const std::string& name);

// The S^3 KO_6 generator exactly as it is commonly printed, with the lower
// block carrying the wrong sign. It is not self-adjoint; kept to document
// why the fixture list uses the corrected form.
SpherePencil s3_x6_as_printed();

struct FixtureCheck {
  std::string name;
  bool unitary = false;
  bool row_ok = false;
  std::string detail;

  bool ok() const { return unitary && row_ok; }
};

inline constexpr int kSampledFixturePoints = 10000;
inline constexpr double kSampledFixtureTolerance = 1e-10;

/// Pencils: exact unitarity and row relations. Closed-form fixtures: the
/// same identities at 10^4 circle points within 1e-10 in max-norm.
FixtureCheck check_fixture(const GeneratorFixture& f);

// Max-norm residual of one relation for a sampled function at one point.
double sampled_relation_residual(const PointFn& f, std::span<const double> x, Relation r);

/// r_0: [[a, ib], [-ib, a]] with a = (u + u')/2, b = (u - u')/2 and u' the
/// transpose-antipode image of u. Needs a self-adjoint unitary.
SpherePencil r0_transform(const SpherePencil& u);
/// r_6: the same block shape with a = (u - u')/2, b = (u + u')/2 and u' the
/// quaternionic-antipode image. Needs an even-size self-adjoint unitary.
SpherePencil r6_transform(const SpherePencil& u);

// Signed permutations P with P r(y_0) P^T equal to the listed S^2 fixtures.
// Both turn out to be the identity: the block formula already produces the
// printed coordinate order.
ExactMatrix r0_fixture_permutation();
ExactMatrix r6_fixture_permutation();

struct LabeledPencil {
  SpherePencil pencil;
  RowLabel label;
};

// Same matrices, relabeled KO_4 → KO_5. ContractError unless the KO_4 row holds.
LabeledPencil eta4(const SpherePencil& u);
// Same matrices, labeled KU_0 when self-adjoint and KU_1 otherwise.
LabeledPencil complexify(const SpherePencil& u);

/// The five 4×4 generators Υ_i = [[0, σ_i], [σ_i*, 0]] (i = 1, 2, 3),
/// [[0, 1], [1, 0]] and diag(1, -1) in 2×2 blocks, with
/// σ_1 = diag(i, -i), σ_2 = [[0, 1], [-1, 0]], σ_3 = [[0, i], [i, 0]].
/// Every one is fixed by ♯⊗Tr.
CliffordFamily quaternionic_upsilon5();

struct NamedCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Fixture checks plus the transformation identities that relate fixtures on S^d.
std::vector<NamedCheck> table_checks(int d);

}  // namespace ksphere
