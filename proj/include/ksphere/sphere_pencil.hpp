#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ksphere/exact_matrix.hpp"
#include "ksphere/involutions.hpp"

namespace ksphere {

/// P(x) = C + Σ_{i=1}^{d+1} x_i M_i restricted to the unit sphere S^d ⊂ ℝ^{d+1}.
/// A missing constant means C = 0.
struct SpherePencil {
  int d = 0;
  std::size_t n = 0;
  std::vector<ExactMatrix> coefficients;
  std::optional<ExactMatrix> constant;

  // Validates that there are d+1 coefficients of a common size.
  static SpherePencil make(int d, std::vector<ExactMatrix> coefficients,
                           std::optional<ExactMatrix> constant = std::nullopt);
  static SpherePencil constant_pencil(int d, const ExactMatrix& c);

  ExactMatrix constant_or_zero() const;
};

// Pencils are equal when their d, sizes, coefficients and (zero-filled) constants agree.
bool operator==(const SpherePencil& a, const SpherePencil& b);

Eigen::MatrixXcd to_complex_matrix(const ExactMatrix& m);

/// C + Σ x_i M_i in double precision. Throws DimensionError unless x has
/// d+1 components and DomainError unless |Σ x_i² - 1| ≤ 1e-12.
Eigen::MatrixXcd evaluate(const SpherePencil& p, std::span<const double> x);

// Σ v_i M_i: the derivative of P along a tangent vector v.
Eigen::MatrixXcd directional_derivative(const SpherePencil& p, std::span<const double> v);

SpherePencil pencil_neg(const SpherePencil& p);
SpherePencil pencil_star(const SpherePencil& p);
SpherePencil pencil_right_mul(const SpherePencil& p, const ExactMatrix& w);
// V P V* coefficientwise.
SpherePencil pencil_conjugate(const SpherePencil& p, const ExactMatrix& v);
SpherePencil pencil_block_diag(const SpherePencil& p, const SpherePencil& q);
// Coefficientwise and constant-wise [[A, B], [C, D]].
SpherePencil pencil_block2x2(const SpherePencil& a, const SpherePencil& b, const SpherePencil& c,
                             const SpherePencil& d);
SpherePencil pencil_add(const SpherePencil& a, const SpherePencil& b);
SpherePencil pencil_scale(const SpherePencil& p, const DyadicGaussian& s);

/// f⊗τ with τ the antipodal substitution x ↦ -x and no complex conjugation:
/// M_i ↦ -f(M_i), C ↦ f(C).
SpherePencil apply_involution_tau(Involution kind, const SpherePencil& p);
inline SpherePencil apply_tr_tau(const SpherePencil& p) { return apply_involution_tau(Involution::Tr, p); }
inline SpherePencil apply_sharp_tr_tau(const SpherePencil& p) {
  return apply_involution_tau(Involution::SharpTr, p);
}

/// Pencil version of picture_convert: right multiplication by ±W.
SpherePencil picture_convert(const SpherePencil& u, PictureDirection direction);

struct UnitarityCertificate {
  bool unitary = false;
  // First violated coefficient identity, empty when unitary.
  std::string failure;
  explicit operator bool() const { return unitary; }
};

/// Decides P(x)P(x)* = I on all of S^d exactly through the coefficient
/// identities M_i C* + C M_i* = 0 and M_i M_j* + M_j M_i* = 2δ_ij (I - CC*).
UnitarityCertificate is_unitary_symbolic(const SpherePencil& p);

enum class Relation { SelfAdjoint, TrTauPlus, TrTauMinus, TrTauStar, SharpPlus, SharpMinus, SharpStar };

std::string to_string(Relation r);
// Exact, at coefficient level. Sharp relations are false for odd sizes.
bool holds(const SpherePencil& p, Relation r);

enum class KTheory { KU, KO };
enum class RowVariant { Main, Alt };

struct RowLabel {
  KTheory theory = KTheory::KO;
  int degree = 0;  // KU: 0..1, KO: -1..6
  RowVariant variant = RowVariant::Main;

  friend bool operator==(const RowLabel&, const RowLabel&) = default;
};

inline RowLabel ku(int degree) { return {KTheory::KU, degree, RowVariant::Main}; }
inline RowLabel ko(int degree, RowVariant v = RowVariant::Main) { return {KTheory::KO, degree, v}; }

// "KO_4", "KO_-1 (alt)", "KU_0"
std::string to_string(const RowLabel& l);
// Accepts the to_string forms plus "KO_-1-alt"/"KO_3:alt"; KO degrees are reduced mod 8 into -1..6.
RowLabel row_label_from_string(const std::string& s);
// Same KO/KU degree modulo the period, ignoring the variant.
bool same_degree(const RowLabel& a, const RowLabel& b);

/// One row of the unitary-picture table: the relations a unitary must satisfy
/// to define a class in that group, the size quantum n_i, and the neutral
/// element used for stabilization.
struct SymmetryRow {
  RowLabel label;
  std::vector<Relation> relations;
  std::size_t block_quantum = 1;
  ExactMatrix neutral;
};

// All twelve rows, ordered by (theory, degree, variant).
const std::vector<SymmetryRow>& symmetry_rows();
const SymmetryRow& symmetry_row(const RowLabel& label);

bool satisfies(const SpherePencil& p, const SymmetryRow& row);

struct ClassifyResult {
  // Every row whose relations hold, in table order.
  std::vector<RowLabel> satisfied;
  // Parallel to `satisfied`: whether the size is a multiple of n_i (reported, never enforced).
  std::vector<bool> size_divisible;
  // Satisfied rows not implied by a strictly stronger satisfied row; this is
  // the row (or rows) that identifies the pencil's group.
  std::vector<RowLabel> most_specific;
};

/// Throws ContractError when the pencil is not unitary.
ClassifyResult classify(const SpherePencil& p);

/// diag(P, I^(i)) as a pencil. Throws ContractError if P does not satisfy the row.
SpherePencil stabilize(const SpherePencil& p, const SymmetryRow& row);

}  // namespace ksphere
