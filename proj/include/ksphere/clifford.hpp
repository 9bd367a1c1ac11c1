#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ksphere/config.hpp"
#include "ksphere/exact_matrix.hpp"
#include "ksphere/involutions.hpp"

namespace ksphere {

enum class Provenance { StandardGamma, Upsilon, Custom };

std::string to_string(Provenance p);
Provenance provenance_from_string(const std::string& s);

/// Sign of A under an involution f: Plus if f(A) = A, Minus if f(A) = -A,
/// None if neither holds (or f does not apply to A's size).
enum class Sign { Plus, Minus, None };

std::string to_string(Sign s);
Sign sign_under(Involution kind, const ExactMatrix& a);

/// Ordered list of k matrices of size 2^((k-1)/2), meant to be complex
/// k-Clifford generators. The constructor only checks shape; the algebraic
/// relations are checked by verify_clifford so that corrupted families can
/// still be loaded and reported on.
struct CliffordFamily {
  int k = 0;
  std::size_t n = 0;
  std::vector<ExactMatrix> generators;
  Provenance provenance = Provenance::Custom;
  std::optional<PhaseConvention> phase;

  static CliffordFamily make(std::vector<ExactMatrix> generators, Provenance provenance,
                             std::optional<PhaseConvention> phase = std::nullopt);

  // 1-based, matching the mathematical indexing of generators.
  const ExactMatrix& at(int i) const { return generators.at(static_cast<std::size_t>(i - 1)); }
};

struct SymmetryAudit {
  std::vector<Sign> tr;
  std::vector<Sign> sharp_tr;

  friend bool operator==(const SymmetryAudit&, const SymmetryAudit&) = default;
};

SymmetryAudit audit(const CliffordFamily& family);

struct VerificationReport {
  std::vector<bool> self_adjoint;
  std::vector<bool> unitary;
  // anticommutes[i][j]: G_i G_j + G_j G_i == 2 δ_ij I, 0-based.
  std::vector<std::vector<bool>> anticommutes;
  SymmetryAudit audit;

  bool all_pass() const;
  // Human-readable description of the first failed relation, if any.
  std::optional<std::string> first_failure() const;
};

VerificationReport verify_clifford(const CliffordFamily& family);

/// Standard inductive family: Γ_{1,1} = 1, the Pauli-type triple for k = 3,
/// then Γ_{i,k+2} = [[0, Γ_{i,k}], [Γ_{i,k}, 0]],
/// Γ_{k+1,k+2} = [[0, iI], [-iI, 0]], Γ_{k+2,k+2} = diag(I, -I).
/// Throws DomainError for even or non-positive k, ResourceError above k_cap.
CliffordFamily standard_gamma(int k, int k_cap = kDefaultKCap);

// Expected signs of the standard family under Tr and ♯⊗Tr.
Sign standard_tr_sign(int i);
Sign standard_sharp_tr_sign(int i);

struct SelectionSet {
  int k = 0;
  std::vector<int> indices;  // sorted, 1-based
};

/// Residue-dependent index set whose generators get replaced by complementary
/// products; always of size divisible by 4.
SelectionSet selection_set(int k);

/// For i in S replaces G_i by the ordered product (increasing j, left to
/// right) of G_j over j in S \ {i}, with the i-phase given by `phase`.
/// Generators outside S are unchanged. Throws ContractError when |S| is not
/// divisible by 4, an index is out of range, or (when `shared` is given) the
/// selected generators do not share one sign under that involution.
CliffordFamily tilde_transform(const CliffordFamily& family, const SelectionSet& s, PhaseConvention phase,
                               std::optional<Involution> shared = std::nullopt);

/// tilde_transform(standard_gamma(k), selection_set(k), phase) tagged as UPSILON.
CliffordFamily upsilon(int k, PhaseConvention phase = PhaseConvention::PerFactorI, int k_cap = kDefaultKCap);

struct ResidueSymmetry {
  Involution involution;
  Sign sign;
};

// The uniform sign every member of upsilon(k) carries, by k mod 8.
ResidueSymmetry upsilon_symmetry(int k);

}  // namespace ksphere
