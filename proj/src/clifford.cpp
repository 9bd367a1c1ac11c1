#include "ksphere/clifford.hpp"

#include <algorithm>
#include <sstream>

#include "ksphere/errors.hpp"

namespace ksphere {
namespace {

void require_odd_k(int k, const char* where) {
  if (k < 1 || k % 2 == 0) {
    std::ostringstream os;
    os << where << ": k must be a positive odd integer, got " << k;
    throw DomainError(os.str());
  }
}

std::size_t clifford_size(int k) { return std::size_t{1} << ((k - 1) / 2); }

int mod8(int k) { return ((k % 8) + 8) % 8; }

}  // namespace

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::StandardGamma: return "STANDARD_GAMMA";
    case Provenance::Upsilon: return "UPSILON";
    case Provenance::Custom: return "CUSTOM";
  }
  return "CUSTOM";
}

Provenance provenance_from_string(const std::string& s) {
  if (s == "STANDARD_GAMMA") return Provenance::StandardGamma;
  if (s == "UPSILON") return Provenance::Upsilon;
  if (s == "CUSTOM") return Provenance::Custom;
  throw ParseError("unknown provenance '" + s + "'");
}

std::string to_string(Sign s) {
  switch (s) {
    case Sign::Plus: return "+";
    case Sign::Minus: return "-";
    case Sign::None: return "none";
  }
  return "none";
}

Sign sign_under(Involution kind, const ExactMatrix& a) {
  if (kind == Involution::SharpTr && a.size() % 2 != 0) return Sign::None;
  const ExactMatrix fa = apply(kind, a);
  if (fa == a) return Sign::Plus;
  if (fa == neg(a)) return Sign::Minus;
  return Sign::None;
}

CliffordFamily CliffordFamily::make(std::vector<ExactMatrix> generators, Provenance provenance,
                                    std::optional<PhaseConvention> phase) {
  const int k = static_cast<int>(generators.size());
  require_odd_k(k, "CliffordFamily");
  const std::size_t n = clifford_size(k);
  for (const auto& g : generators) {
    if (g.size() != n) {
      std::ostringstream os;
      os << "CliffordFamily: k = " << k << " needs " << n << "x" << n << " generators, got " << g.size();
      throw DimensionError(os.str());
    }
  }
  return CliffordFamily{k, n, std::move(generators), provenance, phase};
}

SymmetryAudit audit(const CliffordFamily& family) {
  SymmetryAudit a;
  for (const auto& g : family.generators) {
    a.tr.push_back(sign_under(Involution::Tr, g));
    a.sharp_tr.push_back(sign_under(Involution::SharpTr, g));
  }
  return a;
}

bool VerificationReport::all_pass() const { return !first_failure().has_value(); }

std::optional<std::string> VerificationReport::first_failure() const {
  for (std::size_t i = 0; i < self_adjoint.size(); ++i) {
    if (!self_adjoint[i]) return "generator " + std::to_string(i + 1) + " is not self-adjoint";
    if (!unitary[i]) return "generator " + std::to_string(i + 1) + " is not unitary";
  }
  for (std::size_t i = 0; i < anticommutes.size(); ++i)
    for (std::size_t j = i; j < anticommutes[i].size(); ++j)
      if (!anticommutes[i][j]) {
        std::ostringstream os;
        os << "G_" << i + 1 << " G_" << j + 1 << " + G_" << j + 1 << " G_" << i + 1 << " != "
           << (i == j ? "2I" : "0");
        return os.str();
      }
  return std::nullopt;
}

VerificationReport verify_clifford(const CliffordFamily& family) {
  const std::size_t k = family.generators.size();
  VerificationReport r;
  r.self_adjoint.resize(k);
  r.unitary.resize(k);
  r.anticommutes.assign(k, std::vector<bool>(k, false));
  const ExactMatrix two_id = scale(ExactMatrix::identity(family.n), 2);
  const ExactMatrix zero = ExactMatrix::zero(family.n);
  for (std::size_t i = 0; i < k; ++i) {
    const ExactMatrix& g = family.generators[i];
    r.self_adjoint[i] = is_self_adjoint(g);
    r.unitary[i] = is_unitary(g);
    for (std::size_t j = i; j < k; ++j) {
      const bool ok = anticommutator(g, family.generators[j]) == (i == j ? two_id : zero);
      r.anticommutes[i][j] = ok;
      r.anticommutes[j][i] = ok;
    }
  }
  r.audit = audit(family);
  return r;
}

CliffordFamily standard_gamma(int k, int k_cap) {
  require_odd_k(k, "standard_gamma");
  if (k > k_cap) {
    std::ostringstream os;
    os << "standard_gamma: k = " << k << " exceeds the configured cap " << k_cap;
    throw ResourceError(os.str());
  }
  std::vector<ExactMatrix> gens;
  if (k == 1) {
    gens.push_back(ExactMatrix::identity(1));
    return CliffordFamily::make(std::move(gens), Provenance::StandardGamma);
  }
  gens = {ExactMatrix{{0, 1}, {1, 0}}, ExactMatrix{{0, kImag}, {-kImag, 0}}, ExactMatrix{{1, 0}, {0, -1}}};
  for (int m = 3; m < k; m += 2) {
    const std::size_t n = gens.front().size();
    const ExactMatrix id = ExactMatrix::identity(n);
    const ExactMatrix zero = ExactMatrix::zero(n);
    std::vector<ExactMatrix> next;
    next.reserve(gens.size() + 2);
    for (const auto& g : gens) next.push_back(block2x2(zero, g, g, zero));
    next.push_back(block2x2(zero, scale(id, kImag), scale(id, -kImag), zero));
    next.push_back(block2x2(id, zero, zero, neg(id)));
    gens = std::move(next);
  }
  return CliffordFamily::make(std::move(gens), Provenance::StandardGamma);
}

Sign standard_tr_sign(int i) { return i % 2 == 1 ? Sign::Plus : Sign::Minus; }

Sign standard_sharp_tr_sign(int i) { return i <= 3 ? Sign::Minus : standard_tr_sign(i); }

SelectionSet selection_set(int k) {
  require_odd_k(k, "selection_set");
  SelectionSet s{k, {}};
  const int r = mod8(k);
  for (int j = 1; j <= k; ++j) {
    bool take = false;
    switch (r) {
      case 7: take = j % 2 == 1; break;
      case 1: take = j % 2 == 0; break;
      case 3: take = j % 2 == 1 && j >= 5; break;
      case 5: take = j % 2 == 0 || j <= 3; break;
      default: break;
    }
    if (take) s.indices.push_back(j);
  }
  return s;
}

CliffordFamily tilde_transform(const CliffordFamily& family, const SelectionSet& s, PhaseConvention phase,
                               std::optional<Involution> shared) {
  if (s.indices.size() % 4 != 0) {
    std::ostringstream os;
    os << "tilde_transform: |S| = " << s.indices.size() << " is not divisible by 4";
    throw ContractError(os.str());
  }
  if (!std::is_sorted(s.indices.begin(), s.indices.end()) ||
      std::adjacent_find(s.indices.begin(), s.indices.end()) != s.indices.end())
    throw ContractError("tilde_transform: S must be strictly increasing");
  for (int j : s.indices)
    if (j < 1 || j > family.k) throw ContractError("tilde_transform: index out of range");
  if (shared && !s.indices.empty()) {
    const Sign first = sign_under(*shared, family.at(s.indices.front()));
    for (int j : s.indices)
      if (first == Sign::None || sign_under(*shared, family.at(j)) != first)
        throw ContractError("tilde_transform: selected generators do not share a sign under " +
                            std::string(to_string(*shared)));
  }
  if (s.indices.empty()) return family;

  // |S \ {i}| = |S| - 1 ≡ 3 (mod 4), so the per-factor phase is i^3 = -i.
  const DyadicGaussian prefactor = phase == PhaseConvention::SingleI ? kImag : -kImag;

  std::vector<ExactMatrix> out = family.generators;
  for (int i : s.indices) {
    ExactMatrix prod = ExactMatrix::identity(family.n);
    for (int j : s.indices)
      if (j != i) prod = mul(prod, family.at(j));
    out[static_cast<std::size_t>(i - 1)] = scale(prod, prefactor);
  }
  return CliffordFamily{family.k, family.n, std::move(out), Provenance::Custom, phase};
}

CliffordFamily upsilon(int k, PhaseConvention phase, int k_cap) {
  CliffordFamily f = tilde_transform(standard_gamma(k, k_cap), selection_set(k), phase);
  f.provenance = Provenance::Upsilon;
  f.phase = phase;
  return f;
}

ResidueSymmetry upsilon_symmetry(int k) {
  require_odd_k(k, "upsilon_symmetry");
  switch (mod8(k)) {
    case 7: return {Involution::Tr, Sign::Minus};
    case 1: return {Involution::Tr, Sign::Plus};
    case 3: return {Involution::SharpTr, Sign::Minus};
    default: return {Involution::SharpTr, Sign::Plus};
  }
}

}  // namespace ksphere
