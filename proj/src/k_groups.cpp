#include "ksphere/k_groups.hpp"

#include <array>

#include "ksphere/errors.hpp"

namespace ksphere {
namespace {

int mod(int a, int p) { return ((a % p) + p) % p; }

std::string render(const AbelianGroup& g, const char* z, const char* z2, const char* plus) {
  if (g.is_zero()) return "0";
  std::string s;
  auto term = [&](const char* base, int count) {
    if (count == 0) return;
    if (!s.empty()) s += plus;
    s += base;
    if (count > 1) s += "^" + std::to_string(count);
  };
  term(z, g.free_rank);
  term(z2, g.torsion2);
  return s;
}

}  // namespace

std::string AbelianGroup::to_string() const { return render(*this, "ℤ", "ℤ_2", " ⊕ "); }

std::string AbelianGroup::to_ascii() const { return render(*this, "Z", "Z_2", " + "); }

AbelianGroup operator+(const AbelianGroup& a, const AbelianGroup& b) {
  return {a.free_rank + b.free_rank, a.torsion2 + b.torsion2};
}

AbelianGroup ko_ring(int n) {
  static constexpr std::array<AbelianGroup, 8> table{kZ, kZ2, kZ2, kTrivialGroup, kZ, kTrivialGroup, kTrivialGroup, kTrivialGroup};
  return table[static_cast<std::size_t>(mod(n, 8))];
}

AbelianGroup ko_group(int d, int n) {
  if (d < 0) throw DomainError("sphere dimension must be non-negative, got " + std::to_string(d));
  if (d == 0) return mod(n, 2) == 0 ? kZ : kTrivialGroup;
  if (d == 1) {
    static constexpr std::array<AbelianGroup, 4> circle{kZ, kZ2, kTrivialGroup, kZ};
    return circle[static_cast<std::size_t>(mod(n, 4))];
  }
  return ko_ring(n) + ko_ring(n - d - 2);
}

AbelianGroup ku_group(int d, int n) {
  if (d < 0) throw DomainError("sphere dimension must be non-negative, got " + std::to_string(d));
  if (d % 2 == 1) return kZ;
  return mod(n, 2) == 0 ? AbelianGroup{2, 0} : kTrivialGroup;
}

AbelianGroup kko_hom(int d, int i) {
  if (d < 1) throw DomainError("kko_hom needs d >= 1, got " + std::to_string(d));
  if (d == 1) return ko_group(1, i - 1);
  return ko_ring(i) + ko_ring(i + d + 2);
}

int expected_generator_degree(int d) {
  if (d < 2) throw DomainError("expected_generator_degree needs d >= 2, got " + std::to_string(d));
  const int r = mod(d + 2, 8);
  return r == 7 ? -1 : r;
}

}  // namespace ksphere
