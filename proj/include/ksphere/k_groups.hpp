#pragma once

#include <string>

namespace ksphere {

/// ℤ^free_rank ⊕ (ℤ_2)^torsion2. Equality is isomorphism.
struct AbelianGroup {
  int free_rank = 0;
  int torsion2 = 0;

  bool is_zero() const { return free_rank == 0 && torsion2 == 0; }
  bool has_free_summand() const { return free_rank > 0; }
  // "0", "ℤ", "ℤ^2 ⊕ ℤ_2"
  std::string to_string() const;
  // Same with Z and Z_2 spelled in ASCII.
  std::string to_ascii() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

AbelianGroup operator+(const AbelianGroup& a, const AbelianGroup& b);

inline constexpr AbelianGroup kTrivialGroup{0, 0};
inline constexpr AbelianGroup kZ{1, 0};
inline constexpr AbelianGroup kZ2{0, 1};

// KO_n of the reals, period 8.
AbelianGroup ko_ring(int n);

/// KO_n(𝔖^d). d = 0 and d = 1 are the complex numbers and the self-conjugate
/// circle; from d = 2 on the group is ko_ring(n) ⊕ ko_ring(n - d - 2).
/// Throws DomainError for d < 0.
AbelianGroup ko_group(int d, int n);

// KU_n(𝔖^d): ℤ^2 / 0 alternating for even d, ℤ in every degree for odd d.
AbelianGroup ku_group(int d, int n);

/// KKO_i(𝔖^d, ℝ). d = 1 gives KO_{i-1}(𝔖^1); d ≥ 2 gives ko_ring(i) ⊕ ko_ring(i + d + 2).
/// Throws DomainError for d < 1.
AbelianGroup kko_hom(int d, int i);

// (d + 2) mod 8, the KO degree carrying the free generator of the reduced
// part. Returned in -1..6 so it lines up with the symmetry-row labels.
// Throws DomainError for d < 2.
int expected_generator_degree(int d);

}  // namespace ksphere
