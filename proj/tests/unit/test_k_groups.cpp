#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ksphere/errors.hpp"
#include "ksphere/k_groups.hpp"
#include "oracles.hpp"

using namespace ksphere;

TEST_CASE("coefficient ring") {
  for (int n = 0; n < 8; ++n) CHECK(ko_ring(n) == oracle::kKoPoint[static_cast<std::size_t>(n)]);
  CHECK(ko_ring(1) == kZ2);
  CHECK(ko_ring(-4) == kZ);
  CHECK(ko_ring(3) == kTrivialGroup);
  for (int n = -24; n < 24; ++n) CHECK(ko_ring(n) == ko_ring(n + 8));
}

TEST_CASE("real groups of spheres against the typed table") {
  for (int d = 0; d <= 4; ++d)
    for (int n = 0; n < 8; ++n) {
      CAPTURE(d);
      CAPTURE(n);
      CHECK(ko_group(d, n) == oracle::kKoSphere[static_cast<std::size_t>(d)][static_cast<std::size_t>(n)]);
    }
  CHECK(ko_group(3, 1) == kZ2 + kZ);
  CHECK(ko_group(2, 0) == AbelianGroup{2, 0});
  CHECK(ko_group(4, 2) == kZ2 + kZ);
  CHECK_THROWS_AS(ko_group(-1, 0), DomainError);
}

TEST_CASE("complex groups of spheres against the typed table") {
  for (int d = 0; d <= 4; ++d)
    for (int n = 0; n < 8; ++n) {
      CAPTURE(d);
      CAPTURE(n);
      CHECK(ku_group(d, n) == oracle::kKuSphere[static_cast<std::size_t>(d)][static_cast<std::size_t>(n)]);
    }
  CHECK(ku_group(3, 0) == kZ);
  CHECK_THROWS_AS(ku_group(-2, 0), DomainError);
}

TEST_CASE("periodicity") {
  for (int d = 0; d <= 9; ++d)
    for (int n = -16; n < 16; ++n) {
      CHECK(ko_group(d, n) == ko_group(d, n + 8));
      CHECK(ku_group(d, n) == ku_group(d, n + 2));
    }
}

TEST_CASE("homomorphism groups") {
  CHECK(kko_hom(2, 0) == kZ + kZ);
  CHECK(kko_hom(1, 1) == kZ);
  CHECK(kko_hom(3, 3) == kZ);
  for (int i = 0; i < 8; ++i) {
    CHECK(kko_hom(1, i) == oracle::kKoSphere[1][static_cast<std::size_t>((i + 7) % 8)]);
    for (int d = 2; d <= 9; ++d) CHECK(kko_hom(d, i) == ko_ring(i) + ko_ring(i + d + 2));
  }
  CHECK_THROWS_AS(kko_hom(0, 0), DomainError);
}

TEST_CASE("generator degree") {
  CHECK(expected_generator_degree(6) == 0);
  CHECK(expected_generator_degree(3) == 5);
  CHECK(expected_generator_degree(2) == 4);
  CHECK(expected_generator_degree(5) == -1);
  CHECK(expected_generator_degree(13) == -1);
  CHECK_THROWS_AS(expected_generator_degree(1), DomainError);
  // the reduced free summand sits in that degree
  for (int d = 2; d <= 12; ++d) {
    const int g = expected_generator_degree(d);
    CHECK(ko_group(d, g).free_rank >= 1);
  }
}

TEST_CASE("group arithmetic and text") {
  CHECK((kZ + kZ2) == AbelianGroup{1, 1});
  CHECK(kTrivialGroup.is_zero());
  CHECK(kZ.has_free_summand());
  CHECK_FALSE(kZ2.has_free_summand());
  CHECK(kTrivialGroup.to_string() == "0");
  CHECK((kZ + kZ2).to_string() == "ℤ ⊕ ℤ_2");
  CHECK(AbelianGroup{2, 1}.to_string() == "ℤ^2 ⊕ ℤ_2");
  CHECK(AbelianGroup{2, 1}.to_ascii() == "Z^2 + Z_2");
}
