#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <limits>

#include "ksphere/errors.hpp"
#include "ksphere/exact_matrix.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace ksphere;
using testing_support::random_dyadic;
using testing_support::random_matrix;

TEST_SUITE("dyadic") {
  TEST_CASE("values are stored in lowest terms") {
    const DyadicGaussian h(2, 4, 2);
    CHECK(h.re_num() == 1);
    CHECK(h.im_num() == 2);
    CHECK(h.shift() == 1);
    CHECK(h.is_canonical());
    CHECK(DyadicGaussian(0, 0, 7).shift() == 0);
    CHECK(DyadicGaussian(8, 0, 3) == DyadicGaussian(1));
    CHECK(DyadicGaussian(1, 1, 1) == DyadicGaussian(2, 2, 2));
  }

  TEST_CASE("canonical is idempotent on random input") {
    for (int t = 0; t < 500; ++t) {
      const auto z = random_dyadic(1000, 10);
      CHECK(z.is_canonical());
      CHECK(canonical(z.re_num(), z.im_num(), z.shift()) == z);
      const auto scaled = canonical(z.re_num() * 4, z.im_num() * 4, z.shift() + 2);
      CHECK(scaled == z);
    }
  }

  TEST_CASE("arithmetic") {
    const DyadicGaussian half(1, 0, 1);
    CHECK(half + half == DyadicGaussian(1));
    CHECK(kImag * kImag == DyadicGaussian(-1));
    CHECK(DyadicGaussian(1, 1, 1) * DyadicGaussian(1, -1, 1) == half);
    CHECK(DyadicGaussian(3, 4).conj() == DyadicGaussian(3, -4));
    CHECK(DyadicGaussian(3, 4).times_i() == DyadicGaussian(-4, 3));
    CHECK(DyadicGaussian(3).div_pow2(2) == DyadicGaussian(3, 0, 2));
    CHECK(DyadicGaussian(1, -1, 1).to_complex() == std::complex<double>(0.5, -0.5));
  }

  TEST_CASE("ring laws on random values") {
    for (int t = 0; t < 300; ++t) {
      const auto a = random_dyadic(), b = random_dyadic(), c = random_dyadic();
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK((a * b).conj() == a.conj() * b.conj());
      CHECK(a - a == DyadicGaussian(0));
    }
  }

  TEST_CASE("text form") {
    CHECK(DyadicGaussian(0).to_string() == "0");
    CHECK(kImag.to_string() == "i");
    CHECK((-kImag).to_string() == "-i");
    CHECK(DyadicGaussian(1, -1, 1).to_string() == "(1-i)/2");
    CHECK(DyadicGaussian(3, 0, 2).to_string() == "3/4");
  }

  TEST_CASE("overflow is reported, never wrapped") {
    const std::int64_t big = std::numeric_limits<std::int64_t>::max() / 2 + 1;
    CHECK_THROWS_AS(DyadicGaussian(big) + DyadicGaussian(big), OverflowError);
    CHECK_THROWS_AS(DyadicGaussian(big) * DyadicGaussian(4), OverflowError);
    CHECK_THROWS_AS(DyadicGaussian(1, 0, 62) * DyadicGaussian(1, 0, 1), OverflowError);
    CHECK_THROWS_AS(DyadicGaussian(1, 0, -1), DomainError);
  }
}

TEST_SUITE("exact_matrix") {
  TEST_CASE("products") {
    const auto i2 = ExactMatrix::identity(2);
    CHECK(i2 * i2 == i2);
    CHECK(oracle::gamma3(1) * oracle::gamma3(2) == ExactMatrix{{-kImag, 0}, {0, kImag}});
    CHECK(oracle::gamma3(1) * oracle::gamma3(1) == i2);
  }

  TEST_CASE("transpose, adjoint, block_diag") {
    CHECK(transpose(oracle::gamma3(2)) == -oracle::gamma3(2));
    CHECK(adjoint(scale(ExactMatrix::identity(2), kImag)) == scale(ExactMatrix::identity(2), -kImag));
    CHECK(block_diag(oracle::gamma3(3), ExactMatrix::identity(2)) ==
          ExactMatrix{{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  }

  TEST_CASE("kron and block2x2 layout") {
    const ExactMatrix a{{1, 2}, {3, 4}};
    const auto k = kron(a, ExactMatrix::identity(2));
    CHECK(k(0, 2) == DyadicGaussian(2));
    CHECK(k(3, 1) == DyadicGaussian(3));
    const auto z = ExactMatrix::zero(2), i2 = ExactMatrix::identity(2);
    CHECK(block2x2(i2, z, z, i2) == ExactMatrix::identity(4));
  }

  TEST_CASE("predicates") {
    CHECK(is_self_adjoint(oracle::gamma3(2)));
    CHECK(is_unitary(oracle::gamma3(2)));
    CHECK_FALSE(is_unitary(scale(ExactMatrix::identity(2), 2)));
    CHECK(ExactMatrix::identity(3).is_identity());
    CHECK(ExactMatrix::zero(3).is_zero());
    CHECK_FALSE(oracle::gamma3(2).is_real());
    const ExactMatrix h{{DyadicGaussian(1, 1, 1), DyadicGaussian(1, -1, 1)},
                        {DyadicGaussian(1, -1, 1), DyadicGaussian(1, 1, 1)}};
    CHECK(is_unitary(h));
  }

  TEST_CASE("shape errors") {
    CHECK_THROWS_AS(ExactMatrix(0), DimensionError);
    CHECK_THROWS_AS(ExactMatrix::identity(2) * ExactMatrix::identity(3), DimensionError);
    CHECK_THROWS_AS(ExactMatrix::identity(2) + ExactMatrix::identity(3), DimensionError);
    CHECK_THROWS_AS(ExactMatrix::from_rows({{1, 2}, {3}}), DimensionError);
    CHECK_THROWS_AS(block2x2(ExactMatrix::identity(2), ExactMatrix::identity(2), ExactMatrix::identity(2),
                             ExactMatrix::identity(3)),
                    DimensionError);
  }

  TEST_CASE("involution laws on random matrices") {
    for (int t = 0; t < 100; ++t) {
      const std::size_t n = static_cast<std::size_t>(testing_support::uniform_int(1, 5));
      const auto a = random_matrix(n), b = random_matrix(n);
      CHECK(transpose(a * b) == transpose(b) * transpose(a));
      CHECK(adjoint(a * b) == adjoint(b) * adjoint(a));
      CHECK(conj(a * b) == conj(a) * conj(b));
      CHECK(transpose(transpose(a)) == a);
      CHECK(adjoint(adjoint(a)) == a);
      CHECK(conj(conj(a)) == a);
      CHECK(anticommutator(a, b) == a * b + b * a);
      CHECK(a - a == ExactMatrix::zero(n));
    }
  }
}
