#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "ksphere/errors.hpp"
#include "ksphere/generators.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace ksphere;

namespace {

SpherePencil fixture_pencil(int d, const char* name) { return *find_fixture(fixtures(d), name).pencil; }

}  // namespace

TEST_CASE("canonical pencils") {
  const auto q1 = build_Q(1, false);
  CHECK(q1.d == 0);
  CHECK(q1.coefficients.front() == ExactMatrix::identity(1));
  const auto u1 = build_U(1, false);
  CHECK(u1 == pencil_from_forms("xy", {{"x+iy"}}));
  const auto q3 = build_Q(3, false);
  CHECK(q3.coefficients[2] == oracle::gamma3(3));
  CHECK(build_Q(5, true).n == 4);
  CHECK(build_U(5, true).coefficients.size() == 6);
  CHECK_THROWS_AS(build_Q(4, true), DomainError);
  CHECK_THROWS_AS(build_U(17, true), ResourceError);
}

TEST_CASE("adapted Q and U rows for small k") {
  CHECK(classify(build_U(3, true)).most_specific == std::vector<RowLabel>{ko(5)});
  CHECK(classify(build_U(7, true)).most_specific == std::vector<RowLabel>{ko(1)});
  CHECK(classify(build_Q(5, true)).most_specific == std::vector<RowLabel>{ko(6)});
}

TEST_CASE("linear forms") {
  const auto p = pencil_from_forms("xyz", {{"x", "y+iz"}, {"y-iz", "-x"}});
  CHECK(p.d == 2);
  CHECK(p.coefficients[1] == ExactMatrix{{0, 1}, {1, 0}});
  CHECK(p.coefficients[2] == ExactMatrix{{0, kImag}, {-kImag, 0}});
  const auto c = pencil_from_forms("xy", {{"1", "0"}, {"0", "-1"}});
  CHECK(c.constant_or_zero() == oracle::gamma3(3));
  CHECK(pencil_from_forms("xy", {{"-ix"}}).coefficients[0] == ExactMatrix{{-kImag}});
  CHECK_THROWS_AS(pencil_from_forms("xy", {{"q"}}), ParseError);
  CHECK_THROWS_AS(pencil_from_forms("xy", {{"x+"}}), ParseError);
  CHECK_THROWS_AS(pencil_from_forms("xy", {{"x", "y"}}), ParseError);
  CHECK_THROWS_AS(pencil_from_forms("xy", {{""}}), ParseError);
  CHECK_THROWS_AS(pencil_from_forms("xy", {{"-"}}), ParseError);
  CHECK(pencil_from_forms("xy", {{"i"}}).constant_or_zero() == ExactMatrix{{kImag}});
}

TEST_CASE("every fixture satisfies its row") {
  for (int d = 1; d <= 4; ++d) {
    for (const auto& f : fixtures(d)) {
      CAPTURE(d);
      CAPTURE(f.name);
      const auto c = check_fixture(f);
      CHECK(c.unitary);
      CHECK(c.row_ok);
    }
  }
  CHECK_THROWS_AS(fixtures(0), DomainError);
  CHECK_THROWS_AS(fixtures(5), DomainError);
  CHECK_THROWS_AS(find_fixture(fixtures(1), "x_9"), DomainError);
}

TEST_CASE("fixture texts") {
  CHECK(fixture_pencil(2, "x_4") == pencil_from_forms("xyz", {{"x", "y+iz"}, {"y-iz", "-x"}}));
  CHECK(fixture_pencil(3, "x_5") == pencil_from_forms("xyzw", {{"x+iw", "y+iz"}, {"y-iz", "-x+iw"}}));
  CHECK(fixture_pencil(4, "x_6").n == 4);
}

TEST_CASE("fixture groups follow the reduced group formula") {
  for (int d = 2; d <= 4; ++d)
    for (const auto& f : fixtures(d)) {
      if (f.label.theory != KTheory::KO) continue;
      CAPTURE(d);
      CAPTURE(f.name);
      CHECK(f.group == ko_ring(f.label.degree - d - 2));
    }
}

TEST_CASE("sampled fixtures are checked pointwise") {
  const auto& x3 = find_fixture(fixtures(1), "x_3");
  CHECK_FALSE(x3.is_pencil());
  for (int s = 0; s < 200; ++s) {
    const auto x = testing_support::random_sphere_point(1);
    CHECK(sampled_relation_residual(x3.sampled, x, Relation::SharpPlus) < 1e-12);
  }
  const auto& xm1 = find_fixture(fixtures(1), "x_-1");
  const std::vector<double> p{0.6, 0.8};
  CHECK(sampled_relation_residual(xm1.sampled, p, Relation::TrTauPlus) < 1e-12);
  CHECK(sampled_relation_residual(xm1.sampled, p, Relation::SelfAdjoint) > 0.1);
}

TEST_CASE("the three-sphere KO_6 entry as commonly printed is not self-adjoint") {
  const auto printed = s3_x6_as_printed();
  CHECK(is_unitary_symbolic(printed));
  CHECK_FALSE(holds(printed, Relation::SelfAdjoint));
  CHECK_FALSE(satisfies(printed, symmetry_row(ko(6))));
  const auto fixed = fixture_pencil(3, "x_6");
  // same upper block, lower block negated
  for (std::size_t i = 0; i < fixed.coefficients.size(); ++i)
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) {
        const auto a = printed.coefficients[i](r, c), b = fixed.coefficients[i](r, c);
        CHECK((r < 2 ? a == b : a == -b));
      }
}

TEST_CASE("doubling transforms") {
  const auto y0 = fixture_pencil(2, "y_0");
  CHECK(pencil_conjugate(r0_transform(y0), r0_fixture_permutation()) == fixture_pencil(2, "x_0"));
  CHECK(pencil_conjugate(r6_transform(y0), r6_fixture_permutation()) == fixture_pencil(2, "x_6"));
  CHECK(r0_fixture_permutation() == ExactMatrix::identity(4));

  const auto diag = SpherePencil::constant_pencil(2, oracle::gamma3(3));
  const auto r = r0_transform(diag);
  CHECK(r.constant_or_zero() == block_diag(oracle::gamma3(3), oracle::gamma3(3)));

  const ExactMatrix antisym{{0, kImag}, {-kImag, 0}};
  const auto r6 = r6_transform(SpherePencil::constant_pencil(2, antisym));
  CHECK(r6.constant_or_zero() == block_diag(antisym, antisym));

  CHECK_THROWS_AS(r0_transform(build_U(3, true)), ContractError);
  CHECK_THROWS_AS(r6_transform(build_Q(1, false)), ContractError);
}

TEST_CASE("doubling transforms land in the expected rows") {
  for (int k = 3; k <= 9; k += 2) {
    const auto q = build_Q(k, false);
    CAPTURE(k);
    const auto a = r0_transform(q);
    CHECK(is_unitary_symbolic(a));
    CHECK(satisfies(a, symmetry_row(ko(0))));
    const auto b = r6_transform(q);
    CHECK(is_unitary_symbolic(b));
    CHECK(satisfies(b, symmetry_row(ko(6))));
  }
}

TEST_CASE("eta4 and complexification") {
  const auto e = eta4(fixture_pencil(2, "x_4"));
  CHECK(e.pencil == fixture_pencil(2, "x_5"));
  CHECK(e.label == ko(5));
  CHECK(eta4(fixture_pencil(1, "x_4")).pencil == fixture_pencil(1, "x_5"));
  CHECK_THROWS_AS(eta4(fixture_pencil(3, "x_5")), ContractError);
  const auto padded = pencil_block_diag(fixture_pencil(2, "x_4"), SpherePencil::constant_pencil(2, ExactMatrix::identity(2)));
  CHECK(eta4(padded).pencil == padded);

  const auto c = complexify(fixture_pencil(3, "x_5"));
  CHECK(c.pencil == fixture_pencil(3, "y_1"));
  CHECK(c.label == ku(1));
  const auto cq = complexify(build_Q(7, true));
  CHECK(cq.label == ku(0));
  CHECK(satisfies(cq.pencil, symmetry_row(ku(0))));
}

TEST_CASE("quaternionic five-generator family") {
  const auto f = quaternionic_upsilon5();
  CHECK(f.provenance == Provenance::Custom);
  CHECK(verify_clifford(f).all_pass());
  for (Sign s : audit(f).sharp_tr) CHECK(s == Sign::Plus);
  CHECK(audit(f).sharp_tr == audit(upsilon(5)).sharp_tr);
}

TEST_CASE("table checks") {
  for (int d = 1; d <= 4; ++d) {
    const auto checks = table_checks(d);
    for (const auto& c : checks) {
      CAPTURE(c.name);
      CHECK(c.pass);
    }
  }
  CHECK(table_checks(3).size() == 6);
}
