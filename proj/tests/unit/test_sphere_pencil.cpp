#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>

#include "ksphere/errors.hpp"
#include "ksphere/generators.hpp"
#include "ksphere/invariants.hpp"
#include "ksphere/sphere_pencil.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace ksphere;

namespace {

bool contains(const std::vector<RowLabel>& v, const RowLabel& l) { return std::find(v.begin(), v.end(), l) != v.end(); }

SpherePencil circle_block() { return pencil_from_forms("xy", {{"x", "y"}, {"y", "-x"}}); }

Eigen::MatrixXcd eval_at(const SpherePencil& p, std::vector<double> x) { return evaluate(p, x); }

}  // namespace

TEST_CASE("construction checks") {
  CHECK_THROWS_AS(SpherePencil::make(-1, {}), DomainError);
  CHECK_THROWS_AS(SpherePencil::make(1, {ExactMatrix::identity(2)}), DimensionError);
  CHECK_THROWS_AS(SpherePencil::make(1, {ExactMatrix::identity(2), ExactMatrix::identity(3)}), DimensionError);
  CHECK_THROWS_AS(SpherePencil::make(0, {ExactMatrix::identity(2)}, ExactMatrix::identity(3)), DimensionError);
  const auto c = SpherePencil::constant_pencil(2, ExactMatrix::identity(2));
  CHECK(c.coefficients.size() == 3);
  CHECK(c == SpherePencil::make(2, {ExactMatrix::zero(2), ExactMatrix::zero(2), ExactMatrix::zero(2)},
                                ExactMatrix::identity(2)));
  // missing and zero constants compare equal
  CHECK(SpherePencil::make(0, {ExactMatrix::identity(1)}) ==
        SpherePencil::make(0, {ExactMatrix::identity(1)}, ExactMatrix::zero(1)));
}

TEST_CASE("evaluation at fixed points") {
  const auto u1 = build_U(1, false);
  CHECK(eval_at(u1, {0, 1})(0, 0) == std::complex<double>(0, 1));
  const auto y1 = find_fixture(fixtures(3), "y_1");
  const Eigen::MatrixXcd m = eval_at(*y1.pencil, {1, 0, 0, 0});
  CHECK(max_abs(m - to_complex_matrix(oracle::gamma3(3))) == 0.0);
  const auto q2 = build_Q(3, false);
  CHECK(max_abs(eval_at(q2, {0, 0, 1}) - to_complex_matrix(oracle::gamma3(3))) == 0.0);
  CHECK_THROWS_AS(eval_at(q2, {0, 0, 2}), DomainError);
  CHECK_THROWS_AS(eval_at(q2, {0, 1}), DimensionError);
}

TEST_CASE("adjoint of a pencil") {
  const auto q = build_Q(5, true);
  CHECK(pencil_star(q) == q);
  const auto u = build_U(3, true);
  CHECK(pencil_star(u).coefficients.back() == scale(ExactMatrix::identity(2), -kImag));
  const auto zero = SpherePencil::constant_pencil(1, ExactMatrix::zero(2));
  CHECK(pencil_star(zero) == zero);
}

TEST_CASE("antipodal involutions on the adapted pencils") {
  CHECK(apply_tr_tau(build_Q(7, true)) == build_Q(7, true));
  CHECK(apply_tr_tau(build_U(9, true)) == pencil_neg(build_U(9, true)));
  CHECK(apply_sharp_tr_tau(build_U(3, true)) == pencil_star(build_U(3, true)));
  const auto c = SpherePencil::constant_pencil(1, ExactMatrix{{1, 2}, {3, 4}});
  CHECK(apply_tr_tau(c).constant_or_zero() == ExactMatrix{{1, 3}, {2, 4}});
  CHECK_THROWS_AS(apply_sharp_tr_tau(build_U(1, false)), DimensionError);
}

TEST_CASE("antipodal involutions are involutive") {
  for (int k = 1; k <= 11; k += 2) {
    const auto u = build_U(k, true);
    CHECK(apply_tr_tau(apply_tr_tau(u)) == u);
    if (u.n % 2 == 0) CHECK(apply_sharp_tr_tau(apply_sharp_tr_tau(u)) == u);
  }
}

TEST_CASE("evaluating the involuted pencil matches transposing at the antipode") {
  const auto u = build_U(5, true);
  const auto t = apply_tr_tau(u);
  for (int s = 0; s < 50; ++s) {
    auto x = testing_support::random_sphere_point(u.d);
    std::vector<double> minus_x(x.size());
    std::transform(x.begin(), x.end(), minus_x.begin(), [](double v) { return -v; });
    CHECK(max_abs(evaluate(t, x) - evaluate(u, minus_x).transpose()) < 1e-14);
    CHECK(max_abs(evaluate(apply_sharp_tr_tau(u), x) -
                  numeric_transpose_or_sharp(Involution::SharpTr, evaluate(u, minus_x))) < 1e-14);
  }
}

TEST_CASE("symbolic unitarity") {
  for (int k = 1; k <= 13; k += 2) {
    CAPTURE(k);
    CHECK(is_unitary_symbolic(build_U(k, true)));
    CHECK(is_unitary_symbolic(build_Q(k, true)));
  }
  const auto bad = SpherePencil::make(1, {ExactMatrix::identity(1), ExactMatrix::identity(1)});
  const auto cert = is_unitary_symbolic(bad);
  CHECK_FALSE(cert);
  CHECK_FALSE(cert.failure.empty());
  const auto u = build_U(3, true);
  CHECK(is_unitary_symbolic(stabilize(u, symmetry_row(ko(5)))));
  CHECK_FALSE(is_unitary_symbolic(SpherePencil::constant_pencil(0, ExactMatrix{{2}})));
}

TEST_CASE("symbolic unitarity agrees with sampling") {
  const auto u = build_U(7, true);
  const auto n = static_cast<Eigen::Index>(u.n);
  for (int s = 0; s < 1000; ++s) {
    const auto x = testing_support::random_sphere_point(u.d);
    const Eigen::MatrixXcd m = evaluate(u, x);
    CHECK(max_abs(m * m.adjoint() - Eigen::MatrixXcd::Identity(n, n)) < 1e-12);
  }
}

TEST_CASE("row labels") {
  CHECK(to_string(ko(-1, RowVariant::Alt)) == "KO_-1 (alt)");
  CHECK(to_string(ku(0)) == "KU_0");
  CHECK(row_label_from_string("KO_7") == ko(-1));
  CHECK(row_label_from_string("KO_3-alt") == ko(3, RowVariant::Alt));
  CHECK(row_label_from_string("KO_-1 (alt)") == ko(-1, RowVariant::Alt));
  CHECK(row_label_from_string("KO_12") == ko(4));
  CHECK(row_label_from_string("KU_3") == ku(1));
  CHECK_THROWS_AS(row_label_from_string("KO_4 (alt)"), DomainError);
  CHECK_THROWS_AS(row_label_from_string("KX_1"), DomainError);
  CHECK_THROWS_AS(row_label_from_string("KO_x"), DomainError);
  CHECK(same_degree(ko(3), ko(3, RowVariant::Alt)));
  CHECK_FALSE(same_degree(ko(3), ku(1)));
  CHECK(symmetry_rows().size() == 12);
  CHECK(symmetry_row(ko(4)).block_quantum == 4);
  CHECK_THROWS_AS(symmetry_row(ko(5, RowVariant::Alt)), DomainError);
}

TEST_CASE("neutral elements satisfy their own rows") {
  for (const auto& row : symmetry_rows()) {
    CAPTURE(to_string(row.label));
    const auto c = SpherePencil::constant_pencil(1, row.neutral);
    CHECK(is_unitary_symbolic(c));
    CHECK(satisfies(c, row));
  }
}

TEST_CASE("classification of the adapted pencils by residue") {
  CHECK(classify(build_Q(3, true)).most_specific == std::vector<RowLabel>{ko(4)});
  CHECK(classify(build_U(5, true)).most_specific == std::vector<RowLabel>{ko(-1, RowVariant::Alt)});
  for (int k = 3; k <= 15; k += 2) {
    CAPTURE(k);
    const int r = k % 8;
    const auto& want = *std::find_if(oracle::kResidueRows.begin(), oracle::kResidueRows.end(),
                                     [&](const oracle::ResidueRows& e) { return e.residue == r; });
    const auto q = classify(build_Q(k, true));
    const auto u = classify(build_U(k, true));
    CHECK(q.most_specific == std::vector<RowLabel>{want.q});
    CHECK(u.most_specific == std::vector<RowLabel>{want.u});
    CHECK(contains(q.satisfied, want.q));
    CHECK(contains(u.satisfied, want.u));
  }
}

TEST_CASE("classification of the identity and of non-unitaries") {
  const auto c = classify(SpherePencil::constant_pencil(1, ExactMatrix::identity(2)));
  CHECK(contains(c.satisfied, ku(0)));
  CHECK(contains(c.satisfied, ko(0)));
  CHECK(contains(c.satisfied, ko(4)));
  CHECK(c.satisfied.size() == c.size_divisible.size());
  const auto odd = classify(SpherePencil::constant_pencil(1, ExactMatrix::identity(1)));
  for (std::size_t i = 0; i < odd.satisfied.size(); ++i)
    if (odd.satisfied[i] == ku(0)) CHECK_FALSE(odd.size_divisible[i]);
  CHECK_THROWS_AS(classify(SpherePencil::make(1, {ExactMatrix::identity(1), ExactMatrix::identity(1)})),
                  ContractError);
}

TEST_CASE("stabilization") {
  const auto one = SpherePencil::constant_pencil(0, ExactMatrix::identity(1));
  const auto s = stabilize(one, symmetry_row(ku(0)));
  CHECK(s.constant_or_zero() == ExactMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, -1}});

  // The padded circle fixture is the 2x2 block with an identity block appended;
  // stabilizing with the KO_4 neutral element appends diag(1, 1, -1, -1) instead.
  const auto a = circle_block();
  const auto fixture = *find_fixture(fixtures(1), "x_4").pencil;
  CHECK(fixture == pencil_block_diag(a, SpherePencil::constant_pencil(1, ExactMatrix::identity(2))));
  const auto st = stabilize(a, symmetry_row(ko(4)));
  CHECK(st == pencil_block_diag(a, SpherePencil::constant_pencil(1, symmetry_row(ko(4)).neutral)));
  CHECK(satisfies(st, symmetry_row(ko(4))));
  CHECK(is_unitary_symbolic(st));

  CHECK_THROWS_AS(stabilize(build_U(3, true), symmetry_row(ko(4))), ContractError);
}

TEST_CASE("stabilization keeps every satisfied row") {
  for (int k = 3; k <= 11; k += 2) {
    for (const auto& p : {build_Q(k, true), build_U(k, true)}) {
      const auto c = classify(p);
      for (const auto& label : c.most_specific) {
        const auto st = stabilize(p, symmetry_row(label));
        CHECK(satisfies(st, symmetry_row(label)));
        CHECK(classify(st).most_specific == c.most_specific);
      }
    }
  }
}
