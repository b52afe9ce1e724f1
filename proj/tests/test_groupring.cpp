#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "helpers.hpp"
#include "nsalpha/quotients.hpp"

using namespace nsalpha;
using testutil::P;

TEST_CASE("builtin specs validate") {
  for (const char* name : {"Z", "Dinf", "ZxZ2", "ZxZ3"}) {
    ValidationReport rep = validate_group(VCGroupSpec::named(name));
    CHECK(rep.valid);
  }
  CHECK_THROWS_AS(VCGroupSpec::named("Sym3"), std::invalid_argument);
}

TEST_CASE("cocycle normalization violations are reported") {
  VCGroupSpec s = VCGroupSpec::ZxZ2();
  s.cocycle[0][1] = 1;  // c(e, q) must be 0
  ValidationReport rep = validate_group(s);
  CHECK(!rep.valid);
  CHECK(!rep.violations.empty());
  CHECK_THROWS_AS(require_valid_group(s), std::invalid_argument);
}

TEST_CASE("broken action is reported") {
  VCGroupSpec s = VCGroupSpec::ZxZ2();
  s.action = {1, 2};
  CHECK(!validate_group(s).valid);
}

TEST_CASE("group multiplication and inversion in Dinf") {
  VCGroupSpec d = VCGroupSpec::Dinf();
  CHECK(group_mul(d, {1, 1}, {1, 1}) == GroupElement{0, 0});
  CHECK(group_mul(d, {3, 0}, {4, 0}) == GroupElement{7, 0});
  CHECK(group_mul(d, {3, 1}, {3, 1}) == GroupElement{0, 0});
  CHECK(group_inv(d, {3, 1}) == GroupElement{3, 1});
  CHECK(group_inv(d, {5, 0}) == GroupElement{-5, 0});
  CHECK(group_inv(d, {0, 0}) == GroupElement{0, 0});
}

TEST_CASE("group_mul(a, group_inv(a)) is the identity in all builtin specs") {
  for (const char* name : {"Z", "Dinf", "ZxZ2", "ZxZ3"}) {
    VCGroupSpec s = VCGroupSpec::named(name);
    for (long k = -3; k <= 3; ++k)
      for (int q = 0; q < s.n; ++q) {
        GroupElement a{k, q};
        CHECK(group_mul(s, a, group_inv(s, a)) == GroupElement{0, 0});
      }
  }
}

TEST_CASE("restriction of x + t over Z x Z/2 is [[z,1],[1,z]]") {
  LaurentMatrix R = restrict_to_Z(testutil::xt_matrix(VCGroupSpec::ZxZ2()));
  REQUIRE(R.rows() == 2);
  REQUIRE(R.cols() == 2);
  CHECK(R.at(0, 0) == LaurentPoly::z());
  CHECK(R.at(0, 1) == P({{0, 1, 0}}));
  CHECK(R.at(1, 0) == P({{0, 1, 0}}));
  CHECK(R.at(1, 1) == LaurentPoly::z());
}

TEST_CASE("restriction of a Z-supported element is diagonal for trivial extensions") {
  VCGroupSpec s = VCGroupSpec::ZxZ3();
  LaurentPoly p = testutil::counterexample_poly();
  GroupRingMatrix A = GroupRingMatrix::from_laurent(s, LaurentMatrix::scalar(p));
  LaurentMatrix R = restrict_to_Z(A);
  REQUIRE(R.rows() == 3);
  for (int u = 0; u < 3; ++u)
    for (int v = 0; v < 3; ++v) CHECK(R.at(u, v) == (u == v ? p : LaurentPoly()));
}

TEST_CASE("restriction of the zero matrix is zero") {
  CHECK(restrict_to_Z(GroupRingMatrix(VCGroupSpec::Dinf(), 2, 2)).is_zero());
}

TEST_CASE("restriction with n = 1 is the identity identification") {
  std::mt19937 rng(41);
  LaurentMatrix A = testutil::random_matrix(rng, 2, 2, -1, 2);
  GroupRingMatrix G = GroupRingMatrix::from_laurent(VCGroupSpec::Z(), A);
  CHECK(restrict_to_Z(G) == A);
}

TEST_CASE("restriction respects the involution") {
  VCGroupSpec d = VCGroupSpec::Dinf();
  std::mt19937 rng(43);
  GroupRingMatrix A(d, 2, 1);
  std::uniform_int_distribution<long> coeff(-2, 2);
  std::uniform_int_distribution<int> kdist(-2, 2), qdist(0, 1);
  for (int i = 0; i < 2; ++i)
    for (int t = 0; t < 4; ++t)
      A.at(i, 0).set({kdist(rng), qdist(rng)}, GaussianRational(coeff(rng), coeff(rng)));
  // A*: conjugate coefficients at inverted group elements, transposed.
  GroupRingMatrix Astar(d, 1, 2);
  for (int i = 0; i < 2; ++i)
    for (const auto& [g, c] : A.at(i, 0).terms())
      Astar.at(0, i).set(group_inv(d, g), c.conj());
  CHECK(restrict_to_Z(Astar) == restrict_to_Z(A).adjoint());
}

TEST_CASE("quotient of x over Z at level 3 is the cyclic permutation") {
  VCGroupSpec s = VCGroupSpec::Z();
  GroupRingMatrix A(s, 1, 1);
  A.at(0, 0).set({1, 0}, GaussianRational(1L));
  Eigen::MatrixXcd Q = build_quotient_dense(A, 3);
  REQUIRE(Q.rows() == 3);
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l)
      CHECK(std::abs(Q(k, l) - cdouble(l == (k + 1) % 3 ? 1 : 0, 0)) < 1e-15);
}

TEST_CASE("quotient of the identity is the identity") {
  VCGroupSpec d = VCGroupSpec::Dinf();
  GroupRingMatrix A(d, 1, 1);
  A.at(0, 0).set({0, 0}, GaussianRational(1L));
  Eigen::MatrixXcd Q = build_quotient_dense(A, 4);
  CHECK((Q - Eigen::MatrixXcd::Identity(8, 8)).norm() < 1e-15);
}

TEST_CASE("group quotient matches the DFT blocks of the restriction (level 2)") {
  GroupRingMatrix A = testutil::xt_matrix(VCGroupSpec::ZxZ2());
  LaurentMatrix R = restrict_to_Z(A);
  std::vector<double> via_blocks;
  for (const auto& B : dft_blocks(R, 2)) {
    auto sv = singular_values(B);
    via_blocks.insert(via_blocks.end(), sv.begin(), sv.end());
  }
  CHECK(testutil::sigma_multisets_match(singular_values(build_quotient_dense(A, 2)),
                                        via_blocks));
}

TEST_CASE("direct group quotient and restricted quotient have equal spectra") {
  std::mt19937 rng(47);
  std::vector<GroupRingMatrix> mats;
  mats.push_back(testutil::xt_matrix(VCGroupSpec::Dinf()));
  mats.push_back(testutil::xt_matrix(VCGroupSpec::ZxZ2()));
  {
    VCGroupSpec d = VCGroupSpec::Dinf();
    GroupRingMatrix A(d, 2, 2);
    std::uniform_int_distribution<long> coeff(-2, 2);
    std::uniform_int_distribution<int> kdist(-1, 1), qdist(0, 1);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int t = 0; t < 3; ++t)
          A.at(i, j).set({kdist(rng), qdist(rng)}, GaussianRational(coeff(rng), 0));
    mats.push_back(A);
  }
  {
    VCGroupSpec z3 = VCGroupSpec::ZxZ3();
    GroupRingMatrix A(z3, 1, 1);
    A.at(0, 0).set({1, 1}, GaussianRational(1L));  // a twisted generator
    A.at(0, 0).set({0, 0}, GaussianRational(-1L));
    mats.push_back(A);
  }
  for (const auto& A : mats)
    for (long i = 1; i <= 8; ++i)
      CHECK(testutil::sigma_multisets_match(
          singular_values(build_quotient_dense(A, i)),
          singular_values(dense_circulant(restrict_to_Z(A), i))));
}

TEST_CASE("group spec json round trip uses 1-based indices") {
  VCGroupSpec d = VCGroupSpec::Dinf();
  nlohmann::json j = d.to_json();
  CHECK(j["q_mult"][0][0] == 1);
  CHECK(j["q_mult"][1][1] == 1);
  VCGroupSpec back = VCGroupSpec::from_json(j);
  CHECK(back.n == 2);
  CHECK(back.q_mult == d.q_mult);
  CHECK(back.action == d.action);
}

TEST_CASE("group matrix json round trip") {
  GroupRingMatrix A = testutil::xt_matrix(VCGroupSpec::Dinf());
  GroupRingMatrix B = GroupRingMatrix::from_json(VCGroupSpec::Dinf(), A.to_json());
  CHECK(restrict_to_Z(B) == restrict_to_Z(A));
}
