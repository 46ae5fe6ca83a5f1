#include "qpst/chain.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "qpst/errors.hpp"
#include "test_support.hpp"

namespace qpst {
namespace {

TEST(Chain, UniformChainHasUnitCouplings) {
  const auto spec = uniform_chain(4, {1.0, 0.0, 0.0, 1.0});
  EXPECT_EQ(spec.n_sites, 4u);
  EXPECT_EQ(spec.couplings, std::vector<double>(3, 1.0));
  EXPECT_DOUBLE_EQ(spec.j_max, 1.0);
}

TEST(Chain, ValidateRejectsInconsistentSpecs) {
  EXPECT_THROW(uniform_chain(3, {0.0, 0.0}), InvalidArgument);
  EXPECT_THROW(make_chain({1.0, -1.0}, {0.0, 0.0, 0.0}), InvalidArgument);
  EXPECT_THROW(make_chain({1.0, 0.0}, {0.0, 0.0, 0.0}), InvalidArgument);
  EXPECT_THROW(make_chain({1.0, NAN}, {0.0, 0.0, 0.0}), InvalidArgument);
  EXPECT_THROW(make_chain({1.0}, {0.0, INFINITY}), InvalidArgument);

  ChainSpec bad = uniform_chain(3, {0.0, 0.0, 0.0});
  bad.j_max = 2.0;
  EXPECT_THROW(validate(bad), InvalidArgument);
}

TEST(Chain, ChristandlCouplings) {
  const auto j = christandl_couplings(5, 1.0);
  ASSERT_EQ(j.size(), 4u);
  EXPECT_DOUBLE_EQ(j[0], 2.0);
  EXPECT_DOUBLE_EQ(j[1], std::sqrt(6.0));
  EXPECT_DOUBLE_EQ(j[2], std::sqrt(6.0));
  EXPECT_DOUBLE_EQ(j[3], 2.0);

  const auto scaled = christandl_chain(5, 1.0, true);
  EXPECT_DOUBLE_EQ(scaled.j_max, 1.0);
  EXPECT_DOUBLE_EQ(scaled.couplings[1], 1.0);
  EXPECT_NEAR(scaled.couplings[0], 2.0 / std::sqrt(6.0), 1e-15);
}

TEST(Chain, ParabolicOnsiteIsCentredAndSymmetric) {
  const auto odd = parabolic_onsite(5, 0.293);
  EXPECT_DOUBLE_EQ(odd[2], 0.0);
  EXPECT_DOUBLE_EQ(odd[0], 0.293 * 4.0);
  EXPECT_DOUBLE_EQ(odd[1], 0.293);
  const auto even = parabolic_onsite(4, 1.0);
  EXPECT_DOUBLE_EQ(even[0], 2.25);
  EXPECT_DOUBLE_EQ(even[1], 0.25);
  for (std::size_t n = 2; n <= 12; ++n) {
    const auto e = parabolic_onsite(n, 0.7);
    for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(e[i], e[n - 1 - i]);
  }
}

TEST(Chain, HamiltonianIsTridiagonal) {
  const auto spec = make_chain({0.5, 1.0, 0.25}, {1.0, 2.0, 3.0, 4.0});
  const auto h = build_hamiltonian(spec);
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      double expected = 0.0;
      if (r == c) expected = spec.onsite[r];
      if (c == r + 1) expected = spec.couplings[r];
      if (r == c + 1) expected = spec.couplings[c];
      EXPECT_EQ(h(r, c), expected) << r << "," << c;
    }
  }
  EXPECT_EQ(h.diagonal().size(), 4u);
  EXPECT_EQ(h.off_diagonal().size(), 3u);
}

TEST(Chain, MirrorMatrixIsAntiDiagonal) {
  const auto m = mirror_matrix(4);
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) EXPECT_EQ(m(r, c), r + c == 3 ? 1.0 : 0.0);
  }
}

TEST(ChainProperty, MirrorSymmetricSpecsCommuteWithMirror) {
  std::mt19937_64 gen(7);
  for (std::size_t n = 2; n <= 12; ++n) {
    for (int rep = 0; rep < 20; ++rep) {
      const auto spec = test::random_chain(gen, n, true);
      ASSERT_TRUE(check_mirror_symmetry(spec));
      EXPECT_EQ(mirror_commutator_norm(build_hamiltonian(spec)), 0.0);
    }
  }
  for (std::size_t n = 2; n <= 12; ++n) {
    const auto c = christandl_chain(n, 1.0, true);
    EXPECT_LE(mirror_commutator_norm(build_hamiltonian(c)), 1e-15);
    const auto p = uniform_chain(n, parabolic_onsite(n, 0.3));
    EXPECT_EQ(mirror_commutator_norm(build_hamiltonian(p)), 0.0);
  }
}

TEST(ChainProperty, AsymmetricSpecsDoNotCommute) {
  const auto spec = uniform_chain(4, {0.0, 1.0, 0.0, 0.0});
  EXPECT_FALSE(check_mirror_symmetry(spec));
  EXPECT_GT(mirror_commutator_norm(build_hamiltonian(spec)), 0.5);
  EXPECT_TRUE(check_mirror_symmetry(uniform_chain(3, {1.0, 0.0, 1.0 + 1e-12}), 1e-9));
}

}  // namespace
}  // namespace qpst
