#include <gtest/gtest.h>

#include <random>

#include "hilbinv/lattice.hpp"

using namespace hilbinv;
using namespace hilbinv::lattice;

namespace {

LatticeElement elem(std::initializer_list<std::int64_t> c) {
  LatticeElement e;
  for (auto x : c) e.coords.emplace_back(x);
  return e;
}

LatticeElement in_xi(const PeriodLattice& xi, std::int64_t u, std::int64_t v, std::int64_t u1, std::int64_t v1,
                     std::int64_t l) {
  return BigInt(u) * xi.u() + BigInt(v) * xi.v() + BigInt(u1) * xi.u1() + BigInt(v1) * xi.v1() +
         BigInt(l) * xi.ell();
}

LatticeMap identity_map(std::size_t rank) { return {Matrix::identity(rank)}; }

}  // namespace

TEST(BuildLattice, Examples) {
  const auto u = IntegerLattice::build({Summand::u()});
  EXPECT_EQ(u.rank(), 2u);
  EXPECT_EQ(u.det(), -1);

  const auto xi = IntegerLattice::build({Summand::u(), Summand::u(), Summand::u(), Summand::e8_minus(),
                                         Summand::e8_minus(), Summand::rank1(-4)});
  EXPECT_EQ(xi.rank(), 23u);
  EXPECT_EQ(abs(xi.det()), 4);
  EXPECT_EQ(xi.det(), 4);  // (-1)^3 * 1 * 1 * (-4)

  const auto two = IntegerLattice::build({Summand::rank1(2)});
  EXPECT_EQ(two.rank(), 1u);
  EXPECT_EQ(two.square(elem({1})), 2);

  EXPECT_THROW(IntegerLattice::build({Summand::rank1(3)}), std::invalid_argument);
  EXPECT_THROW(IntegerLattice::build({}), std::invalid_argument);
}

TEST(BuildLattice, E8IsUnimodularAndEven) {
  const auto e8 = e8_gram();
  EXPECT_EQ(determinant(e8), 1);
  for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(e8(i, i), 2);
  const auto e8m = IntegerLattice::build({Summand::e8_minus()});
  EXPECT_EQ(e8m.det(), 1);
  for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(e8m.square(e8m.basis(i)), -2);
}

TEST(IntegerLattice, RejectsBadGram) {
  Matrix odd(1);
  odd(0, 0) = 1;
  EXPECT_THROW(IntegerLattice{odd}, std::invalid_argument);
  Matrix asym(2);
  asym(0, 1) = 1;
  asym(1, 0) = 2;
  EXPECT_THROW(IntegerLattice{asym}, std::invalid_argument);
  Matrix degenerate(2);
  degenerate(0, 0) = 2;
  EXPECT_THROW(IntegerLattice{degenerate}, std::invalid_argument);
}

TEST(Determinant, MatchesCofactorExpansionOnSmallMatrices) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> coef(-9, 9);
  for (int iter = 0; iter < 200; ++iter) {
    Matrix m(3);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = coef(rng);
    }
    const BigInt expect = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                          m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                          m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    EXPECT_EQ(determinant(m), expect);
  }
}

TEST(Transvection, Examples) {
  const PeriodLattice xi(3);
  const auto& L = xi.lattice;
  const auto t1 = transvection(L, xi.u1(), xi.v());
  EXPECT_EQ(t1(xi.u1()), xi.u1());

  const auto plus = transvection(L, xi.u1(), xi.v());
  const auto minus = transvection(L, xi.u1(), -xi.v());
  EXPECT_EQ(plus * minus, identity_map(L.rank()));
  EXPECT_EQ(minus * plus, identity_map(L.rank()));

  EXPECT_THROW(transvection(L, xi.u() + xi.v(), xi.u1()), std::invalid_argument);
  EXPECT_THROW(transvection(L, xi.u1(), xi.v1()), std::domain_error);
}

TEST(Transvection, ConjugationIdentity) {
  for (std::int64_t n = 2; n <= 30; ++n) {
    const PeriodLattice xi(n);
    const auto& L = xi.lattice;
    const auto wp = BigInt(xi.t() - 1) * xi.v() - BigInt(2) * xi.ell();
    const auto minus = transvection(L, xi.u1(), -xi.v());
    const auto middle = transvection(L, xi.v1(), wp);
    const auto lhs = minus * middle * transvection(L, xi.u1(), xi.v());
    // lhs = minus o middle o minus^{-1}
    EXPECT_EQ(lhs * minus, minus * middle);
    EXPECT_TRUE(is_isometry(L, lhs));
  }
}

TEST(Transvection, EichlerAdditivity) {
  // U + U + <-2> + <4> + <-6>, x = u isotropic, y orthogonal to u has no v component
  const auto L = IntegerLattice::build(
      {Summand::u(), Summand::u(), Summand::rank1(-2), Summand::rank1(4), Summand::rank1(-6)});
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coef(-6, 6);
  const auto x = L.basis(0);
  auto random_orthogonal = [&] {
    LatticeElement y = L.zero();
    for (std::size_t i = 0; i < L.rank(); ++i) {
      if (i != 1) y.coords[i] = coef(rng);
    }
    return y;
  };
  for (int iter = 0; iter < 100; ++iter) {
    const auto y1 = random_orthogonal();
    const auto y2 = random_orthogonal();
    ASSERT_EQ(L.pairing(x, y1), 0);
    const auto lhs = transvection(L, x, y1 + y2);
    const auto rhs = transvection(L, x, y1) * transvection(L, x, y2);
    EXPECT_EQ(lhs, rhs);
    EXPECT_TRUE(is_isometry(L, lhs));
  }
}

TEST(BuildAlpha, ExamplesAtThree) {
  const PeriodLattice xi(3);
  const auto alpha = build_alpha(xi);
  EXPECT_EQ(alpha(in_xi(xi, 1, 9, 0, 0, -2)), in_xi(xi, 1, 1, 0, 0, 0));
  EXPECT_EQ(alpha(in_xi(xi, 4, 36, 0, 0, -9)), in_xi(xi, 4, -4, 0, 8, -1));
  EXPECT_EQ(xi.kappa(), in_xi(xi, 4, -4, 0, 8, -1));
}

TEST(BuildAlpha, IsometryAndImagesUpTo100) {
  for (std::int64_t n = 2; n <= 100; ++n) {
    const PeriodLattice xi(n);
    const auto alpha = build_alpha(xi);
    const auto& g = xi.lattice.gram();
    EXPECT_EQ(alpha.matrix.transpose() * g * alpha.matrix, g) << n;
    const std::int64_t t = xi.t();
    EXPECT_EQ(alpha(in_xi(xi, 1, t, 0, 0, -2)), xi.u() + xi.v());
    EXPECT_EQ(alpha(in_xi(xi, 2 * (n - 1), 2 * (n - 1) * t, 0, 0, -t)),
              in_xi(xi, 2 * (n - 1), -2 * (n - 1), 0, 4 * (n - 1), -1));
    if (n <= 50) EXPECT_TRUE(acts_trivially_on_discriminant(xi.lattice, alpha)) << n;
    EXPECT_TRUE(verify_alpha(xi).all()) << n;
  }
}

TEST(Divisibility, Examples) {
  for (std::int64_t n = 2; n <= 20; ++n) {
    const PeriodLattice xi(n);
    EXPECT_EQ(divisibility(xi.lattice, xi.u() + xi.v()), 1);
    EXPECT_EQ(divisibility(xi.lattice, xi.ell()), 2 * (n - 1));
    EXPECT_EQ(divisibility(xi.lattice, xi.u()), 1);
    EXPECT_THROW(divisibility(xi.lattice, xi.lattice.zero()), std::invalid_argument);
  }
}

TEST(Divisibility, ScalesWithMultiples) {
  const PeriodLattice xi(5);
  const std::vector<LatticeElement> primitive{xi.u(), xi.ell(), xi.u() + xi.v(), xi.marked_polarization(),
                                              xi.kappa(), xi.v1() + BigInt(3) * xi.ell()};
  for (const auto& e : primitive) {
    const BigInt base = divisibility(xi.lattice, e);
    for (std::int64_t c : {-7, -2, 1, 3, 12}) EXPECT_EQ(divisibility(xi.lattice, BigInt(c) * e), abs(BigInt(c)) * base);
  }
}

TEST(Discriminant, Examples) {
  for (std::int64_t n = 2; n <= 10; ++n) {
    const PeriodLattice xi(n);
    const auto& L = xi.lattice;
    EXPECT_TRUE(acts_trivially_on_discriminant(L, identity_map(L.rank())));
    auto neg = Matrix::identity(L.rank());
    neg(PeriodLattice::kL, PeriodLattice::kL) = -1;
    // l* = l / (2(n-1)); -l* = l* only when 2(n-1) <= 2
    EXPECT_EQ(acts_trivially_on_discriminant(L, {neg}), 2 * (n - 1) <= 2) << n;
  }
  const PeriodLattice xi(4);
  auto bad = Matrix::identity(xi.lattice.rank());
  bad(0, 0) = 2;
  EXPECT_THROW(acts_trivially_on_discriminant(xi.lattice, {bad}), std::invalid_argument);
}
