#include "octoclif/octonion.hpp"
#include "octoclif/random.hpp"

#include <gtest/gtest.h>

using namespace octoclif;

TEST(Octonion, ProductMatchesUnitTableOnAllPairs) {
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      EXPECT_EQ(circ(Octonion::unit(a), Octonion::unit(b)), table_oracle(a, b)) << a << "," << b;
      EXPECT_EQ(circ_clifford(Octonion::unit(a), Octonion::unit(b)), table_oracle(a, b));
    }
}

TEST(Octonion, StructureTriples) {
  for (const auto& [a, b, c] : kStructureTriples) {
    EXPECT_EQ(circ(Octonion::unit(a), Octonion::unit(b)), Octonion::unit(c));
    EXPECT_EQ(circ(Octonion::unit(b), Octonion::unit(c)), Octonion::unit(a));
    EXPECT_EQ(circ(Octonion::unit(b), Octonion::unit(a)), Octonion::unit(c, -1));
  }
}

TEST(Octonion, IndexIdentity) {
  // e_a ∘ e_{a+1} = e_{a+3}, indices mod 7 in 1..7.
  auto wrap = [](int i) { return (i - 1) % 7 + 1; };
  for (int a = 1; a <= 7; ++a)
    EXPECT_EQ(circ(Octonion::unit(a), Octonion::unit(wrap(a + 1))), Octonion::unit(wrap(a + 3)));
}

TEST(Octonion, TableSpotChecks) {
  EXPECT_EQ(circ(Octonion::unit(1), Octonion::unit(2)), Octonion::unit(4));
  EXPECT_EQ(circ(Octonion::unit(2), Octonion::unit(5)), Octonion::unit(3, -1));
  EXPECT_EQ(circ(Octonion::unit(1), Octonion::unit(4)), Octonion::unit(2, -1));
  EXPECT_EQ(circ(Octonion::unit(7), Octonion::unit(7)), Octonion::scalar(-1));
}

TEST(Octonion, BilinearFormAgreesWithCliffordEvaluation) {
  Rng rng(17);
  for (int t = 0; t < 200; ++t) {
    const Octonion a = rng.octonion(), b = rng.octonion();
    ASSERT_EQ(circ(a, b), circ_clifford(a, b));
  }
}

TEST(Octonion, NormIsMultiplicative) {
  Rng rng(2);
  for (int t = 0; t < 300; ++t) {
    const Octonion a = rng.octonion(), b = rng.octonion();
    ASSERT_EQ(norm(circ(a, b)), norm(a) * norm(b));
  }
}

TEST(Octonion, AlternativeButNotAssociative) {
  Rng rng(9);
  for (int t = 0; t < 200; ++t) {
    const Octonion a = rng.octonion(), b = rng.octonion();
    ASSERT_EQ(circ(circ(a, a), b), circ(a, circ(a, b)));
    ASSERT_EQ(circ(circ(a, b), b), circ(a, circ(b, b)));
    ASSERT_EQ(circ(circ(a, b), a), circ(a, circ(b, a)));
  }
  const Octonion e1 = Octonion::unit(1), e2 = Octonion::unit(2), e3 = Octonion::unit(3);
  EXPECT_EQ(circ(circ(e1, e2), e3), -circ(e1, circ(e2, e3)));
}

TEST(Octonion, MoufangIdentities) {
  Rng rng(1);
  for (int t = 0; t < 100; ++t) {
    const Octonion a = rng.octonion(), b = rng.octonion(), c = rng.octonion();
    ASSERT_EQ(circ(circ(a, b), circ(c, a)), circ(circ(a, circ(b, c)), a));
    ASSERT_EQ(circ(circ(circ(a, b), a), c), circ(a, circ(b, circ(a, c))));
    ASSERT_EQ(circ(circ(a, b), circ(c, a)), circ(a, circ(circ(b, c), a)));
    ASSERT_EQ(circ(c, circ(circ(a, b), a)), circ(circ(circ(c, a), b), a));
  }
}

TEST(Octonion, ConjugationAndInverse) {
  Rng rng(4);
  for (int t = 0; t < 100; ++t) {
    const Octonion a = rng.octonion(), b = rng.octonion();
    ASSERT_EQ(oct_conj(circ(a, b)), circ(oct_conj(b), oct_conj(a)));
    if (!a.is_zero()) {
      ASSERT_EQ(circ(a, oct_inverse(a)), Octonion::scalar(1));
      ASSERT_EQ(circ(oct_inverse(a), a), Octonion::scalar(1));
    }
  }
  EXPECT_THROW(oct_inverse(Octonion()), SingularError);
}

TEST(Octonion, MultivectorRoundTrip) {
  Rng rng(8);
  for (int t = 0; t < 50; ++t) {
    const Octonion a = rng.octonion();
    ASSERT_EQ(Octonion::from_multivector(a.to_multivector()), a);
  }
  EXPECT_THROW(Octonion::from_multivector(Multivector::blade(BladeIndex(3))), TypeMismatchError);
}

TEST(Octonion, Text) {
  EXPECT_EQ(to_text(Octonion::unit(4)), "1 e4");
  EXPECT_EQ(to_compact(Octonion::unit(4)), "e4");
  EXPECT_EQ(to_compact(Octonion::unit(5, -1)), "-e5");
  EXPECT_EQ(to_compact(Octonion::scalar(-1)), "-1");
  EXPECT_EQ(to_compact(Octonion()), "0");
  Octonion h;
  h[0] = Rational(1, 2);
  h[1] = Rational(-1, 2);
  EXPECT_EQ(to_compact(h), "1/2 - 1/2 e1");
}

TEST(Octonion, UnitSphereProducts) {
  Rng rng(6);
  for (int t = 0; t < 30; ++t) {
    const Octonion x = rng.s7_element(), y = rng.s7_element(), a = rng.octonion(), b = rng.octonion();
    ASSERT_TRUE(is_s7(x));
    // X is a two-sided unit of the (1,X) product.
    ASSERT_EQ(one_x_product(x, x, b), b);
    ASSERT_EQ(one_x_product(x, a, x), a);
    // The X-product with X on S7 keeps the norm multiplicative.
    ASSERT_EQ(norm(x_product(x, a, b)), norm(a) * norm(b));
    ASSERT_EQ(xy_product(x, x, a, b), x_product(x, a, b));
    ASSERT_EQ(norm(xy_product(x, y, a, b)), norm(a) * norm(b));
  }
  EXPECT_THROW(x_product(Octonion::scalar(2), Octonion::unit(1), Octonion::unit(2)), NotOnS7Error);
  EXPECT_THROW(one_x_product(Octonion(), Octonion::unit(1), Octonion::unit(2)), NotOnS7Error);
}
