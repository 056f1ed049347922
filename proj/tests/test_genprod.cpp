#include "octoclif/genprod.hpp"
#include "octoclif/random.hpp"

#include <gtest/gtest.h>

using namespace octoclif;

namespace {

// Unit-table arithmetic kept apart from the kernel's circ.
Octonion t_circ(const Octonion& x, const Octonion& y) {
  Octonion out;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (!x[i].is_zero() && !y[j].is_zero()) out += (x[i] * y[j]) * table_oracle(i, j);
  return out;
}
Octonion e(int a, int sign = 1) { return Octonion::unit(a, sign); }

Multivector blade(std::initializer_list<int> gens, const Rational& c = 1) {
  Multivector out = Multivector::scalar(c);
  for (int g : gens) out = gp(out, Multivector::generator(g));
  return out;
}

}  // namespace

TEST(Bullet, ParavectorArgumentsReduceToCirc) {
  Rng rng(1);
  for (int t = 0; t < 50; ++t) {
    const Octonion a = rng.octonion(), b = rng.octonion();
    ASSERT_EQ(bullet_left(a, b.to_multivector()), circ(a, b));
    ASSERT_EQ(bullet_right(a.to_multivector(), b), circ(a, b));
    ASSERT_EQ(odot_left(a.to_multivector(), b.to_multivector()), circ(a, b));
    ASSERT_EQ(odot_right(a.to_multivector(), b.to_multivector()), circ(a, b));
  }
}

TEST(Bullet, FoldsFactorsInOrder) {
  // e1 • e2e7 = (e1∘e2)∘e7, e2e7 • e4 = e2∘(e7∘e4)
  EXPECT_EQ(bullet_left(e(1), blade({2, 7})), t_circ(t_circ(e(1), e(2)), e(7)));
  EXPECT_EQ(bullet_right(blade({2, 7}), e(4)), t_circ(e(2), t_circ(e(7), e(4))));
  EXPECT_EQ(bullet_right(blade({2, 7}), e(1)), e(5));
}

TEST(Bullet, LinearInTheCliffordArgument) {
  Rng rng(2);
  for (int t = 0; t < 50; ++t) {
    const Multivector u = rng.multivector(3), v = rng.multivector(3);
    const Octonion a = rng.octonion();
    ASSERT_EQ(bullet_left(a, u + v), bullet_left(a, u) + bullet_left(a, v));
    ASSERT_EQ(bullet_right(u + v, a), bullet_right(u, a) + bullet_right(v, a));
    ASSERT_EQ(bullet_right(Rational(5) * u, a), Rational(5) * bullet_right(u, a));
  }
}

TEST(Bullet, TwoFactorBladesIgnoreTheirWriting) {
  // e7e3 = -e3e7, and x∘(y∘a) + y∘(x∘a) = 0 for distinct units.
  for (int a = 1; a <= 7; ++a) {
    EXPECT_EQ(bullet_right(written({7, 3}), e(a)), bullet_right(blade({7, 3}), e(a)));
    EXPECT_EQ(bullet_left(e(a), written({7, 3})), bullet_left(e(a), blade({7, 3})));
  }
}

TEST(Bullet, DescendingFold) {
  const FoldConvention desc{FoldOrder::descending, FoldOrder::descending};
  EXPECT_EQ(bullet_left(e(1), blade({2, 7}), desc), t_circ(t_circ(e(1), e(7)), e(2)));
  EXPECT_EQ(bullet_right(blade({2, 7}), e(4), desc), t_circ(e(7), t_circ(e(2), e(4))));
  EXPECT_EQ(bullet_left(e(1), blade({1, 2, 4}), desc), bullet_left(e(1), written({4, 2, 1})));
}

TEST(Bullet, InverseTelescopes) {
  for (BladeIndex b : detail::canonical_order()) {
    const Multivector u = Multivector::blade(b), ui = inverse(u);
    for (int a = 1; a <= 7; ++a) {
      ASSERT_EQ(bullet_right(ui, bullet_right(u, e(a))), e(a));
      ASSERT_EQ(bullet_left(bullet_left(e(a), u), ui), e(a));
    }
  }
}

TEST(Chi, UnitArgument) {
  EXPECT_EQ(chi_left(blade({1, 2})), e(4));
  EXPECT_EQ(chi_right(blade({1, 2})), t_circ(e(1), e(2)));
  EXPECT_EQ(chi_left(Multivector::scalar(3)), Octonion::scalar(3));
}

TEST(Odot, WorkedProducts) {
  // e1e2 ⊙⌞ e3e4 = e1∘(e2•(e3e4)) = e1∘(e5∘e4) = e1∘(-e7) = e3
  EXPECT_EQ(odot_left(blade({1, 2}), blade({3, 4})), e(3));
  // ⊙⌟: ((u•v1)∘v2)
  EXPECT_EQ(odot_right(blade({1, 2}), blade({3, 4})), t_circ(bullet_right(blade({1, 2}), e(3)), e(4)));
}

TEST(Odot, ScalarBlades) {
  EXPECT_EQ(odot_left(Multivector::scalar(2), blade({3, 4})), Rational(2) * chi_left(blade({3, 4})));
  EXPECT_EQ(odot_right(blade({1, 2}), Multivector::scalar(2)), Rational(2) * chi_right(blade({1, 2})));
}

TEST(Twisted, ScalarParameterIsPlainProduct) {
  Rng rng(4);
  for (int t = 0; t < 30; ++t) {
    const Octonion a = rng.octonion(), b = rng.octonion();
    ASSERT_EQ(circ_u(Multivector::scalar(1), a.to_multivector(), b.to_multivector()), circ(a, b));
    ASSERT_EQ(circ_1u(Multivector::scalar(1), a.to_multivector(), b.to_multivector()), circ(a, b));
    ASSERT_EQ(circ_uv(Multivector::scalar(1), Multivector::scalar(1), a.to_multivector(), b.to_multivector()),
              circ(a, b));
  }
}

TEST(Twisted, ParavectorParameterIsTheXProduct) {
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    const Octonion x = rng.s7_element(), a = rng.octonion(), b = rng.octonion();
    ASSERT_EQ(circ_u(x.to_multivector(), a.to_multivector(), b.to_multivector()), x_product(x, a, b));
    ASSERT_EQ(circ_1u(x.to_multivector(), a.to_multivector(), b.to_multivector()), one_x_product(x, a, b));
  }
}

TEST(Twisted, TwoParameterProduct) {
  // e1 ∘(u,v) e4 with u = e4e6e7, v = e1e5
  EXPECT_EQ(circ_uv(blade({4, 6, 7}), blade({1, 5}), Multivector::generator(1), Multivector::generator(4)),
            e(3, -1));
}

TEST(Twisted, UParameterProduct) {
  // [(e1∘e2)∘e7] ∘ [-e2∘(e7∘e4)] evaluated on the unit table.
  const Octonion lhs = t_circ(t_circ(e(1), e(2)), e(7));
  const Octonion rhs = t_circ(e(2, -1), t_circ(e(7), e(4)));
  EXPECT_EQ(circ_u(blade({2, 7}), Multivector::generator(1), Multivector::generator(4)), t_circ(lhs, rhs));
}

TEST(Twisted, CProduct) {
  const Multivector u = blade({1, 2}), v = blade({3, 4});
  const Octonion c = make_C(u, v);
  EXPECT_EQ(c, odot_left(inverse(u), inverse(v)));
  const Octonion a = e(5), b = e(6);
  EXPECT_EQ(circ_uC(u, c, a, b), circ(bullet_left(a, u), circ(c, b)));
  Conventions right;
  right.odot = OdotVariant::right;
  EXPECT_EQ(make_C(u, v, right), odot_right(inverse(u), inverse(v)));
}

TEST(Twisted, CliffordArgumentsUseOdot) {
  const Multivector u = blade({1, 2}), a = blade({3, 4}), b = blade({5, 6});
  EXPECT_EQ(circ_u(u, a, b), circ(odot_left(a, u), odot_left(inverse(u), b)));
  Conventions right;
  right.odot = OdotVariant::right;
  EXPECT_EQ(circ_u(u, a, b, right), circ(odot_right(a, u), odot_right(inverse(u), b)));
}

TEST(Twisted, SingularParameter) {
  EXPECT_THROW(circ_u(blade({1}) + blade({2, 3}), Multivector::generator(1), Multivector::generator(2)),
               SingularError);
  EXPECT_THROW(Parameter{Multivector{}}, SingularError);
  EXPECT_THROW(circ_uv(Multivector::scalar(1), Multivector(), Multivector::generator(1), Multivector::generator(2)),
               SingularError);
}

TEST(EUnits, TrivialParameter) {
  const auto units = e_units(Multivector::scalar(1));
  for (int a = 1; a <= 7; ++a) EXPECT_EQ(units[a - 1], e(a));
}

TEST(EUnits, BladeParameter) {
  const auto units = e_units_unchecked(blade({2, 7}), E7Rule::corrected);
  EXPECT_EQ(units.e[0], e(5));  // e2∘(e7∘e1) = e2∘e3 = e5
  // û•e6 = e2∘(e7∘e6) = e2∘(-e2) = 1 has no vector part.
  EXPECT_EQ(units.e[5], Octonion::scalar(1));
  EXPECT_FALSE(units.degeneracy.empty());
  EXPECT_THROW(e_units(blade({2, 7})), DegenerateError);
}

TEST(EUnits, Degenerate) {
  EXPECT_THROW(e_units(Multivector::generator(1)), DegenerateError);
  EXPECT_THROW(e_units(Multivector::scalar(1), E7Rule::as_printed), DegenerateError);  // E7 = E1
  EXPECT_THROW(e_units(Multivector()), SingularError);
}

TEST(EUnits, AdmissibleBladesSpanTheVectorPart) {
  int admissible = 0;
  for (BladeIndex b : detail::canonical_order()) {
    const Multivector u = Multivector::blade(b);
    const auto units = e_units_unchecked(u, E7Rule::corrected);
    if (!units.degeneracy.empty()) {
      EXPECT_THROW(e_units(u), DegenerateError);
      continue;
    }
    ++admissible;
    for (const auto& x : units.e) ASSERT_FALSE(x.vector_part_is_zero());
  }
  EXPECT_GT(admissible, 0);
  EXPECT_LT(admissible, 128);
}

TEST(Theorem1, CollapseCases) {
  Rng rng(7);
  for (int t = 0; t < 30; ++t) {
    const Octonion a = rng.signed_unit(), b = rng.signed_unit(), c = rng.signed_unit();
    const auto r = theorem1_check(Multivector::scalar(1), a, b, c);
    ASSERT_EQ(r.sign, 1);
    ASSERT_EQ(r.twisted_parameter, b);
  }
}

TEST(Theorem1, GeneralUnitSphereParameter) {
  Rng rng(8);
  for (int t = 0; t < 10; ++t) {
    const Octonion a = rng.octonion(), b = rng.s7_element(), c = rng.octonion();
    ASSERT_EQ(theorem1_check(Multivector::scalar(1), a, b, c).sign, 1);
  }
}
