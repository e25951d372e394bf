#include <gtest/gtest.h>

#include "test_support.hpp"

namespace clifflag {
namespace {

using testing::Rng;

Multivector mv(const char* text, Signature sig) { return parse_multivector(text, sig); }

TEST(ClassOf, Examples) {
  EXPECT_TRUE(same_class(mv("i", kQuaternion), mv("j", kQuaternion)));
  EXPECT_EQ(class_of(mv("i", kQuaternion)), ClassId::unit_sphere());
  EXPECT_TRUE(same_class(mv("e1", kR03), mv("e23", kR03)));
  EXPECT_FALSE(same_class(mv("0", kQuaternion), mv("1", kQuaternion)));
  EXPECT_EQ(class_of(mv("-1", kR03)), ClassId::real(-1));
  EXPECT_EQ(class_of(mv("1 + i", kQuaternion)), ClassId::sphere(2, 2));
}

TEST(ClassOf, OutsideConeThrows) {
  try {
    (void)class_of(mv("e123", kR03));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), errc::not_in_cone);
  }
  EXPECT_THROW(ClassId::sphere(2, 1), Error);
}

TEST(ClassOf, R20CounterexampleHasDistinctLabels) {
  const Signature r20{2, 0};
  auto x = mv("e12", r20), y = mv("1/3 e1 + 2/3 e12", r20);
  EXPECT_EQ(class_of(x), ClassId::sphere(0, 1));
  EXPECT_EQ(class_of(y), ClassId::sphere(0, make_rational(1, 3)));
  EXPECT_FALSE(is_invertible(x - y));
}

TEST(CharacteristicPoly, Examples) {
  EXPECT_EQ(to_string(characteristic_poly(ClassId::unit_sphere(), kQuaternion)), "X^2*(1) + (1)");
  EXPECT_EQ(to_string(characteristic_poly(ClassId::real(-1), kQuaternion)), "X*(1) + (1)");
  EXPECT_EQ(to_string(characteristic_poly(class_of(mv("1 + i", kQuaternion)), kQuaternion)),
            "X^2*(1) + X*(-2) + (2)");
}

TEST(CharacteristicPoly, VanishesOnTheWholeClass) {
  Rng rng(31);
  for (int n = 0; n < 30; ++n) {
    auto y = testing::random_nonreal_quaternion(rng);
    auto delta = characteristic_poly(class_of(y), kQuaternion);
    ASSERT_TRUE(eval(delta, testing::conjugate_by_random(rng, y)).is_zero());
    auto x = testing::random_cone_r03(rng);
    if (x.is_real()) continue;
    auto delta3 = characteristic_poly(class_of(x), kR03);
    ASSERT_TRUE(eval(delta3, testing::random_class_point(rng, kR03, testing::quaternion_rep(x))).is_zero());
  }
}

TEST(Split, Examples) {
  EXPECT_EQ(split_h_plus_h(mv("1", kR03)), (HPair{mv("1", kQuaternion), mv("1", kQuaternion)}));
  EXPECT_EQ(split_h_plus_h(mv("e123", kR03)), (HPair{mv("1", kQuaternion), mv("-1", kQuaternion)}));
  EXPECT_THROW(split_h_plus_h(mv("1", kQuaternion)), Error);
}

TEST(Split, ComponentsAreImagesUnderCentralIdempotents) {
  // x (1 +- e123)/2 re-expressed in the basis (1, e1, e2, e12)(1 +- e123)/2.
  Rng rng(32);
  const Rational half(1, 2);
  const auto e123 = Multivector::blade(kR03, blade::e123);
  const auto one = Multivector::scalar(kR03, 1);
  for (int n = 0; n < 20; ++n) {
    auto x = testing::random_multivector(rng, kR03);
    auto parts = split_h_plus_h(x);
    for (int s : {1, -1}) {
      auto eps = (one + e123 * Rational(s)) * half;
      const auto& q = s == 1 ? parts.plus : parts.minus;
      Multivector lifted(kR03);
      for (BladeMask b : {blade::e0, blade::e1, blade::e2, blade::e12}) lifted += Multivector::blade(kR03, b, q[b]);
      ASSERT_EQ(x * eps, lifted * eps);
    }
  }
}

TEST(Split, IsAUnitalHomomorphismAndMergeInvertsIt) {
  Rng rng(33);
  for (int n = 0; n < 100; ++n) {
    auto x = testing::random_multivector(rng, kR03), y = testing::random_multivector(rng, kR03);
    auto sx = split_h_plus_h(x), sy = split_h_plus_h(y);
    auto sxy = split_h_plus_h(x * y);
    ASSERT_EQ(sxy.plus, sx.plus * sy.plus);
    ASSERT_EQ(sxy.minus, sx.minus * sy.minus);
    ASSERT_EQ(merge_h_plus_h(sx), x);
    // Invertible iff both components are nonzero, cross-checked with psi.
    const bool components_nonzero = !sx.plus.is_zero() && !sx.minus.is_zero();
    ASSERT_EQ(components_nonzero, !is_zero(psi_plus(x) * psi_minus(x)));
    ASSERT_EQ(components_nonzero, is_invertible(x));
  }
}

TEST(DistinctClasses, DistinctClassDifferencesAreInvertible) {
  Rng rng(34);
  int checked = 0;
  while (checked < 200) {
    auto x = testing::random_cone_r03(rng), y = testing::random_cone_r03(rng);
    if (same_class(x, y)) continue;
    ASSERT_TRUE(is_invertible(x - y)) << to_string(x) << " | " << to_string(y);
    ++checked;
  }
  // Same class does not guarantee it.
  EXPECT_FALSE(is_invertible(mv("e1", kR03) - mv("e23", kR03)));
}

TEST(ConeClosure, ConjugatesStayInClassWhenInCone) {
  Rng rng(35);
  int in_cone = 0;
  for (int n = 0; n < 200; ++n) {
    auto x = testing::random_cone_r03(rng);
    auto a = testing::random_invertible(rng, kR03);
    auto c = a * x * inverse(a);
    if (in_quadratic_cone(c)) {
      ++in_cone;
      ASSERT_TRUE(same_class(x, c));
    }
  }
  EXPECT_GT(in_cone, 0);
  const Signature r04{0, 4};
  auto g = mv("2 + e123", r04);
  EXPECT_FALSE(in_quadratic_cone(inverse(g) * mv("e4", r04) * g));
}

}  // namespace
}  // namespace clifflag
