#include <gtest/gtest.h>

#include "test_support.hpp"

namespace clifflag {
namespace {

using testing::Rng;

Multivector q(const char* text) { return parse_multivector(text, kQuaternion); }
Multivector r(const char* text) { return parse_multivector(text, kR03); }
Polynomial qp(const char* text) { return parse_polynomial(text, kQuaternion); }
Polynomial rp(const char* text) { return parse_polynomial(text, kR03); }

TEST(AffineRestriction, CharacteristicPolynomialVanishes) {
  auto ar = affine_restriction(qp("X^2 + (1)"), ClassId::unit_sphere());
  EXPECT_TRUE(ar.a.is_zero());
  EXPECT_TRUE(ar.b.is_zero());
}

TEST(AffineRestriction, Example1InterpolantOnUnitSphere) {
  auto ar = affine_restriction(qp("X^3*(i) + X^2 + (1)"), ClassId::unit_sphere());
  const auto slope = inverse(q("j") - q("i")) * (q("k") - q("1"));
  EXPECT_EQ(slope, q("-i"));
  EXPECT_EQ(ar.a, slope);
  EXPECT_EQ(ar.b, q("1") - q("i") * slope);
  EXPECT_EQ(q("i") * ar.a + ar.b, q("1"));
}

TEST(AffineRestriction, RealClass) {
  auto ar = affine_restriction(qp("X^2*(i) + (1)"), ClassId::real(2));
  EXPECT_TRUE(ar.a.is_zero());
  EXPECT_EQ(ar.b, q("1 + 4 i"));
}

TEST(AffineRestriction, MatchesEvaluationOnSampledClassPoints) {
  Rng rng(51);
  for (int n = 0; n < 100; ++n) {
    const Signature sig = n % 2 ? kR03 : kQuaternion;
    auto p = testing::random_polynomial(rng, sig, testing::uniform_int(rng, 0, 5));
    Multivector y = sig.is_quaternion() ? testing::random_nonreal_quaternion(rng) : testing::random_cone_r03(rng);
    if (y.is_real()) continue;
    const ClassId cls = class_of(y);
    auto ar = affine_restriction(p, cls);
    for (int k = 0; k < 3; ++k) {
      auto x = testing::random_class_point(rng, sig, testing::quaternion_rep(y));
      ASSERT_EQ(eval(p, x), x * ar.a + ar.b);
    }
  }
}

TEST(RootsInClass, DegreeOneR03PolynomialWithTwoRootsInOneClass) {
  auto p = rp("X*(e1 + e23) + (1 - e123)");
  auto roots = roots_in_class(p, ClassId::unit_sphere());
  ASSERT_EQ(roots.kind, RootSet::Kind::points);
  EXPECT_FALSE(roots.exhaustive());
  EXPECT_TRUE(roots.contains(r("e1")));
  EXPECT_TRUE(roots.contains(r("e23")));
  EXPECT_FALSE(roots.contains(r("e2")));
  EXPECT_TRUE(eval(p, r("e1")).is_zero());
  EXPECT_TRUE(eval(p, r("e23")).is_zero());
  EXPECT_FALSE(eval(p, r("e2")).is_zero());
  for (const auto& x : roots.points) {
    ASSERT_TRUE(eval(p, x).is_zero()) << to_string(x);
    ASSERT_TRUE(belongs_to(x, ClassId::unit_sphere()));
  }
  // The only paravector of the family is e1.
  int paravectors = 0;
  for (const auto& x : roots.points) paravectors += is_paravector(x);
  EXPECT_EQ(paravectors, 1);
  EXPECT_EQ(roots.points.front(), r("e1"));
}

TEST(RootsInClass, QuaternionCases) {
  EXPECT_EQ(roots_in_class(qp("X^2 + (1)"), ClassId::unit_sphere()).kind, RootSet::Kind::whole_class);
  auto single = roots_in_class(Polynomial::linear(q("1 + i")), class_of(q("1 + i")));
  ASSERT_EQ(single.kind, RootSet::Kind::points);
  EXPECT_EQ(single.points, std::vector<Multivector>{q("1 + i")});
  EXPECT_EQ(roots_in_class(Polynomial::linear(q("1 + i")), ClassId::unit_sphere()).kind, RootSet::Kind::empty);
  EXPECT_EQ(roots_in_class(qp("(1)"), ClassId::unit_sphere()).kind, RootSet::Kind::empty);
  auto real = roots_in_class(Polynomial::linear(q("3")), ClassId::real(3));
  ASSERT_EQ(real.kind, RootSet::Kind::points);
  EXPECT_EQ(real.points.front(), q("3"));
}

TEST(RootsInClass, R03WholeClassAndSinglePoint) {
  EXPECT_EQ(roots_in_class(rp("X^2 + (1)"), ClassId::unit_sphere()).kind, RootSet::Kind::whole_class);
  auto single = roots_in_class(Polynomial::linear(r("e2 + e3")), ClassId::sphere(0, 2));
  ASSERT_EQ(single.kind, RootSet::Kind::points);
  EXPECT_TRUE(single.exhaustive());
  EXPECT_EQ(single.points, std::vector<Multivector>{r("e2 + e3")});
}

TEST(RootsInClass, UnsupportedSignature) {
  try {
    (void)roots_in_class(parse_polynomial("X", Signature{2, 0}), ClassId::unit_sphere());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), errc::unsupported_signature);
  }
}

TEST(RootsInClass, DegreeOneConeRootsShareAClass) {
  // Two cone roots of X a1 + a0 always lie in one class: pick a root y, then
  // every root found in any other probed class must not exist.
  Rng rng(52);
  for (int n = 0; n < 100; ++n) {
    auto y = testing::random_cone_r03(rng);
    auto a1 = testing::random_multivector(rng, kR03, 0.5);
    if (a1.is_zero()) continue;
    Polynomial p(kR03, {-(y * a1), a1});
    ASSERT_TRUE(eval(p, y).is_zero());
    for (int k = 0; k < 5; ++k) {
      auto z = testing::random_cone_r03(rng);
      if (same_class(z, y)) continue;
      ASSERT_EQ(roots_in_class(p, class_of(z)).kind, RootSet::Kind::empty);
    }
  }
}

TEST(CharDivisibility, Examples) {
  auto s1 = char_divisibility(star_product(qp("X^2 + (1)"), Polynomial::linear(q("1"))), ClassId::unit_sphere());
  EXPECT_EQ(s1.power, 1u);
  EXPECT_EQ(s1.quotient, Polynomial::linear(q("1")));
  auto s2 = char_divisibility(qp("X^2 + (1)"), ClassId::unit_sphere());
  EXPECT_EQ(s2.power, 1u);
  EXPECT_EQ(s2.quotient, qp("(1)"));
}

TEST(CharDivisibility, RecoversConstructedPower) {
  Rng rng(53);
  for (int n = 0; n < 30; ++n) {
    auto y = testing::random_cone_r03(rng);
    if (y.is_real()) continue;
    const ClassId cls = class_of(y);
    auto delta = characteristic_poly(cls, kR03);
    auto rest = testing::random_polynomial(rng, kR03, testing::uniform_int(rng, 0, 2));
    if (char_divisibility(rest, cls).power != 0) continue;
    auto p = star_product(star_product(delta, delta), rest);
    auto result = char_divisibility(p, cls);
    ASSERT_EQ(result.power, 2u);
    ASSERT_EQ(result.quotient, rest);
  }
}

TEST(Census, RealTimesUnitSphere) {
  auto p = star_product(Polynomial::linear(r("1")), rp("X^2 + (1)"));
  auto census = paravector_root_census(p, {1}, {ClassId::unit_sphere()});
  EXPECT_EQ(census.real_roots, 1u);
  EXPECT_EQ(census.spherical, 1u);
  EXPECT_EQ(census.isolated, 0u);
  EXPECT_EQ(census.degree, 3u);
  EXPECT_TRUE(census.tight());
}

TEST(Census, DegreeOneFamilyCountsOnlyTheParavectorRoot) {
  auto census = paravector_root_census(rp("X*(e1 + e23) + (1 - e123)"), {}, {ClassId::unit_sphere()});
  EXPECT_EQ(census.real_roots, 0u);
  EXPECT_EQ(census.spherical, 0u);
  EXPECT_EQ(census.isolated, 1u);
  EXPECT_TRUE(census.within_bound());
}

TEST(Census, R20NegativeControl) {
  // Roots in two distinct cone classes for a degree-one polynomial: the
  // class-count bound fails in R_{2,0}, so no census machinery applies there.
  const Signature r20{2, 0};
  auto p = parse_polynomial("X*(e1 - e12) + (-1 + e2)", r20);
  auto x = parse_multivector("e12", r20), y = parse_multivector("1/3 e1 + 2/3 e12", r20);
  EXPECT_TRUE(eval(p, x).is_zero());
  EXPECT_TRUE(eval(p, y).is_zero());
  EXPECT_TRUE(in_quadratic_cone(x));
  EXPECT_TRUE(in_quadratic_cone(y));
  EXPECT_FALSE(class_of(x) == class_of(y));
  EXPECT_FALSE(is_invertible(parse_multivector("e1 - e12", r20)));
  EXPECT_THROW(roots_in_class(p, class_of(x)), Error);
}

TEST(RootClassCount, RootsOccupyAtMostDegreeClasses) {
  Rng rng(54);
  for (int n = 0; n < 100; ++n) {
    const int d = testing::uniform_int(rng, 1, 5);
    auto problem = testing::random_r03_problem(rng, d);
    std::vector<Multivector> roots;
    for (const auto& pair : problem.pairs) roots.push_back(pair.point);
    auto p = vanishing_polynomial(kR03, roots) * testing::random_invertible(rng, kR03);
    ASSERT_EQ(*p.degree(), static_cast<std::size_t>(d));
    std::vector<ClassId> probes;
    for (const auto& x : roots) probes.push_back(class_of(x));
    for (int k = 0; k < 20; ++k) probes.push_back(class_of(testing::random_cone_r03(rng)));
    std::vector<ClassId> occupied;
    for (const auto& c : probes) {
      if (roots_in_class(p, c).kind == RootSet::Kind::empty) continue;
      if (std::find(occupied.begin(), occupied.end(), c) == occupied.end()) occupied.push_back(c);
    }
    ASSERT_LE(occupied.size(), static_cast<std::size_t>(d));
    for (const auto& x : roots) ASSERT_TRUE(roots_in_class(p, class_of(x)).contains(x));
  }
}

}  // namespace
}  // namespace clifflag
