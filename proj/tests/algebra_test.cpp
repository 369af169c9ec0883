#include "bipolar/algebra.hpp"

#include <gtest/gtest.h>

#include <functional>

#include "test_support.hpp"

using namespace bipolar;
using bipolar::testing::Gen;

namespace {

void expect_value(const BipolarValue& x, double mu, double nu, double tol = 1e-12) {
  EXPECT_NEAR(x.mu(), mu, tol);
  EXPECT_NEAR(x.nu(), nu, tol);
}

void expect_same_set(const BipolarFuzzySet& a, const BipolarFuzzySet& b, double tol = kEpsilon) {
  ASSERT_EQ(a.ids(), b.ids());
  for (const auto& [id, x] : a) expect_value(x, b.at(id).mu(), b.at(id).nu(), tol);
}

BipolarFuzzySet singleton(const std::string& id, double mu, double nu) {
  BipolarFuzzySet s;
  s.insert(id, BipolarValue(mu, nu));
  return s;
}

}  // namespace

TEST(NormPair, UnitsAndOrderingOnSamples) {
  Gen gen(21);
  for (NormKind kind : kAllNormKinds) {
    const NormPair n(kind);
    for (int k = 0; k < 5000; ++k) {
      const double a = gen.degree();
      const double b = gen.degree();
      EXPECT_NEAR(n.tnorm(a, 1.0), a, 1e-15);
      EXPECT_NEAR(n.tconorm(a, 0.0), a, 1e-15);
      EXPECT_LE(n.tnorm(a, b), std::min(a, b) + 1e-15);
      EXPECT_GE(n.tconorm(a, b), std::max(a, b) - 1e-15);
      EXPECT_NEAR(n.tnorm(a, b), n.tnorm(b, a), 1e-15);
      // Duality under 1 - x.
      EXPECT_NEAR(n.tconorm(a, b), 1.0 - n.tnorm(1.0 - a, 1.0 - b), 1e-12);
    }
  }
}

TEST(NormPair, ParseNames) {
  EXPECT_EQ(parse_norm_kind("lukasiewicz"), NormKind::Lukasiewicz);
  EXPECT_EQ(parse_norm_kind("product"), NormKind::Product);
  EXPECT_FALSE(parse_norm_kind("drastic"));
  EXPECT_EQ(NormPair().kind(), NormKind::MinMax);
}

TEST(ValueOps, UnionExamples) {
  const BipolarValue a(0.7, 0.2);
  const BipolarValue b(0.4, 0.5);
  expect_value(unite(a, b, NormPair(NormKind::MinMax)), 0.7, 0.2);
  expect_value(unite(a, b, NormPair(NormKind::Lukasiewicz)), 1.0, 0.0);
  expect_value(unite(a, a), a.mu(), a.nu());
}

TEST(ValueOps, IntersectionExamples) {
  expect_value(intersect(BipolarValue(0.7, 0.2), BipolarValue(0.4, 0.5)), 0.4, 0.5);
  expect_value(intersect(landmarks::kTrue, landmarks::kFalse), 0.0, 1.0);
  expect_value(intersect(landmarks::kAmbiguous, landmarks::kAmbiguous,
                         NormPair(NormKind::Product)),
               0.25, 0.75);
}

TEST(ValueOps, UnaryExamples) {
  expect_value(complement(landmarks::kTrue), 0, 1);
  expect_value(complement(landmarks::kAmbiguous), 0.5, 0.5);
  expect_value(complement(BipolarValue(0.3, 0.4)), 0.4, 0.3);

  expect_value(dual(landmarks::kUnknown), 1, 1);
  expect_value(dual(BipolarValue(0.7, 0.3)), 0.7, 0.3);
  expect_value(dual(BipolarValue(0.2, 0.3)), 0.7, 0.8);

  expect_value(negation(landmarks::kTrue), 0, 1);
  expect_value(negation(landmarks::kAmbiguous), 0.5, 0.5);
  expect_value(negation(BipolarValue(0.2, 0.3)), 0.8, 0.7);
}

TEST(ValueOps, InvolutionsAndCommutingSquare) {
  Gen gen(22);
  for (int k = 0; k < 10000; ++k) {
    const BipolarValue x = gen.value();
    expect_value(complement(complement(x)), x.mu(), x.nu(), 0);
    expect_value(negation(negation(x)), x.mu(), x.nu(), kEpsilon);
    expect_value(dual(dual(x)), x.mu(), x.nu(), kEpsilon);
    const BipolarValue d = dual(x);
    expect_value(complement(negation(x)), d.mu(), d.nu(), kEpsilon);
    expect_value(negation(complement(x)), d.mu(), d.nu(), kEpsilon);
  }
}

TEST(ValueOps, ClassFlipping) {
  Gen gen(23);
  for (int k = 0; k < 5000; ++k) {
    const BipolarValue ifs = gen.intuitionistic();
    if (classify(ifs) == ValueClass::Intuitionistic) {
      EXPECT_EQ(classify(dual(ifs)), ValueClass::Paraconsistent);
      EXPECT_EQ(classify(negation(ifs)), ValueClass::Paraconsistent);
    }
    const BipolarValue pfs = gen.paraconsistent();
    if (classify(pfs) == ValueClass::Paraconsistent) {
      EXPECT_EQ(classify(dual(pfs)), ValueClass::Intuitionistic);
      EXPECT_EQ(classify(negation(pfs)), ValueClass::Intuitionistic);
    }
    const BipolarValue fs = gen.fuzzy();
    expect_value(dual(fs), fs.mu(), fs.nu(), kEpsilon);
    expect_value(negation(fs), complement(fs).mu(), complement(fs).nu(), kEpsilon);
  }
}

TEST(FuzzySet, InsertionOrderAndLookup) {
  BipolarFuzzySet s;
  s.insert("b", BipolarValue(0.1, 0.2));
  s.insert("a", BipolarValue(0.3, 0.4));
  EXPECT_EQ(s.ids(), (std::vector<std::string>{"b", "a"}));
  EXPECT_EQ(s.at("a"), BipolarValue(0.3, 0.4));
  EXPECT_THROW(s.insert("a", BipolarValue(0, 0)), DomainError);
  EXPECT_THROW(s.insert("", BipolarValue(0, 0)), DomainError);
  EXPECT_THROW(s.at("zz"), DomainError);
}

TEST(SetOp, ComplementOfSingleton) {
  expect_same_set(set_op(SetOpKind::Complement, singleton("x1", 1, 0)), singleton("x1", 0, 1));
}

TEST(SetOp, UnionWithItselfIsIdentityUnderMinMax) {
  Gen gen(24);
  const auto a = gen.set(10);
  expect_same_set(set_op(SetOpKind::Union, a, &a), a, 0);
}

TEST(SetOp, UniverseMismatchNamesTheDifference) {
  BipolarFuzzySet a = singleton("x1", 0.1, 0.1);
  a.insert("x2", BipolarValue(0.2, 0.2));
  BipolarFuzzySet b = singleton("x1", 0.3, 0.3);
  b.insert("x3", BipolarValue(0.2, 0.2));
  try {
    set_op(SetOpKind::Intersection, a, &b);
    FAIL() << "expected UniverseMismatch";
  } catch (const UniverseMismatch& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("x2"), std::string::npos);
    EXPECT_NE(what.find("x3"), std::string::npos);
  }
  EXPECT_THROW(set_op(SetOpKind::Union, a), DomainError);
}

TEST(SetOp, SameIdentifiersInAnotherOrderAlign) {
  BipolarFuzzySet a = singleton("x1", 0.1, 0.9);
  a.insert("x2", BipolarValue(0.6, 0.2));
  BipolarFuzzySet b = singleton("x2", 0.4, 0.5);
  b.insert("x1", BipolarValue(0.3, 0.3));
  const auto u = set_op(SetOpKind::Union, a, &b);
  EXPECT_EQ(u.ids(), a.ids());
  expect_value(u.at("x1"), 0.3, 0.3);
  expect_value(u.at("x2"), 0.6, 0.2);
}

// All six identities, for every registry pair, elementwise on random sets.
TEST(SetOp, DeMorganFamily) {
  Gen gen(25);
  using Unary = SetOpKind;
  for (NormKind kind : kAllNormKinds) {
    const NormPair n(kind);
    for (int trial = 0; trial < 200; ++trial) {
      const auto a = gen.set(10);
      const auto b = gen.set(10);
      auto un = [&](const BipolarFuzzySet& x, const BipolarFuzzySet& y) {
        return set_op(SetOpKind::Union, x, &y, n);
      };
      auto in = [&](const BipolarFuzzySet& x, const BipolarFuzzySet& y) {
        return set_op(SetOpKind::Intersection, x, &y, n);
      };
      auto op = [](Unary k, const BipolarFuzzySet& x) { return set_op(k, x); };

      expect_same_set(op(Unary::Negation, un(a, b)),
                      in(op(Unary::Negation, a), op(Unary::Negation, b)));
      expect_same_set(op(Unary::Complement, un(a, b)),
                      in(op(Unary::Complement, a), op(Unary::Complement, b)));
      expect_same_set(op(Unary::Negation, in(a, b)),
                      un(op(Unary::Negation, a), op(Unary::Negation, b)));
      expect_same_set(op(Unary::Complement, in(a, b)),
                      un(op(Unary::Complement, a), op(Unary::Complement, b)));
      expect_same_set(op(Unary::Dual, un(a, b)), un(op(Unary::Dual, a), op(Unary::Dual, b)));
      expect_same_set(op(Unary::Dual, in(a, b)), in(op(Unary::Dual, a), op(Unary::Dual, b)));
    }
  }
}
