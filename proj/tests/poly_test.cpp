#include "interlace/poly.hpp"

#include <gtest/gtest.h>

#include <random>

#include "interlace/error.hpp"

namespace interlace {
namespace {

UniPoly P(std::vector<Integer> c) { return UniPoly("x", std::move(c)); }

UniPoly random_poly(std::mt19937_64& rng) {
  std::vector<Integer> c(rng() % 7);
  for (auto& v : c) v = static_cast<long long>(rng() % 41) - 20;
  return P(std::move(c));
}

TEST(UniPoly, RingExamples) {
  const UniPoly x = UniPoly::monomial(1, 1);
  EXPECT_EQ(add(x, x), P({0, 2}));
  EXPECT_EQ(mul(P({1, 1}), P({-1, 1})), P({-1, 0, 1}));
  EXPECT_TRUE(scale(P({0, 2, 1}), 0).is_zero());
}

TEST(UniPoly, VariableMismatchThrows) {
  EXPECT_THROW(UniPoly("x", {1}) + UniPoly("y", {1}), ContractError);
  EXPECT_THROW(UniPoly("x", {1}) * UniPoly("y", {1}), ContractError);
}

TEST(UniPoly, TrailingZerosTrimmed) {
  const UniPoly p = P({1, 2, 0, 0});
  EXPECT_EQ(p.degree(), 1);
  EXPECT_EQ(P({0, 0}).degree(), -1);
  EXPECT_TRUE((P({0, 1}) - P({0, 1})).coeffs().empty());
}

TEST(UniPoly, AddShiftedPower) {
  EXPECT_EQ(add_shifted_power(UniPoly(), 0, -1), P({1}));
  EXPECT_EQ(add_shifted_power(UniPoly(), 2, -1), P({1, -2, 1}));
  EXPECT_EQ(add_shifted_power(P({1}), 1, -1), P({0, 1}));
}

TEST(UniPoly, ShiftedPowerSumMatchesRepeatedAdds) {
  const std::vector<std::uint64_t> hist{3, 0, 5, 1, 7};
  UniPoly slow;
  for (unsigned k = 0; k < hist.size(); ++k)
    for (std::uint64_t i = 0; i < hist[k]; ++i) slow = add_shifted_power(slow, k, -1);
  EXPECT_EQ(shifted_power_sum(hist, -1), slow);
}

TEST(UniPoly, Substitute) {
  EXPECT_EQ(substitute(P({0, 0, 1}), 1), P({1, 2, 1}));
  EXPECT_EQ(substitute(P({1, 2, 1}), -1), P({0, 0, 1}));
  EXPECT_EQ(substitute(P({0, 2}), 1), P({2, 2}));
}

TEST(UniPoly, DivideByVar) {
  EXPECT_EQ(divide_by_var(P({0, 1, 1})), P({1, 1}));
  EXPECT_EQ(divide_by_var(P({0, 1})), P({1}));
  EXPECT_EQ(divide_by_var(P({0, 2, 2})), P({2, 2}));
  EXPECT_THROW(divide_by_var(P({1, 1})), ContractError);
}

TEST(UniPoly, SubstituteRoundTrip) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 200; ++i) {
    const UniPoly p = random_poly(rng);
    EXPECT_EQ(substitute(substitute(p, 1), -1), p);
  }
}

TEST(UniPoly, ShiftedPowerAtTwoIsOne) {
  for (unsigned k = 0; k < 40; ++k) EXPECT_EQ(add_shifted_power(UniPoly(), k, -1).eval(2), 1);
}

TEST(UniPoly, RingAxioms) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 200; ++i) {
    const UniPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
  }
}

TEST(UniPoly, ExactBeyondSixtyFourBits) {
  // (x - 1)^80 has a middle coefficient C(80, 40) ~ 1.07e23.
  const UniPoly p = add_shifted_power(UniPoly(), 80, -1);
  EXPECT_EQ(p.coeff(40).str(), "107507208733336176461620");
  EXPECT_EQ(p.eval(2), 1);
}

TEST(UniPoly, TextRendering) {
  EXPECT_EQ(P({}).to_string(), "0");
  EXPECT_EQ(P({0, 2, 1}).to_string(), "x^2 + 2*x");
  EXPECT_EQ(P({1, -2, 1}).to_string(), "x^2 - 2*x + 1");
  EXPECT_EQ(P({-1}).to_string(), "-1");
  EXPECT_EQ(P({0, -1, 0, 3}).to_string(), "3*x^3 - x");
  EXPECT_EQ(UniPoly("y", {0, 0, 1}).to_string(), "y^2");
}

TEST(UniPoly, JsonRendering) {
  EXPECT_EQ(P({0, 2, 1}).to_json(), R"({"var":"x","coeffs":[0,2,1]})");
  EXPECT_EQ(P({}).to_json(), R"({"var":"x","coeffs":[]})");
}

TEST(BiPoly, EvalAtExamples) {
  // (x - 1)(y - 1) = xy - x - y + 1
  BiPoly p;
  p.add_term(1, 1, 1);
  p.add_term(-1, 1, 0);
  p.add_term(-1, 0, 1);
  p.add_term(1, 0, 0);
  EXPECT_EQ(eval_at(p, 2), UniPoly("y", {-1, 1}));
  EXPECT_EQ(eval_at(BiPoly::monomial(1, 0, 5), 2), UniPoly::monomial(1, 5, "y"));
  // q(K2; x, y) = 2y + (x-1)^2 - 1 = x^2 - 2x + 2y; at x = 2 -> 2y
  BiPoly k2;
  k2.add_term(1, 2, 0);
  k2.add_term(-2, 1, 0);
  k2.add_term(2, 0, 1);
  EXPECT_EQ(eval_at(k2, 2), UniPoly("y", {0, 2}));
}

TEST(BiPoly, ZeroTermsDropped) {
  BiPoly p;
  p.add_term(3, 1, 2);
  p.add_term(-3, 1, 2);
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(p.to_string(), "0");
}

TEST(BiPoly, ProductMatchesHistogramExpansion) {
  // histogram with a single (rank 2, nullity 1) entry is (x-1)^2 (y-1)
  std::vector<std::vector<std::uint64_t>> hist(3, std::vector<std::uint64_t>(3, 0));
  hist[2][1] = 1;
  BiPoly xm1, ym1;
  xm1.add_term(1, 1, 0);
  xm1.add_term(-1, 0, 0);
  ym1.add_term(1, 0, 1);
  ym1.add_term(-1, 0, 0);
  EXPECT_EQ(shifted_power_sum_2d(hist), xm1 * xm1 * ym1);
}

TEST(BiPoly, Rendering) {
  BiPoly p;
  p.add_term(1, 2, 1);
  p.add_term(-3, 0, 1);
  p.add_term(1, 0, 0);
  p.add_term(2, 2, 0);
  EXPECT_EQ(p.to_string(), "x^2*y + 2*x^2 - 3*y + 1");
  EXPECT_EQ(p.to_json(), R"({"vars":["x","y"],"terms":[[0,0,1],[0,1,-3],[2,0,2],[2,1,1]]})");
}

}  // namespace
}  // namespace interlace
