#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fatoukit/dynamics.hpp"
#include "fatoukit/enumerate.hpp"

using namespace fatoukit;

namespace {

Window square(double r, int n) {
  Window w;
  w.re_min = -r;
  w.re_max = r;
  w.im_min = -r;
  w.im_max = r;
  w.width = n;
  w.height = n;
  return w;
}

cd central_difference(const Member& m, cd z) {
  const double h = 1e-6;
  return (m.eval(z + h).value - m.eval(z - h).value) / (2 * h);
}

}  // namespace

TEST_CASE("uniform class thresholds") {
  CHECK(uniform_class({0.0, 0.0}) == FixedClass::SuperAttracting);
  CHECK(uniform_class({0.5, 0.9}) == FixedClass::Attracting);
  CHECK(uniform_class({1.5, cd(0, 2)}) == FixedClass::Repelling);
  CHECK(uniform_class({1.0, cd(0, 1)}) == FixedClass::Indifferent);
  CHECK_FALSE(uniform_class({0.5, 2.0}));
  CHECK(uniform_class({0.5, 2.0}, 1) == FixedClass::Repelling);
}

TEST_CASE("multipliers match finite differences") {
  for (const char* f : {"family n: (1/2+1/(3*n))*z*exp(n*z)", "family n: z^n*(z-1/2)+z", "family n: 2*(1+1/n)*z*exp(z)"}) {
    const FixedPointRecord r = multiplier_spectrum(parse_family(f), 0.0, 12);
    const auto ms = enumerate_members(parse_family(f), 12);
    REQUIRE(r.multipliers.size() == ms.size());
    for (std::size_t k = 0; k < ms.size(); ++k) {
      CHECK(std::abs(r.multipliers[k] - central_difference(ms[k], 0.0)) < 1e-6);
    }
  }
}

TEST_CASE("the ring family: 0 indifferent after the first member, 1/2 repelling") {
  const FamilySpec s = parse_family("family n: z^n*(z-1/2)+z");
  const FixedPointRecord zero = multiplier_spectrum(s, 0.0, 16);
  CHECK(zero.cls == FixedClass::Indifferent);
  CHECK(zero.head_exceptions == std::vector<int>{0});
  // f_n'(1/2) = (1/2)^n + 1
  const FixedPointRecord half = multiplier_spectrum(s, 0.5, 16);
  CHECK(half.cls == FixedClass::Repelling);
  for (int k = 0; k < 16; ++k) CHECK(std::abs(half.multipliers[k] - (1 + std::pow(0.5, k + 1))) < 1e-12);
}

TEST_CASE("a point that is not fixed is rejected") {
  CHECK_THROWS_AS(multiplier_spectrum(parse_family("family n: n*z"), 1.0, 8), DynamicsError);
}

TEST_CASE("fixed point search finds 0 for the scaled family and nothing spurious") {
  const auto fps = find_fixed_points(parse_family("family n: 2*(1+1/n)*z*exp(z)"), square(1, 32), 16);
  REQUIRE(fps.size() == 1);
  CHECK(std::abs(fps[0].location) < 1e-12);
  CHECK(fps[0].cls == FixedClass::Repelling);
  CHECK(fps[0].residual < kFixedResidual);
}

TEST_CASE("limit function of z e^z (1-1/(2n))") {
  EscapeParams p;
  p.n_max = 8192;
  const std::vector<cd> probes = {0.0, 0.01, cd(0, 0.01), -0.01};
  const LimitFunctionEstimate e = limit_functions(parse_family("family n: z*exp(z)*(1-1/(2*n))"), probes, p);
  REQUIRE(e.kind == LimitKind::Finite);
  for (std::size_t q = 0; q < probes.size(); ++q) {
    CHECK(std::abs(e.values[q] - probes[q] * std::exp(probes[q])) < 1e-6);
  }
  CHECK(std::abs(estimate_derivative(e, 0.0) - 1.0) < 1e-4);
}

TEST_CASE("limit kinds") {
  const EscapeParams p;
  CHECK(limit_functions(parse_family("family n: n*(z-2)"), {0.0, 0.5}, p).kind == LimitKind::Infinity);
  CHECK(limit_functions(parse_family("family n: z^n"), {0.5, 0.9}, p).kind == LimitKind::Finite);
  // e^(inz) rotates forever on the real line
  CHECK(limit_functions(parse_family("family n: exp(i*n*z)"), {0.3}, p).kind == LimitKind::None);
  CHECK_THROWS_AS(limit_functions(parse_family("family n: z"), {}, p), DynamicsError);
}

TEST_CASE("constant limit check") {
  CHECK(check_constant_limit_fixed(parse_family("family n: n*z"), 0.0, 16).verdict == ConstantLimitVerdict::Pass);
  const ConstantLimitCheck f = check_constant_limit_fixed(parse_family("family n: n*z"), 1.0, 16);
  CHECK(f.verdict == ConstantLimitVerdict::Fail);
  CHECK(f.offending.size() == 15);
  const ConstantLimitCheck h = check_constant_limit_fixed(parse_family("family n: z*exp(z)*(1-1/(2*n))"), 0.0, 16);
  CHECK(h.verdict == ConstantLimitVerdict::HypothesisNotMet);
  CHECK(h.all_fixed);
}
