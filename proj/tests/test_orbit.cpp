#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "fatoukit/enumerate.hpp"
#include "fatoukit/orbit.hpp"
#include "fatoukit/roots.hpp"

using namespace fatoukit;

namespace {

// Ascending coefficients of prod (z - r_k).
std::vector<cd> from_roots(const std::vector<cd>& roots) {
  std::vector<cd> c{1.0};
  for (const cd& r : roots) {
    std::vector<cd> next(c.size() + 1, 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= r * c[k];
    }
    c = next;
  }
  return c;
}

cd eval_poly(const std::vector<cd>& c, cd z) {
  cd v = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) v = v * z + c[k];
  return v;
}

// Greedy matching distance between two root multisets.
double match_error(std::vector<cd> want, std::vector<cd> got) {
  if (want.size() != got.size()) return INFINITY;
  double worst = 0.0;
  for (const cd& w : want) {
    auto it = std::min_element(got.begin(), got.end(), [&](cd a, cd b) { return std::abs(a - w) < std::abs(b - w); });
    worst = std::max(worst, std::abs(*it - w));
    got.erase(it);
  }
  return worst;
}

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

}  // namespace

TEST_CASE("Aberth recovers random simple roots") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int t = 0; t < 50; ++t) {
    const int deg = 2 + t % 12;
    std::vector<cd> roots;
    while (static_cast<int>(roots.size()) < deg) {
      const cd r(u(rng), u(rng));
      if (std::all_of(roots.begin(), roots.end(), [&](cd q) { return std::abs(q - r) > 0.05; })) roots.push_back(r);
    }
    const auto c = from_roots(roots);
    const AberthResult res = aberth_roots(c);
    CHECK(res.converged);
    CHECK(match_error(roots, res.roots) < 1e-8);
    for (const cd& r : res.roots) CHECK(std::abs(eval_poly(c, r)) < 1e-8);
  }
}

TEST_CASE("Aberth handles multiple and zero roots") {
  const AberthResult a = aberth_roots(from_roots({0.0, 1.5, 1.5}));
  CHECK(match_error({0.0, 1.5, 1.5}, a.roots) < 1e-8);
  const AberthResult b = aberth_roots(from_roots({1.0, 1.0, 1.0, 1.0, 1.0}));
  CHECK(match_error({1.0, 1.0, 1.0, 1.0, 1.0}, b.roots) < 1e-6);
}

TEST_CASE("preimages: residuals below 1e-8") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-2, 2);
  for (const char* f : {"family n: z^2+n*z", "family n: z^3-n", "family n: n*z", "family n: (z-1/2)^n"}) {
    for (const auto& m : enumerate_members(parse_family(f), 6)) {
      const cd w(u(rng), u(rng));
      const Preimages p = preimages(m, w);
      REQUIRE(p.status == PreimageStatus::Ok);
      const PolyForm poly = polynomial_form(m);
      CHECK(static_cast<int>(p.roots.size()) <= poly.degree());
      for (const cd& r : p.roots) CHECK(std::abs(m.eval(r).value - w) < 1e-8 * (1 + std::abs(w)));
    }
  }
  CHECK(preimages(enumerate_members(parse_family("family n: exp(n*z)"), 1)[0], 1.0).status ==
        PreimageStatus::NotSupported);
  CHECK(preimages(enumerate_members(parse_family("set: 3"), 1)[0], 1.0).status == PreimageStatus::NoSolution);
}

TEST_CASE("z^2 = 4 has preimages 2 and -2") {
  const Preimages p = preimages(enumerate_members(parse_family("set: z^2"), 1)[0], 4.0);
  CHECK(match_error({2.0, -2.0}, p.roots) < 1e-12);
}

TEST_CASE("backward orbit of 1 under {nz} is {1/n}") {
  OrbitLimits lim;
  lim.depth = 1;
  const PointSet s = backward_orbit(parse_family("family n: n*z"), 1.0, lim);
  // the n = 1 preimage is 1 itself
  REQUIRE(s.size() == 64);
  for (std::size_t k = 0; k < s.size(); ++k) CHECK(std::abs(s.points()[k] - 1.0 / static_cast<double>(k + 1)) < 1e-15);
}

TEST_CASE("backward orbit under a semigroup") {
  const PointSet s = backward_orbit(parse_family("semigroup L=1: 2*z"), 8.0, OrbitLimits{});
  REQUIRE(s.size() == 4);
  CHECK(std::abs(s.points()[3] - 1.0) < 1e-12);
  CHECK_THROWS_AS(backward_orbit(parse_family("family n: exp(n*z)"), 1.0, OrbitLimits{}), OrbitError);
}

TEST_CASE("point set deduplicates within tolerance") {
  PointSet s(1e-6);
  CHECK(s.insert(1.0));
  CHECK_FALSE(s.insert(1.0 + 1e-7));
  CHECK(s.insert(1.0 + 1e-5));
  CHECK(s.contains(1.0 + 5e-7));
  CHECK(s.size() == 2);
}

TEST_CASE("exceptional candidates") {
  const ExceptionalCandidates a = exceptional_candidates(parse_family("family n: n*z"), {0.0, 1.0}, OrbitLimits{});
  CHECK(a.heuristic);
  REQUIRE(a.candidates.size() == 1);
  CHECK(a.candidates[0] == cd(0.0));
  const ExceptionalCandidates b = exceptional_candidates(parse_family("family n: n*(z-2)"), {0.0}, OrbitLimits{});
  REQUIRE(b.candidates.size() == 1);
}

TEST_CASE("I of {nz} is backward invariant; I of {e^(nz)} is not forward invariant") {
  const Window w = square(2, 48);
  Mask i(w.width, w.height, 0);
  for (int j = 0; j < w.height; ++j) {
    for (int k = 0; k < w.width; ++k) i.at(k, j) = std::abs(w.pixel_center(k, j)) > 2 * w.dx();
  }
  const InvarianceReport b = check_backward_invariance(parse_family("family n: n*z"), w, i, OrbitLimits{});
  CHECK(b.supported);
  CHECK(b.images > 0);
  CHECK(b.violations == 0);

  Mask right(w.width, w.height, 0);
  for (int j = 0; j < w.height; ++j) {
    for (int k = 0; k < w.width; ++k) right.at(k, j) = w.pixel_center(k, j).real() > 0;
  }
  CHECK_FALSE(check_backward_invariance(parse_family("family n: exp(n*z)"), w, right, OrbitLimits{}).supported);
  CHECK(check_forward_invariance(parse_family("family n: exp(n*z)"), w, right).violations > 0);
}

TEST_CASE("generator escape") {
  const EscapeParams p;
  const auto g = [](const char* a, const char* b) { return std::vector<Expr>{parse_expr(a), parse_expr(b)}; };
  CHECK(check_generator_escape(g("2*z", "z+1"), 1.0, p) == 1);
  CHECK_THROWS_AS(check_generator_escape(g("2*z", "z/2"), 0.0, p), OrbitError);
}

TEST_CASE("sample_pixels spreads over the set") {
  Mask m(10, 10, 0);
  for (int k = 0; k < 10; ++k) m.at(k, k) = 1;
  const auto s = sample_pixels(m, 5);
  REQUIRE(s.size() == 5);
  for (const auto& [i, j] : s) CHECK(m.at(i, j) == 1);
  CHECK(sample_pixels(m, 100).size() == 10);
}
