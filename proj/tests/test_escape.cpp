#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "fatoukit/escape.hpp"

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

// Parts used to build random unions; each has a known escape behaviour.
const char* const kPool[] = {
    "family n: n*z",      "family n: n*(z-1)",    "family n: exp(n*z)", "family n: z^n",
    "family n: (z-1/2)^n", "family n: z/(1+1/n)", "family n: n*z^2",    "family n: exp(-n*z)",
};

}  // namespace

TEST_CASE("profile of {nz} at 1/2 is n/2") {
  const EscapeProfile p = escape_profile(parse_family("family n: n*z"), 0.5, EscapeParams{});
  REQUIRE(p.parts.size() == 1);
  REQUIRE(p.parts[0].magnitudes.size() == 256);
  for (std::size_t k = 0; k < 256; ++k) CHECK(p.parts[0].magnitudes[k] == doctest::Approx((k + 1) / 2.0));
  REQUIRE(p.parts[0].window_min.size() == 8);
  CHECK(p.parts[0].window_min[7] == doctest::Approx(225 / 2.0));
  CHECK(p.parts[0].window_max[7] == doctest::Approx(128.0));
}

TEST_CASE("union at 1: the {n(z-1)} part pins the point outside I") {
  const EscapeParams ep;
  const EscapeVerdict v = escape_verdict(escape_profile(parse_family("family n: n*z | family n: n*(z-1)"), 1.0, ep), ep);
  CHECK_FALSE(v.in_I);
  CHECK(v.in_U);
}

TEST_CASE("decide_part rules") {
  EscapeParams p;
  const double inf = std::numeric_limits<double>::infinity();
  SUBCASE("minima above R and not decreasing") {
    const double mins[] = {1, 10, 2e6, 3e6};
    const double maxs[] = {2, 20, 3e6, 4e6};
    CHECK(decide_part(mins, maxs, 4, p).in_I);
  }
  SUBCASE("slow linear growth passes the trend rule") {
    const double mins[] = {1, 33, 65, 97, 129, 161, 193, 225};
    const double maxs[] = {32, 64, 96, 128, 160, 192, 224, 256};
    const PartVerdict v = decide_part(mins, maxs, 8, p);
    CHECK(v.in_I);
    CHECK(v.in_U);
  }
  SUBCASE("bounded oscillation is neither") {
    const double mins[] = {0, 0, 0, 0, 0, 0};
    const double maxs[] = {5, 5, 5, 5, 5, 5};
    const PartVerdict v = decide_part(mins, maxs, 6, p);
    CHECK_FALSE(v.in_I);
    CHECK_FALSE(v.in_U);
  }
  SUBCASE("a growing subsequence beside a bounded one is U only") {
    const double mins[] = {0, 0, 0, 0, 0, 0};
    const double maxs[] = {1e7, 1e8, 1e9, 1e10, 1e11, inf};
    const PartVerdict v = decide_part(mins, maxs, 6, p);
    CHECK_FALSE(v.in_I);
    CHECK(v.in_U);
  }
}

TEST_CASE("I of {e^(nz)} is the right half plane outside a band") {
  const Window w = square(2, 64);
  const Mask i = classify_I(parse_family("family n: exp(n*z)"), w, EscapeParams{});
  for (int j = 0; j < w.height; ++j) {
    for (int k = 0; k < w.width; ++k) {
      const double re = w.pixel_center(k, j).real();
      if (std::abs(re) <= 2 * w.dx()) continue;
      CHECK((i.at(k, j) != 0) == (re > 0));
    }
  }
}

TEST_CASE("a family without infinite part has vacuous I and empty U") {
  const EscapeMaps m = classify_escape(parse_family("set: z; 2*z; z^2"), square(1, 8), EscapeParams{});
  CHECK(m.vacuous);
  for (auto v : m.in_I.data) CHECK(v == 1);
  for (auto v : m.in_U.data) CHECK(v == 0);
  CHECK(std::any_of(m.warnings.begin(), m.warnings.end(),
                    [](const std::string& w) { return w.find("VACUOUS") != std::string::npos; }));
}

TEST_CASE("property: I implies U, union I is the AND and union U the OR of parts") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> pick(0, 7);
  std::uniform_real_distribution<double> u(-2, 2);
  const EscapeParams ep;
  for (int t = 0; t < 60; ++t) {
    const std::string a = kPool[pick(rng)];
    const std::string b = kPool[pick(rng)];
    const FamilySpec s = parse_family(a + " | " + b);
    const cd z(u(rng), u(rng));
    const EscapeVerdict va = escape_verdict(escape_profile(parse_family(a), z, ep), ep);
    const EscapeVerdict vb = escape_verdict(escape_profile(parse_family(b), z, ep), ep);
    const EscapeVerdict v = escape_verdict(escape_profile(s, z, ep), ep);
    INFO(a, " | ", b, " at ", z);
    CHECK((!v.in_I || v.in_U));
    CHECK(v.in_I == (va.in_I && vb.in_I));
    CHECK(v.in_U == (va.in_U || vb.in_U));
  }
}

TEST_CASE("property: I is anti-monotone and U monotone under nesting") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> pick(0, 7);
  const Window w = square(2, 20);
  const EscapeParams ep;
  for (int t = 0; t < 6; ++t) {
    const std::string a = kPool[pick(rng)];
    const std::string b = kPool[pick(rng)];
    const EscapeMaps small = classify_escape(parse_family(a), w, ep);
    const EscapeMaps big = classify_escape(parse_family(a + " | " + b), w, ep);
    for (std::size_t k = 0; k < w.size(); ++k) {
      CHECK((!big.in_I.data[k] || small.in_I.data[k]));
      CHECK((!small.in_U.data[k] || big.in_U.data[k]));
      CHECK((!big.in_I.data[k] || big.in_U.data[k]));
    }
  }
}

TEST_CASE("escape maps do not depend on the thread count") {
  EscapeParams one, four;
  one.threads = 1;
  four.threads = 4;
  const FamilySpec s = parse_family("family n: exp(n*z) | family n: z^n");
  const EscapeMaps a = classify_escape(s, square(2, 24), one);
  const EscapeMaps b = classify_escape(s, square(2, 24), four);
  CHECK(a.in_I == b.in_I);
  CHECK(a.in_U == b.in_U);
  CHECK(a.stat == b.stat);
}

TEST_CASE("invalid escape parameters are rejected") {
  EscapeParams p;
  p.escape_radius = 0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = EscapeParams{};
  p.tail_window = 0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}
