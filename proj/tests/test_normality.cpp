#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "fatoukit/enumerate.hpp"
#include "fatoukit/normality.hpp"

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

long count(const ClassificationMap& m, Label l) {
  long c = 0;
  for (std::size_t k = 0; k < m.label.data.size(); ++k) c += m.domain.data[k] && m.label.data[k] == l;
  return c;
}

}  // namespace

TEST_CASE("spherical derivative of n*z matches n / (1 + n^2 |z|^2)") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-2, 2);
  const auto ms = enumerate_members(parse_family("family n: n*z"), 40);
  for (int t = 0; t < 200; ++t) {
    const cd z(u(rng), u(rng));
    const auto& m = ms[static_cast<std::size_t>(t % 40)];
    const double n = static_cast<double>(*m.index());
    const double want = n / (1 + n * n * std::norm(z));
    const auto got = spherical_derivative(m, z);
    REQUIRE(got);
    CHECK(*got == doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("spherical derivative is empty at a pole and 0 after overflow") {
  const auto pole = enumerate_members(parse_family("family n: 1/(z-n)"), 1);
  CHECK_FALSE(spherical_derivative(pole[0], cd(1, 0)));
  const auto big = enumerate_members(parse_family("family n: exp(n*z)"), 1);
  const auto v = spherical_derivative(big[0], cd(800, 0));
  REQUIRE(v);
  CHECK(*v == 0.0);
}

TEST_CASE("Marty score grows at 0 for {nz} and stays bounded at 1") {
  const FamilySpec s = parse_family("family n: n*z");
  NormalityParams p;
  const MartyScore at0 = marty_score(s, 0.0, p);
  CHECK(at0.growing);
  CHECK(at0.score >= p.marty_threshold);
  const MartyScore at1 = marty_score(s, 1.0, p);
  CHECK_FALSE(at1.growing);
  // sup over n of n/(1+n^2|z|^2) near |z| = 1 is at n = 1
  CHECK(at1.score < 1.0);
}

TEST_CASE("{nz} on a small grid: Julia pixels sit at 0") {
  const Window w = square(2, 32);
  const ClassificationMap m = classify_normality(parse_family("family n: n*z"), w, NormalityParams{});
  const auto px = w.pixel_of(0.0);
  REQUIRE(px);
  CHECK(m.label.at(px->first, px->second) == Label::Julia);
  for (int j = 0; j < w.height; ++j) {
    for (int i = 0; i < w.width; ++i) {
      if (m.label.at(i, j) != Label::Fatou) CHECK(std::abs(w.pixel_center(i, j)) < 3 * w.dx());
    }
  }
  CHECK(count(m, Label::Undecided) == 0);
}

TEST_CASE("locally bounded families are Fatou everywhere") {
  for (const char* f : {"family n: z/(1+1/n)", "set: z; z^2; z^3", "family n to 40: sin(z)/n"}) {
    const ClassificationMap m = classify_normality(parse_family(f), square(2, 16), NormalityParams{});
    CHECK_MESSAGE(count(m, Label::Fatou) == 256, f);
  }
}

TEST_CASE("disk windows mask the outside") {
  Window w = square(1, 20);
  w.disk = Disk{0.0, 1.0};
  const ClassificationMap m = classify_normality(parse_family("family n: n*(z-2)"), w, NormalityParams{});
  long inside = 0;
  for (int j = 0; j < w.height; ++j) {
    for (int i = 0; i < w.width; ++i) {
      const bool want = std::abs(w.pixel_center(i, j)) < 1.0;
      CHECK((m.domain.at(i, j) != 0) == want);
      inside += want;
    }
  }
  CHECK(count(m, Label::Fatou) == inside);
}

TEST_CASE("classification does not depend on the thread count") {
  const FamilySpec s = parse_family("family n: n*z | family n: n*(z-1)");
  NormalityParams one;
  one.threads = 1;
  NormalityParams three;
  three.threads = 3;
  const Window w = square(2, 24);
  const ClassificationMap a = classify_normality(s, w, one);
  const ClassificationMap b = classify_normality(s, w, three);
  CHECK(a.label == b.label);
  CHECK(a.marty_score == b.marty_score);
}

TEST_CASE("invalid parameters are rejected") {
  NormalityParams p;
  p.n_max = 0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = NormalityParams{};
  p.marty_threshold = -1;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}
