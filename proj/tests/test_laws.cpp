#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fatoukit/enumerate.hpp"
#include "fatoukit/laws.hpp"

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

LawParams fast() {
  LawParams p;
  p.sum_product = false;
  return p;
}

}  // namespace

TEST_CASE("pairwise sums follow diagonal order") {
  const FiniteSet s = pairwise_family(parse_family("family n: n*z"), parse_family("family n: n"), 3, false);
  // (i, j) by i + j: (1,1) (1,2) (2,1) (1,3) (2,2) (3,1) ...
  REQUIRE(s.members.size() >= 4);
  const cd z(0.3, 0.1);
  const cd want[] = {z + 1.0, z + 2.0, 2.0 * z + 1.0, z + 3.0};
  for (int k = 0; k < 4; ++k) {
    CHECK(std::abs(Member::from_expr(s.members[k]).eval(z).value - want[k]) < 1e-14);
  }
  const FiniteSet p = pairwise_family(parse_family("family n: n*z"), parse_family("family n: n"), 3, true);
  CHECK(std::abs(Member::from_expr(p.members[2]).eval(z).value - 2.0 * z) < 1e-14);
}

TEST_CASE("laws 1 and 2 hold for the exp-power pair; law 3 is strict") {
  const LawReport r = check_algebra_laws(parse_family("family n: exp(n*z) | family n: z^n"),
                                         parse_family("family n: exp(n*z) | family n: (z-1.5)^n"), square(2, 64),
                                         fast());
  for (const char* l : {"1-I", "1-U", "2-I", "2-U"}) {
    const LawCheck* c = r.find(l);
    REQUIRE(c);
    CHECK_MESSAGE(c->holds(), l);
  }
  const LawCheck* l3 = r.find("3");
  REQUIRE(l3);
  CHECK_FALSE(l3->skipped);
  CHECK(l3->violations == 0);
  CHECK(l3->reverse_difference > 0);
}

TEST_CASE("law 4 is strict for {nz} and {n(z-1/2)}; law 3 is skipped") {
  Window w = square(1, 64);
  w.disk = Disk{0.0, 1.0};
  const LawReport r = check_algebra_laws(parse_family("family n: n*z"), parse_family("family n: n*(z-1/2)"), w, fast());
  const LawCheck* l4 = r.find("4");
  REQUIRE(l4);
  CHECK(l4->violations == 0);
  CHECK(l4->reverse_difference > 0);
  const LawCheck* l3 = r.find("3");
  REQUIRE(l3);
  CHECK(l3->skipped);
  CHECK_FALSE(l3->notice.empty());
}

TEST_CASE("identical families give equalities everywhere") {
  LawParams p;
  const LawReport r = check_algebra_laws(parse_family("family n: z^n"), parse_family("family n: z^n"), square(2, 32), p);
  for (const auto& c : r.checks) {
    if (c.skipped || c.law == "a" || c.law == "b" || c.law == "c" || c.law == "d") continue;
    CHECK_MESSAGE(c.violations == 0, c.law);
    CHECK_MESSAGE(c.reverse_difference == 0, c.law);
  }
  CHECK(r.find("a"));
  CHECK(r.find("d"));
}
