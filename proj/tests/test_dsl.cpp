#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fatoukit/enumerate.hpp"
#include "fatoukit/family.hpp"

using namespace fatoukit;

namespace {

Expr z() { return Expr::var(); }
Expr n() { return Expr::index(); }
Expr c(double re, double im = 0.0) { return Expr::constant({re, im}); }

// Random tree through the folding constructors, so every generated tree is
// one the parser can also produce.
Expr random_expr(std::mt19937_64& rng, int depth, bool with_n) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 12);
  const double consts[] = {0.5, 2.0, -3.0, 1.25, 0.1, 7.0};
  switch (pick(rng)) {
    case 0: return z();
    case 1: return with_n ? n() : z();
    case 2: {
      std::uniform_int_distribution<int> k(0, 5);
      const double re = consts[k(rng)];
      if (k(rng) == 0) return c(0.0, re);
      if (k(rng) == 1) return c(re, consts[k(rng)]);
      return c(re);
    }
    case 3: return Expr::neg(random_expr(rng, depth - 1, with_n));
    case 4: return Expr::add(random_expr(rng, depth - 1, with_n), random_expr(rng, depth - 1, with_n));
    case 5: return Expr::sub(random_expr(rng, depth - 1, with_n), random_expr(rng, depth - 1, with_n));
    case 6: return Expr::mul(random_expr(rng, depth - 1, with_n), random_expr(rng, depth - 1, with_n));
    case 7: return Expr::div(random_expr(rng, depth - 1, with_n), random_expr(rng, depth - 1, with_n));
    case 8: {
      std::uniform_int_distribution<int> k(-2, 4);
      return Expr::pow(random_expr(rng, depth - 1, with_n), c(k(rng)));
    }
    case 9: return Expr::pow(random_expr(rng, depth - 1, with_n), random_expr(rng, depth - 1, with_n));
    case 10: return Expr::exp(random_expr(rng, depth - 1, with_n));
    case 11: return Expr::sin(random_expr(rng, depth - 1, with_n));
    default: return Expr::cos(random_expr(rng, depth - 1, with_n));
  }
}

FamilySpec random_part(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<int> small(1, 5);
  switch (kind(rng)) {
    case 0: {
      Parametric p{random_expr(rng, 4, true), small(rng), std::nullopt};
      if (small(rng) > 3) p.n_to = p.n_from + small(rng);
      return p;
    }
    case 1: {
      FiniteSet s;
      for (int i = small(rng); i > 0; --i) s.members.push_back(random_expr(rng, 3, false));
      return s;
    }
    default: {
      Semigroup g;
      g.max_word_len = small(rng);
      for (int i = small(rng); i > 0; --i) g.generators.push_back(random_expr(rng, 3, false));
      return g;
    }
  }
}

}  // namespace

TEST_CASE("parse nz") {
  const FamilySpec s = parse_family("family n: n*z");
  const auto* p = std::get_if<Parametric>(&s.node);
  REQUIRE(p);
  CHECK(p->expr == Expr::mul(n(), z()));
  CHECK(p->n_from == 1);
  CHECK_FALSE(p->n_to.has_value());
}

TEST_CASE("parse union of exp and power families") {
  const FamilySpec s = parse_family("family n: exp(n*z) | family n: z^n");
  const auto* u = std::get_if<Union>(&s.node);
  REQUIRE(u);
  REQUIRE(u->parts.size() == 2);
  CHECK(u->parts[0] == FamilySpec(Parametric{Expr::exp(Expr::mul(n(), z())), 1, {}}));
  CHECK(u->parts[1] == FamilySpec(Parametric{Expr::pow(z(), n()), 1, {}}));
}

TEST_CASE("parse semigroup") {
  const FamilySpec s = parse_family("semigroup L=3: 2*z; z^2");
  const auto* g = std::get_if<Semigroup>(&s.node);
  REQUIRE(g);
  CHECK(g->max_word_len == 3);
  REQUIRE(g->generators.size() == 2);
  CHECK(g->generators[0] == Expr::mul(c(2), z()));
  CHECK(g->generators[1] == Expr::pow(z(), c(2)));
}

TEST_CASE("parse ranges and literals") {
  const FamilySpec s = parse_family("family n from 2 to 9: (1+2i)*z - 1.5e-1");
  const auto* p = std::get_if<Parametric>(&s.node);
  REQUIRE(p);
  CHECK(p->n_from == 2);
  CHECK(p->n_to == 9);
  CHECK(p->expr == Expr::sub(Expr::mul(c(1, 2), z()), c(0.15)));
  CHECK(parse_expr("-z^2") == Expr::neg(Expr::pow(z(), c(2))));
  CHECK(parse_expr("2^3^2") == c(512));
  CHECK(parse_expr("i*i") == c(-1));
}

TEST_CASE("parse errors carry positions") {
  auto position_of = [](const char* text) -> long {
    try {
      parse_family(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  CHECK(position_of("family n: n*") == 12);
  CHECK(position_of("family n: foo(z)") == 10);
  CHECK(position_of("set: z; n*z") == 8);
  CHECK(position_of("semigroup L=2: z+n") == 17);
  CHECK(position_of("family n: z )") == 12);
  CHECK(position_of("family n from 0: z") == 14);
  CHECK(position_of("famly n: z") == 0);
  CHECK(position_of("family n: z $") == 12);
  CHECK(position_of("family n from 5 to 3: z") == 16);
  CHECK(position_of("family n: z | ") == 14);
}

TEST_CASE("printer output is canonical") {
  CHECK(print_family(parse_family("family n from 2: n * (z - 1/2)")) == "family n from 2: n*(z-0.5)");
  CHECK(print_family(parse_family("set: z;  -z; (1-2i)*z")) == "set: z; -z; (1-2i)*z");
  CHECK(print_family(parse_family("semigroup L=5: 2*z; z+1")) == "semigroup L=5: 2*z; z+1");
}

TEST_CASE("round trip on random specs") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 2000; ++trial) {
    std::uniform_int_distribution<int> count(1, 3);
    std::vector<FamilySpec> parts;
    for (int i = count(rng); i > 0; --i) parts.push_back(random_part(rng));
    const FamilySpec spec = make_union(parts);
    const std::string text = print_family(spec);
    INFO(text);
    const FamilySpec back = parse_family(text);
    CHECK(back == spec);
    CHECK(print_family(back) == text);
  }
}

TEST_CASE("enumeration order") {
  auto names = [](const std::vector<Member>& ms) {
    std::vector<std::string> out;
    for (const auto& m : ms) out.push_back(to_string(m.expr()));
    return out;
  };
  CHECK(names(enumerate_members(parse_family("family n: n*z"), 3)) ==
        std::vector<std::string>{"z", "2*z", "3*z"});
  CHECK(names(enumerate_members(parse_family("family n: exp(n*z) | family n: z^n"), 4)) ==
        std::vector<std::string>{"exp(z)", "z", "exp(2*z)", "z^2"});
  CHECK(enumerate_members(parse_family("family n from 3 to 5: n*z"), 100).size() == 3);
}

TEST_CASE("semigroup words dedupe by function") {
  // Words of length <= 2 over {z^2, 2z}: z^2, 2z, z^4, 2z^2, 4z^2, 4z.
  // All six are distinct polynomials, so nothing merges.
  const auto ms = enumerate_members(parse_family("semigroup L=2: z^2; 2*z"), 100);
  CHECK(ms.size() == 6);
  // Over {2z, z/2}: 2z, z/2, then 4z, z (twice), z/4.
  const auto half = enumerate_members(parse_family("semigroup L=2: 2*z; z/2"), 100);
  CHECK(half.size() == 5);
  // Over {2z, 4z}: 2z, 4z, 4z (dup), 8z, 8z (dup), 16z.
  const auto dup = enumerate_members(parse_family("semigroup L=2: 2*z; 4*z"), 100);
  CHECK(dup.size() == 4);
  for (std::size_t i = 0; i < dup.size(); ++i) {
    for (std::size_t j = i + 1; j < dup.size(); ++j) CHECK(fingerprint(dup[i]) != fingerprint(dup[j]));
  }
}

TEST_CASE("enumeration never repeats a fingerprint") {
  const char* specs[] = {
      "family n: n*z | family n: n*(z-1)",
      "family n: exp(n*z) | family n: z^n | family n: exp(n*z)",
      "set: z; z; 2*z; z*2",
      "semigroup L=4: z^2; 2*z; z+1",
      "family n: z^2 + 0*n",
  };
  for (const char* s : specs) {
    const auto ms = enumerate_members(parse_family(s), 64);
    std::vector<std::uint64_t> fps;
    for (const auto& m : ms) fps.push_back(fingerprint(m));
    std::sort(fps.begin(), fps.end());
    CHECK(std::adjacent_find(fps.begin(), fps.end()) == fps.end());
  }
  CHECK(enumerate_members(parse_family("set: z; z; 2*z; z*2"), 64).size() == 2);
  // a family whose members are all the same function is finite
  CHECK(enumerate_members(parse_family("family n: z^2 + 0*n"), 8).size() == 1);
}

TEST_CASE("intersections") {
  const auto empty = intersect_families(parse_family("family n: n*z"), parse_family("family n: n*(z-1/2)"), 64);
  CHECK(empty.members.empty());
  CHECK_FALSE(empty.infinite_truncation);

  const auto a = parse_family("family n: exp(n*z) | family n: z^n");
  const auto b = parse_family("family n: exp(n*z) | family n: (z-1.5)^n");
  const auto ab = intersect_families(a, b, 64);
  REQUIRE(ab.members.size() == 32);
  for (std::size_t k = 0; k < ab.members.size(); ++k) {
    CHECK(to_string(ab.members[k]) == (k == 0 ? std::string("exp(z)") : "exp(" + std::to_string(k + 1) + "*z)"));
  }
  CHECK(ab.infinite_truncation);

  const auto self = intersect_families(a, a, 10);
  const auto first = enumerate_members(a, 10);
  REQUIRE(self.members.size() == first.size());
  for (std::size_t k = 0; k < first.size(); ++k) CHECK(self.members[k] == first[k].expr());
}
