#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <queue>
#include <random>

#include "fatoukit/topology.hpp"

using namespace fatoukit;

namespace {

// Flood-fill component count; the reference for the union-find labeling.
int flood_components(const Mask& m, bool want, int conn, bool count_border_touching = true) {
  Grid<int> seen(m.width, m.height, 0);
  int count = 0;
  for (int j = 0; j < m.height; ++j) {
    for (int i = 0; i < m.width; ++i) {
      if ((m.at(i, j) != 0) != want || seen.at(i, j)) continue;
      bool border = false;
      std::queue<std::pair<int, int>> q;
      q.push({i, j});
      seen.at(i, j) = 1;
      while (!q.empty()) {
        auto [x, y] = q.front();
        q.pop();
        border |= x == 0 || y == 0 || x == m.width - 1 || y == m.height - 1;
        for (int dy = -1; dy <= 1; ++dy) {
          for (int dx = -1; dx <= 1; ++dx) {
            if ((dx == 0 && dy == 0) || (conn == 4 && dx != 0 && dy != 0)) continue;
            const int a = x + dx, b = y + dy;
            if (!m.inside(a, b) || (m.at(a, b) != 0) != want || seen.at(a, b)) continue;
            seen.at(a, b) = 1;
            q.push({a, b});
          }
        }
      }
      count += count_border_touching || !border;
    }
  }
  return count;
}

Mask random_mask(std::mt19937_64& rng, int w, int h, double p) {
  std::bernoulli_distribution b(p);
  Mask m(w, h, 0);
  for (auto& v : m.data) v = b(rng);
  return m;
}

ClassificationMap map_from(const Grid<Label>& labels) {
  ClassificationMap m;
  m.window.width = labels.width;
  m.window.height = labels.height;
  m.domain = Mask(labels.width, labels.height, 1);
  m.label = labels;
  return m;
}

Mask annulus(int n, double r0, double r1, bool upper_only) {
  Mask m(n, n, 0);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const double x = (i + 0.5) / n * 4 - 2, y = 2 - (j + 0.5) / n * 4;
      const double r = std::hypot(x, y);
      m.at(i, j) = r > r0 && r < r1 && (!upper_only || y > 0);
    }
  }
  return m;
}

}  // namespace

TEST_CASE("checkerboard: isolated pixels under 4, one component under 8") {
  Mask m(8, 8, 0);
  for (int j = 0; j < 8; ++j) {
    for (int i = 0; i < 8; ++i) m.at(i, j) = (i + j) % 2 == 0;
  }
  CHECK(label_components(m, 4).count == 32);
  CHECK(label_components(m, 8).count == 1);
  CHECK(is_connected(m, 8));
  CHECK_FALSE(is_connected(m, 4));
}

TEST_CASE("property: labeling agrees with flood fill") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 40; ++t) {
    const Mask m = random_mask(rng, 5 + t % 17, 3 + t % 13, 0.45);
    for (int conn : {4, 8}) {
      const LabeledComponents c = label_components(m, conn);
      CHECK(c.count == flood_components(m, true, conn));
      std::size_t total = 0;
      for (auto s : c.sizes) total += s;
      CHECK(total == static_cast<std::size_t>(std::count(m.data.begin(), m.data.end(), 1)));
    }
  }
}

TEST_CASE("property: Euler number is components minus holes") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 60; ++t) {
    const Mask m = random_mask(rng, 4 + t % 20, 4 + t % 11, 0.3 + 0.01 * (t % 40));
    const int holes = flood_components(m, false, 4, false);
    CHECK(euler_number_bitquad(m) == flood_components(m, true, 8) - holes);
  }
}

TEST_CASE("boundaries lie inside their component") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 20; ++t) {
    const Mask m = random_mask(rng, 16, 16, 0.6);
    const Mask domain(16, 16, 1);
    const LabeledComponents c = label_components(m, 4);
    for (int id = 1; id <= c.count; ++id) {
      const Mask b = boundary_of(c, id, domain);
      for (std::size_t k = 0; k < b.data.size(); ++k) {
        if (b.data[k]) CHECK(c.id.data[k] == id);
      }
    }
  }
}

TEST_CASE("upper half-annulus: two boundary arcs") {
  const Mask domain = annulus(96, 1, 2, false);
  const Mask upper = annulus(96, 1, 2, true);
  const LabeledComponents c = label_components(upper, 8);
  REQUIRE(c.count == 1);
  const Mask b = boundary_of(c, 1, domain);
  CHECK(label_components(b, 8).count == 2);
  CHECK_FALSE(is_connected(b, 8));
}

TEST_CASE("simple connectivity") {
  CHECK(simply_connected(Mask(10, 10, 1)));
  CHECK_FALSE(simply_connected(annulus(64, 0.5, 1.8, false)));
  Mask two(10, 10, 0);
  two.at(1, 1) = two.at(8, 8) = 1;
  CHECK_FALSE(simply_connected(two));
}

TEST_CASE("empty set is connected and flagged") {
  bool empty = false;
  CHECK(is_connected(Mask(5, 5, 0), 8, &empty));
  CHECK(empty);
}

TEST_CASE("connectedness report on synthetic maps") {
  SUBCASE("one Julia pixel") {
    Grid<Label> g(9, 9, Label::Fatou);
    g.at(4, 4) = Label::Julia;
    const ConnectednessReport r = connectedness_report(map_from(g));
    CHECK(r.julia_connected);
    REQUIRE(r.fatou.size() == 1);
    CHECK(r.fatou[0].connected);
    CHECK(r.consistent);
  }
  SUBCASE("two Julia pixels") {
    Grid<Label> g(12, 9, Label::Fatou);
    g.at(3, 4) = Label::Julia;
    g.at(8, 4) = Label::Undecided;
    const ConnectednessReport r = connectedness_report(map_from(g));
    CHECK(r.julia_pixels == 2);
    CHECK_FALSE(r.julia_connected);
    REQUIRE(r.fatou.size() == 1);
    CHECK_FALSE(r.fatou[0].connected);
    CHECK(r.consistent);
  }
  SUBCASE("a ring splits the plane in two") {
    Grid<Label> g(40, 40, Label::Fatou);
    for (int j = 0; j < 40; ++j) {
      for (int i = 0; i < 40; ++i) {
        const double r = std::hypot(i - 19.5, j - 19.5);
        if (r > 10 && r < 12) g.at(i, j) = Label::Julia;
      }
    }
    const ConnectednessReport r = connectedness_report(map_from(g));
    CHECK(r.julia_connected);
    CHECK(r.fatou.size() == 2);
    CHECK(r.all_boundaries_connected);
    CHECK(r.consistent);
  }
}
