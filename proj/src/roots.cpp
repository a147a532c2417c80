#include "fatoukit/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "fatoukit/numeric.hpp"

namespace fatoukit {

namespace {

struct Eval {
  cd p, dp;
  double scale;  // sum |a_k| |z|^k, the rounding scale of p(z)
};

Eval horner2(const std::vector<cd>& a, cd z) {
  cd p = a.back();
  cd dp = 0.0;
  double s = std::abs(a.back());
  const double r = std::abs(z);
  for (std::size_t k = a.size() - 1; k-- > 0;) {
    dp = dp * z + p;
    p = p * z + a[k];
    s = s * r + std::abs(a[k]);
  }
  return {p, dp, s};
}

// Newton with multiplicity m; keeps the best iterate seen.
cd polish(const std::vector<cd>& a, cd z, int m) {
  Eval e = horner2(a, z);
  for (int it = 0; it < 8 && e.p != 0.0; ++it) {
    if (e.dp == 0.0) break;
    const cd next = z - static_cast<double>(m) * e.p / e.dp;
    const Eval en = horner2(a, next);
    if (!(std::abs(en.p) < std::abs(e.p))) break;
    z = next;
    e = en;
  }
  return z;
}

// Coefficients of the k-th derivative.
std::vector<cd> derive(std::vector<cd> a, int k) {
  for (int t = 0; t < k && a.size() > 1; ++t) {
    for (std::size_t i = 1; i < a.size(); ++i) a[i - 1] = a[i] * static_cast<double>(i);
    a.pop_back();
  }
  return a;
}

}  // namespace

AberthResult aberth_roots(const std::vector<cd>& coeffs, int max_sweeps) {
  AberthResult out;
  std::vector<cd> a = coeffs;
  while (!a.empty() && a.back() == 0.0) a.pop_back();
  // Exact zero roots are factored out so they come back exact.
  std::size_t zeros = 0;
  while (zeros + 1 < a.size() && a[zeros] == 0.0) ++zeros;
  out.roots.assign(zeros, cd(0.0));
  a.erase(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(zeros));
  const int n = static_cast<int>(a.size()) - 1;
  if (n < 1) {
    out.converged = true;
    return out;
  }
  const cd lead = a.back();
  for (auto& c : a) c /= lead;

  double radius = 0.0;
  for (int k = 0; k < n; ++k) radius = std::max(radius, std::abs(a[k]));
  radius += 1.0;
  // Geometric mean of the root moduli is a tighter centre of the circle.
  const double gm = std::pow(std::abs(a[0]), 1.0 / n);
  if (gm > 0.0 && gm < radius) radius = gm;

  std::vector<cd> z(n);
  for (int k = 0; k < n; ++k) z[k] = std::polar(radius, 2.0 * kPi * k / n + 0.4);

  for (out.sweeps = 0; out.sweeps < max_sweeps; ++out.sweeps) {
    bool done = true;
    for (int i = 0; i < n; ++i) {
      const Eval e = horner2(a, z[i]);
      // residual at rounding level: no step can improve this root
      if (std::abs(e.p) <= 8 * std::numeric_limits<double>::epsilon() * e.scale) continue;
      const cd ratio = e.p / e.dp;
      cd s = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j != i) s += 1.0 / (z[i] - z[j]);
      }
      const cd step = ratio / (1.0 - ratio * s);
      if (!is_finite(step)) continue;
      z[i] -= step;
      if (std::abs(step) > 1e-14 * (1.0 + std::abs(z[i]))) done = false;
    }
    if (done) {
      out.converged = true;
      break;
    }
  }

  // Multiple roots converge only to about eps^(1/m); merge such clusters
  // when the mean has a residual at rounding level.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return z[x].real() < z[y].real() || (z[x].real() == z[y].real() && z[x].imag() < z[y].imag());
  });
  std::vector<bool> used(n, false);
  for (int oi = 0; oi < n; ++oi) {
    const int i = order[oi];
    if (used[i]) continue;
    used[i] = true;
    std::vector<int> cluster = {i};
    const double reach = 1e-2 * (1.0 + std::abs(z[i]));
    for (int oj = oi + 1; oj < n; ++oj) {
      const int j = order[oj];
      if (used[j]) continue;
      if (z[j].real() - z[i].real() > reach) break;
      if (std::abs(z[j] - z[i]) <= reach) cluster.push_back(j);
    }
    if (cluster.size() > 1) {
      cd mean = 0.0;
      for (int c : cluster) mean += z[c];
      mean /= static_cast<double>(cluster.size());
      const Eval e = horner2(a, mean);
      if (std::abs(e.p) <= 1e-10 * e.scale) {
        // an m-fold root is a simple root of the (m-1)-th derivative
        const int m = static_cast<int>(cluster.size());
        const cd r = polish(derive(a, m - 1), mean, 1);
        for (int c : cluster) used[c] = true;
        out.roots.insert(out.roots.end(), m, r);
        continue;
      }
    }
    out.roots.push_back(polish(a, z[i], 1));
  }
  return out;
}

}  // namespace fatoukit
