#include "fatoukit/topology.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fatoukit {

namespace {

struct UnionFind {
  std::vector<int> parent;
  int make() {
    parent.push_back(static_cast<int>(parent.size()));
    return static_cast<int>(parent.size()) - 1;
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  // The smaller root wins, so the root is the earliest provisional label.
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a < b) parent[b] = a;
    else if (b < a) parent[a] = b;
  }
};

}  // namespace

LabeledComponents label_components(const Mask& mask, int connectivity) {
  if (connectivity != 4 && connectivity != 8) throw std::invalid_argument("connectivity must be 4 or 8");
  const int W = mask.width;
  const int H = mask.height;
  LabeledComponents out;
  out.connectivity = connectivity;
  out.id = Grid<int>(W, H, 0);
  Grid<int> prov(W, H, -1);
  UnionFind uf;
  // Already-scanned neighbours: W, N, and NW/NE for 8-connectivity.
  const int di8[] = {-1, 0, -1, 1};
  const int dj8[] = {0, -1, -1, -1};
  const int nn = connectivity == 8 ? 4 : 2;
  for (int j = 0; j < H; ++j) {
    for (int i = 0; i < W; ++i) {
      if (!mask.at(i, j)) continue;
      int label = -1;
      for (int k = 0; k < nn; ++k) {
        const int a = i + di8[k];
        const int b = j + dj8[k];
        if (!mask.inside(a, b) || prov.at(a, b) < 0) continue;
        if (label < 0) label = prov.at(a, b);
        else uf.unite(label, prov.at(a, b));
      }
      prov.at(i, j) = label < 0 ? uf.make() : label;
    }
  }
  std::vector<int> final_id(uf.parent.size(), 0);
  for (int j = 0; j < H; ++j) {
    for (int i = 0; i < W; ++i) {
      if (prov.at(i, j) < 0) continue;
      const int root = uf.find(prov.at(i, j));
      if (final_id[root] == 0) {
        final_id[root] = ++out.count;
        out.sizes.push_back(0);
        out.boxes.push_back({i, j, i, j});
      }
      const int id = final_id[root];
      out.id.at(i, j) = id;
      ++out.sizes[id - 1];
      auto& bx = out.boxes[id - 1];
      bx.i0 = std::min(bx.i0, i);
      bx.i1 = std::max(bx.i1, i);
      bx.j0 = std::min(bx.j0, j);
      bx.j1 = std::max(bx.j1, j);
    }
  }
  return out;
}

Mask boundary_of(const LabeledComponents& comp, int id, const Mask& domain) {
  if (id < 1 || id > comp.count) throw std::invalid_argument("component id out of range");
  Mask out(comp.id.width, comp.id.height, 0);
  const auto& bx = comp.boxes[id - 1];
  for (int j = bx.j0; j <= bx.j1; ++j) {
    for (int i = bx.i0; i <= bx.i1; ++i) {
      if (comp.id.at(i, j) != id) continue;
      bool edge = false;
      for (int b = j - 1; b <= j + 1 && !edge; ++b) {
        for (int a = i - 1; a <= i + 1; ++a) {
          // the window frame is not a boundary in D
          if (!domain.inside(a, b) || !domain.at(a, b)) continue;
          if (comp.id.at(a, b) != id) {
            edge = true;
            break;
          }
        }
      }
      out.at(i, j) = edge;
    }
  }
  return out;
}

bool is_connected(const Mask& pixels, int connectivity, bool* empty) {
  const LabeledComponents c = label_components(pixels, connectivity);
  if (empty) *empty = c.count == 0;
  return c.count <= 1;
}

bool simply_connected(const Mask& domain) {
  if (label_components(domain, 4).count != 1) return false;
  // Holes are 8-components of the complement that do not reach the frame.
  Mask outside(domain.width + 2, domain.height + 2, 1);
  for (int j = 0; j < domain.height; ++j) {
    for (int i = 0; i < domain.width; ++i) outside.at(i + 1, j + 1) = !domain.at(i, j);
  }
  return label_components(outside, 8).count == 1;
}

int euler_number_bitquad(const Mask& mask) {
  // Gray's bit-quads over the zero-padded image; E8 = (Q1 - Q3 - 2 QD) / 4.
  long q1 = 0, q3 = 0, qd = 0;
  auto px = [&](int i, int j) { return mask.inside(i, j) && mask.at(i, j) ? 1 : 0; };
  for (int j = -1; j < mask.height; ++j) {
    for (int i = -1; i < mask.width; ++i) {
      const int a = px(i, j), b = px(i + 1, j), c = px(i, j + 1), d = px(i + 1, j + 1);
      const int s = a + b + c + d;
      if (s == 1) ++q1;
      else if (s == 3) ++q3;
      else if (s == 2 && a == d) ++qd;
    }
  }
  return static_cast<int>((q1 - q3 - 2 * qd) / 4);
}

Mask julia_mask(const ClassificationMap& cls) {
  Mask m(cls.label.width, cls.label.height, 0);
  for (std::size_t k = 0; k < m.data.size(); ++k) {
    m.data[k] = cls.domain.data[k] && cls.label.data[k] != Label::Fatou;
  }
  return m;
}

Mask fatou_mask(const ClassificationMap& cls) {
  Mask m(cls.label.width, cls.label.height, 0);
  for (std::size_t k = 0; k < m.data.size(); ++k) {
    m.data[k] = cls.domain.data[k] && cls.label.data[k] == Label::Fatou;
  }
  return m;
}

ConnectednessReport connectedness_report(const ClassificationMap& cls) {
  ConnectednessReport r;
  const Mask J = julia_mask(cls);
  r.julia_pixels = static_cast<std::size_t>(std::count(J.data.begin(), J.data.end(), 1));
  const LabeledComponents jc = label_components(J, 8);
  r.julia_components = jc.count;
  r.julia_empty = jc.count == 0;
  r.julia_connected = jc.count <= 1;

  const LabeledComponents fc = label_components(fatou_mask(cls), 4);
  for (int id = 1; id <= fc.count; ++id) {
    ComponentBoundary b;
    b.id = id;
    b.pixels = fc.sizes[id - 1];
    const Mask edge = boundary_of(fc, id, cls.domain);
    b.boundary_pixels = static_cast<std::size_t>(std::count(edge.data.begin(), edge.data.end(), 1));
    b.connected = is_connected(edge, 8);
    r.all_boundaries_connected &= b.connected;
    r.fatou.push_back(b);
  }
  r.consistent = r.julia_connected == r.all_boundaries_connected;
  r.simply_connected_domain = simply_connected(cls.domain);
  return r;
}

}  // namespace fatoukit
