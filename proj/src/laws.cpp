#include "fatoukit/laws.hpp"

#include <algorithm>

#include "fatoukit/enumerate.hpp"

namespace fatoukit {

const LawCheck* LawReport::find(const std::string& law) const {
  for (const auto& c : checks) {
    if (c.law == law) return &c;
  }
  return nullptr;
}

FiniteSet pairwise_family(const FamilySpec& a, const FamilySpec& b, std::size_t m, bool product) {
  const auto ma = enumerate_members(a, m);
  const auto mb = enumerate_members(b, m);
  FiniteSet out;
  out.infinite_truncation = has_infinite_part(a) && has_infinite_part(b);
  if (ma.empty() || mb.empty()) return out;
  const std::size_t last = ma.size() + mb.size() - 2;
  for (std::size_t s = 0; s <= last; ++s) {
    for (std::size_t i = 0; i < ma.size(); ++i) {
      if (s < i || s - i >= mb.size()) continue;
      const Expr& x = ma[i].expr();
      const Expr& y = mb[s - i].expr();
      out.members.push_back(product ? Expr::mul(x, y) : Expr::add(x, y));
    }
  }
  return out;
}

namespace {

struct Maps {
  Mask I, U, F;
};

Mask fatou_pixels(const ClassificationMap& m) {
  Mask f(m.label.width, m.label.height, 0);
  for (std::size_t k = 0; k < f.data.size(); ++k) f.data[k] = m.label.data[k] == Label::Fatou;
  return f;
}

void append_warnings(LawReport& r, const std::string& who, const std::vector<std::string>& ws) {
  for (const auto& s : ws) r.warnings.push_back(who + ": " + s);
}

Maps escape_maps(const FamilySpec& s, const Window& w, const LawParams& p, LawReport& r, const std::string& who) {
  EscapeMaps e = classify_escape(s, w, p.escape);
  append_warnings(r, who, e.warnings);
  return {std::move(e.in_I), std::move(e.in_U), {}};
}

Mask fatou(const FamilySpec& s, const Window& w, const LawParams& p, LawReport& r, const std::string& who) {
  ClassificationMap m = classify_normality(s, w, p.normality);
  append_warnings(r, who, m.warnings);
  return fatou_pixels(m);
}

// Counts over in-domain pixels outside the band.
class Counter {
 public:
  Counter(const Mask& domain, const Mask& band) : domain_(domain), band_(band) {}

  template <class Pred>
  long count(Pred pred) const {
    long n = 0;
    for (std::size_t k = 0; k < domain_.data.size(); ++k) {
      if (domain_.data[k] && !band_.data[k] && pred(k)) ++n;
    }
    return n;
  }

 private:
  const Mask& domain_;
  const Mask& band_;
};

Mask band_of(const std::vector<const Mask*>& maps, int r) {
  Mask edges(maps.front()->width, maps.front()->height, 0);
  for (const Mask* m : maps) {
    const Mask e = mask_edges(*m);
    for (std::size_t k = 0; k < e.data.size(); ++k) edges.data[k] |= e.data[k];
  }
  return dilate(edges, r);
}

LawCheck equality(const Counter& c, std::string law, std::string rel, const Mask& lhs,
                  const std::vector<std::uint8_t>& rhs) {
  LawCheck l;
  l.law = std::move(law);
  l.relation = std::move(rel);
  l.violations = c.count([&](std::size_t k) { return (lhs.data[k] != 0) != (rhs[k] != 0); });
  return l;
}

// lhs must be contained in rhs.
LawCheck inclusion(const Counter& c, std::string law, std::string rel, const std::vector<std::uint8_t>& lhs,
                   const std::vector<std::uint8_t>& rhs) {
  LawCheck l;
  l.law = std::move(law);
  l.relation = std::move(rel);
  l.violations = c.count([&](std::size_t k) { return lhs[k] && !rhs[k]; });
  l.reverse_difference = c.count([&](std::size_t k) { return rhs[k] && !lhs[k]; });
  return l;
}

std::vector<std::uint8_t> combine(const Mask& x, const Mask& y, bool both) {
  std::vector<std::uint8_t> out(x.data.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = both ? (x.data[k] && y.data[k]) : (x.data[k] || y.data[k]);
  return out;
}

}  // namespace

LawReport check_algebra_laws(const FamilySpec& a, const FamilySpec& b, const Window& w, const LawParams& p) {
  w.validate();
  p.escape.validate();
  LawReport r;
  const Mask domain = domain_mask(w);

  const Maps ea = escape_maps(a, w, p, r, "a");
  const Maps eb = escape_maps(b, w, p, r, "b");
  const FamilySpec ab_union = make_union({a, b});
  const Maps eu = escape_maps(ab_union, w, p, r, "a|b");
  const FiniteSet meet = intersect_families(a, b, static_cast<std::size_t>(p.escape.n_max));
  const Maps ei = escape_maps(FamilySpec(meet), w, p, r, "a&b");

  const Mask band = band_of({&ea.I, &ea.U, &eb.I, &eb.U}, p.band_px);
  const Counter c(domain, band);

  const auto I_and = combine(ea.I, eb.I, true);
  const auto I_or = combine(ea.I, eb.I, false);
  const auto U_and = combine(ea.U, eb.U, true);
  const auto U_or = combine(ea.U, eb.U, false);

  r.checks.push_back(inclusion(c, "1-I", "I(a|b) <= I(a) and I(a|b) <= I(b)", eu.I.data, I_and));
  r.checks.push_back(inclusion(c, "1-U", "U(a) <= U(a|b) and U(b) <= U(a|b)", U_or, eu.U.data));
  r.checks.push_back(equality(c, "2-I", "I(a|b) = I(a) & I(b)", eu.I, I_and));
  r.checks.push_back(equality(c, "2-U", "U(a|b) = U(a) | U(b)", eu.U, U_or));

  LawCheck l3 = inclusion(c, "3", "I(a) | I(b) <= I(a&b)", I_or, ei.I.data);
  if (!meet.infinite_truncation) {
    l3.violations = l3.reverse_difference = 0;
    l3.skipped = true;
    l3.notice = "intersection has " + std::to_string(meet.members.size()) +
                " members and is not infinite; the law does not apply";
  }
  r.checks.push_back(l3);
  r.checks.push_back(inclusion(c, "4", "U(a&b) <= U(a) & U(b)", ei.U.data, U_and));

  const std::vector<std::string> sp_laws = {"a", "b", "c", "d"};
  const std::size_t m = static_cast<std::size_t>(std::max(p.pair_members, 1));
  std::string skip;
  if (!p.sum_product) {
    skip = "sum and product laws disabled";
  } else if (m * m > p.pair_budget) {
    skip = "pairwise family of " + std::to_string(m * m) + " members exceeds the budget of " +
           std::to_string(p.pair_budget);
  }
  if (!skip.empty()) {
    for (const auto& name : sp_laws) {
      LawCheck l;
      l.law = name;
      l.skipped = true;
      l.notice = skip;
      r.checks.push_back(l);
    }
    return r;
  }

  const FamilySpec sum(pairwise_family(a, b, m, false));
  const FamilySpec prod(pairwise_family(a, b, m, true));
  const Mask Fa = fatou(a, w, p, r, "a");
  const Mask Fb = fatou(b, w, p, r, "b");
  const Mask Fs = fatou(sum, w, p, r, "a+b");
  const Mask Fp = fatou(prod, w, p, r, "a*b");
  const Maps es = escape_maps(sum, w, p, r, "a+b");
  const Maps ep = escape_maps(prod, w, p, r, "a*b");

  const Mask fband = band_of({&ea.I, &eb.I, &Fa, &Fb}, p.band_px);
  const Counter cf(domain, fband);
  r.checks.push_back(equality(cf, "a", "F(a+b) = F(a) & F(b)", Fs, combine(Fa, Fb, true)));
  r.checks.push_back(inclusion(cf, "b", "I(a+b) <= I(a) & I(b)", es.I.data, I_and));
  r.checks.push_back(equality(cf, "c", "F(a*b) = F(a) | F(b)", Fp, combine(Fa, Fb, false)));
  r.checks.push_back(inclusion(cf, "d", "I(a*b) <= I(a) | I(b)", ep.I.data, I_or));
  return r;
}

}  // namespace fatoukit
