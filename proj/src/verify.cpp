#include "fatoukit/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fatoukit/enumerate.hpp"
#include "fatoukit/io.hpp"
#include "fatoukit/pipeline.hpp"

#ifndef FATOUKIT_SCHEMA_PATH
#define FATOUKIT_SCHEMA_PATH "schema/report.schema.json"
#endif

namespace fatoukit {

std::string default_schema_path() { return FATOUKIT_SCHEMA_PATH; }

namespace {

const char* kExp = "family n: exp(n*z)";
const char* kExpPower = "family n: exp(n*z) | family n: z^n";
const char* kExpShifted = "family n: exp(n*z) | family n: (z-1.5)^n";
const char* kNz = "family n: n*z";
const char* kNzUnion = "family n: n*z | family n: n*(z-1)";
const char* kNzHalf = "family n: n*(z-1/2)";
const char* kRing = "family n: z^n*(z-1/2)+z";
const char* kZexp = "family n: z*exp(z)*(1-1/(2*n))";
const char* kTwoAttracting =
    "family n: 0.1+(z-0.1)*((0.1-(-0.1))*(z-(-0.1))+(z-0.1))/((-0.1)-0.1) + ((z-0.1)*(z+0.1))^n";

template <class... Ts>
std::string cat(const Ts&... parts) {
  std::ostringstream os;
  os.precision(6);
  (os << ... << parts);
  return os.str();
}

CaseResult result(bool pass, std::string detail) { return {pass, std::move(detail)}; }

Window rect(double re0, double re1, double im0, double im1, int n) {
  Window w;
  w.re_min = re0;
  w.re_max = re1;
  w.im_min = im0;
  w.im_max = im1;
  w.width = n;
  w.height = n;
  return w;
}

Window unit_disk(int n) {
  Window w = rect(-1, 1, -1, 1, n);
  w.disk = Disk{0.0, 1.0};
  return w;
}

NormalityParams normality(const VerifyConfig& c, int n_max = 256) {
  NormalityParams p;
  p.n_max = c.n_max.value_or(n_max);
  if (c.marty_threshold) p.marty_threshold = *c.marty_threshold;
  p.threads = c.threads;
  return p;
}

EscapeParams escape(const VerifyConfig& c, int n_max = 256) {
  EscapeParams p;
  p.n_max = c.n_max.value_or(n_max);
  if (c.escape_radius) p.escape_radius = *c.escape_radius;
  p.threads = c.threads;
  return p;
}

LawParams laws(const VerifyConfig& c) {
  LawParams p;
  p.escape = escape(c);
  p.normality = normality(c);
  p.sum_product = false;
  return p;
}

template <class Pred>
Mask truth_mask(const Window& w, Pred pred) {
  Mask m(w.width, w.height, 0);
  for (int j = 0; j < w.height; ++j) {
    for (int i = 0; i < w.width; ++i) m.at(i, j) = pred(w.pixel_center(i, j)) ? 1 : 0;
  }
  return m;
}

// Fraction of in-domain pixels outside a band around the truth edges where
// got agrees with truth.
double agreement(const Mask& got, const Mask& truth, const Mask& domain, int band) {
  const Mask excluded = dilate(mask_edges(truth), band);
  long agree = 0, total = 0;
  for (std::size_t k = 0; k < got.data.size(); ++k) {
    if (!domain.data[k] || excluded.data[k]) continue;
    ++total;
    agree += (got.data[k] != 0) == (truth.data[k] != 0);
  }
  return total == 0 ? 0.0 : static_cast<double>(agree) / total;
}

long count_label(const ClassificationMap& m, Label l) {
  long c = 0;
  for (std::size_t k = 0; k < m.label.data.size(); ++k) c += m.domain.data[k] && m.label.data[k] == l;
  return c;
}

Mask label_mask(const ClassificationMap& m, Label l) {
  Mask out(m.label.width, m.label.height, 0);
  for (std::size_t k = 0; k < out.data.size(); ++k) out.data[k] = m.domain.data[k] && m.label.data[k] == l;
  return out;
}

int component_at(const LabeledComponents& c, const Window& w, cd z) {
  const auto px = w.pixel_of(z);
  return px ? c.id.at(px->first, px->second) : 0;
}

long count_set(const Mask& m) { return std::count_if(m.data.begin(), m.data.end(), [](auto v) { return v != 0; }); }

bool near(cd a, cd b, double tol) { return std::abs(a - b) <= tol; }

// J = isolated clusters containing the given points, everything else Fatou.
CaseResult julia_clusters(const VerifyConfig& c, const char* family, int grid, std::vector<cd> points) {
  const Window w = rect(-2, 2, -2, 2, grid);
  const ClassificationMap m = classify_normality(parse_family(family), w, normality(c));
  const LabeledComponents comp = label_components(label_mask(m, Label::Julia), 8);
  std::vector<int> hit;
  for (const cd& z : points) hit.push_back(component_at(comp, w, z));
  std::vector<int> uniq = hit;
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  const long undecided = count_label(m, Label::Undecided);
  const long julia = count_label(m, Label::Julia);
  const long fatou = count_label(m, Label::Fatou);
  const double rest = static_cast<double>(fatou) / static_cast<double>(w.size() - julia);
  const bool pass = comp.count == static_cast<int>(points.size()) && uniq.size() == points.size() && uniq.front() > 0 &&
                    rest >= 0.995;
  return result(pass, cat("julia components ", comp.count, ", julia ", julia, " px, undecided ", undecided,
                          ", fatou share of the rest ", rest));
}

CaseResult connectedness_case(const VerifyConfig& c, const char* family, const Window& w, bool want_connected,
                              int want_fatou) {
  const RunInputs in{family, parse_family(family), w, normality(c), escape(c), {}};
  ClassificationMap m = classify_normality(in.spec, w, in.normality);
  const ConnectednessReport r = connectedness_report(m);
  const bool pass = r.julia_connected == want_connected && r.all_boundaries_connected == want_connected &&
                    r.consistent && static_cast<int>(r.fatou.size()) == want_fatou;
  return result(pass, cat("julia components ", r.julia_components, ", fatou components ", r.fatou.size(),
                          ", boundaries connected ", r.all_boundaries_connected, ", consistent ", r.consistent));
}

CaseResult fixed_case(const char* family, cd z0, FixedClass want, int n_check,
                      const std::function<cd(int)>& multiplier) {
  const FixedPointRecord r = multiplier_spectrum(parse_family(family), z0, n_check);
  double err = 0.0;
  if (multiplier) {
    for (int k = 0; k < static_cast<int>(r.multipliers.size()); ++k) {
      const cd want_l = multiplier(k);
      err = std::max(err, std::abs(r.multipliers[k] - want_l) / std::max(1.0, std::abs(want_l)));
    }
  }
  const bool pass = r.cls == want && r.residual < kFixedResidual && err <= 1e-9;
  return result(pass, cat("class ", fixed_class_name(r.cls), ", residual ", r.residual, ", multiplier error ", err));
}

std::vector<cd> circle_probes(double r, int count, bool centre) {
  std::vector<cd> out;
  for (int k = 0; k < count; ++k) out.push_back(std::polar(r, 2 * kPi * k / count));
  if (centre) out.push_back(0.0);
  return out;
}

FamilySpec subgrid_family(int k) {
  std::vector<FamilySpec> parts;
  for (int b = 0; b < k; ++b) {
    for (int a = 0; a < k; ++a) {
      const cd p(-1 + (a + 0.5) * 2.0 / k, 1 - (b + 0.5) * 2.0 / k);
      if (std::abs(p) >= 1) continue;
      parts.push_back(Parametric{Expr::mul(Expr::index(), Expr::sub(Expr::var(), Expr::constant(p))), 1, {}});
    }
  }
  return make_union(std::move(parts));
}

std::vector<VerifyCase> build() {
  std::vector<VerifyCase> v;
  auto add = [&](std::string name, std::string claim, std::function<CaseResult(const VerifyConfig&)> run) {
    v.push_back({std::move(name), std::move(claim), std::move(run)});
  };

  add("dsl-parametric", "family n: n*z parses to one unbounded parametric part", [](const VerifyConfig&) {
    const FamilySpec s = parse_family(kNz);
    const auto* p = std::get_if<Parametric>(&s.node);
    const bool pass = p && p->n_from == 1 && !p->n_to && to_string(p->expr) == "n*z";
    return result(pass, "canonical " + print_family(s));
  });

  add("dsl-union", "exp(n*z) | z^n parses to a union of two parametric parts", [](const VerifyConfig&) {
    const FamilySpec s = parse_family(kExpPower);
    const auto* u = std::get_if<Union>(&s.node);
    const bool pass = u && u->parts.size() == 2 && std::holds_alternative<Parametric>(u->parts[0].node) &&
                      std::holds_alternative<Parametric>(u->parts[1].node);
    return result(pass, "canonical " + print_family(s));
  });

  add("derivative-super-attracting", "d/dz n*z^2 vanishes at 0 for every n", [](const VerifyConfig&) {
    double worst = 0.0;
    for (const auto& m : enumerate_members(parse_family("family n: n*z^2"), 64)) {
      worst = std::max(worst, std::abs(m.eval_dual(0.0).deriv));
    }
    return result(worst == 0.0, cat("max |f'(0)| ", worst));
  });

  add("derivative-attracting", "d/dz (1/2+1/(3n)) z e^(nz) at 0 equals 1/2+1/(3n)", [](const VerifyConfig&) {
    double worst = 0.0;
    for (const auto& m : enumerate_members(parse_family("family n: (1/2+1/(3*n))*z*exp(n*z)"), 64)) {
      const double n = static_cast<double>(*m.index());
      worst = std::max(worst, std::abs(m.eval_dual(0.0).deriv - (0.5 + 1.0 / (3 * n))));
    }
    return result(worst <= 1e-12, cat("max error ", worst));
  });

  add("intersection-empty", "{nz} and {n(z-1/2)} share no member", [](const VerifyConfig&) {
    const FiniteSet s = intersect_families(parse_family(kNz), parse_family(kNzHalf), 256);
    return result(s.members.empty(), cat(s.members.size(), " common members"));
  });

  add("intersection-exp-power", "the exp-power pair intersects in the exp members", [](const VerifyConfig&) {
    const FiniteSet s = intersect_families(parse_family(kExpPower), parse_family(kExpShifted), 256);
    std::vector<std::uint64_t> exp_prints;
    for (const auto& m : enumerate_members(parse_family(kExp), 256)) exp_prints.push_back(fingerprint(m));
    std::size_t foreign = 0;
    for (const auto& e : s.members) {
      const auto print = fingerprint(Member::from_expr(e));
      foreign += std::find(exp_prints.begin(), exp_prints.end(), print) == exp_prints.end();
    }
    const bool pass = !s.members.empty() && foreign == 0 && s.infinite_truncation;
    return result(pass, cat(s.members.size(), " common members, ", foreign, " not of the form exp(nz)"));
  });

  add("normality-escaping-disk", "{n(z-2)} is normal on the unit disk", [](const VerifyConfig& c) {
    const FamilySpec s = parse_family("family n: n*(z-2)");
    const NormalityParams p = normality(c);
    double worst = 0.0;
    bool growing = false;
    for (const cd z : {cd(0, 0), cd(0.5, 0), cd(0, -0.5), cd(-0.7, 0.2), cd(0.6, 0.6)}) {
      const MartyScore m = marty_score(s, z, p, 2.0 / 256);
      worst = std::max(worst, m.score);
      growing |= m.growing;
    }
    return result(!growing && worst <= p.marty_threshold, cat("max score ", worst, ", growing ", growing));
  });

  add("classify-nz", "{nz}: J is the cluster at 0, Fatou elsewhere",
      [](const VerifyConfig& c) { return julia_clusters(c, kNz, 256, {0.0}); });

  add("classify-nz-union", "{nz} u {n(z-1)}: J is two clusters at 0 and 1",
      [](const VerifyConfig& c) { return julia_clusters(c, kNzUnion, 128, {0.0, 1.0}); });

  add("classify-bounded", "a locally bounded family is Fatou everywhere with empty I", [](const VerifyConfig& c) {
    const RunInputs in{"", parse_family("family n: z/(1+1/n)"), rect(-2, 2, -2, 2, 64), normality(c), escape(c), {}};
    const Analysis a = analyze(in);
    const long fatou = count_label(a.map, Label::Fatou);
    const long in_i = count_set(a.map.in_I);
    return result(fatou == static_cast<long>(in.window.size()) && in_i == 0,
                  cat("fatou ", fatou, " of ", in.window.size(), ", I pixels ", in_i));
  });

  add("escape-profile-union", "at z=1 the {nz} part grows and the {n(z-1)} part is 0", [](const VerifyConfig& c) {
    const EscapeProfile pr = escape_profile(parse_family(kNzUnion), 1.0, escape(c));
    bool grows = pr.parts.size() == 2, zero = grows;
    if (grows) {
      for (std::size_t k = 0; k < pr.parts[0].magnitudes.size(); ++k) {
        grows &= std::abs(pr.parts[0].magnitudes[k] - static_cast<double>(k + 1)) <= 1e-9 * (k + 1);
      }
      for (double m : pr.parts[1].magnitudes) zero &= m == 0.0;
    }
    const EscapeVerdict ev = escape_verdict(pr, escape(c));
    return result(grows && zero && !ev.in_I && ev.in_U, cat("part 1 = n ", grows, ", part 2 = 0 ", zero));
  });

  add("escape-exp", "I({e^(nz)}) is the right half plane", [](const VerifyConfig& c) {
    const Window w = rect(-2, 2, -2, 2, 256);
    const Mask got = classify_I(parse_family(kExp), w, escape(c));
    const double a = agreement(got, truth_mask(w, [](cd z) { return z.real() > 0; }), domain_mask(w), 2);
    return result(a >= 0.99, cat("agreement ", a));
  });

  add("escape-exp-power", "I({e^(nz)} u {z^n}) is Re z > 0 and |z| > 1", [](const VerifyConfig& c) {
    const Window w = rect(-2, 2, -2, 2, 256);
    const Mask got = classify_I(parse_family(kExpPower), w, escape(c));
    const Mask truth = truth_mask(w, [](cd z) { return z.real() > 0 && std::abs(z) > 1; });
    const double a = agreement(got, truth, domain_mask(w), 2);
    return result(a >= 0.99, cat("agreement ", a));
  });

  add("escape-disk-subgrid", "the union of {n(z-a)} over a 16x16 subgrid of the disk has empty I on that grid",
      [](const VerifyConfig& c) {
        // The raster pixels are the subgrid points, so each pixel has a part
        // that vanishes there. Between the points every part escapes.
        const Window w = unit_disk(16);
        const Mask got = classify_I(subgrid_family(16), w, escape(c));
        const long n = count_set(got);
        return result(n == 0, cat(n, " I pixels"));
      });

  add("escape-U-union", "U({nz} u {n(z-1)}) is the whole window", [](const VerifyConfig& c) {
    const Window w = rect(-2, 2, -2, 2, 128);
    const Mask u = classify_U(parse_family(kNzUnion), w, escape(c));
    const long n = count_set(u);
    return result(n == static_cast<long>(w.size()), cat(n, " of ", w.size(), " pixels in U"));
  });

  add("escape-U-empty-family", "U of the empty intersection is empty", [](const VerifyConfig& c) {
    const FamilySpec s = intersect_families(parse_family(kNz), parse_family(kNzHalf), 256);
    const Mask u = classify_U(s, rect(-2, 2, -2, 2, 64), escape(c));
    const long n = count_set(u);
    return result(n == 0, cat(n, " pixels in U"));
  });

  add("law-3-strict", "I of the exp-power intersection is strictly inside the union of I", [](const VerifyConfig& c) {
    const LawReport r = check_algebra_laws(parse_family(kExpPower), parse_family(kExpShifted),
                                           rect(-2, 2, -2, 2, 128), laws(c));
    const LawCheck* l2 = r.find("2-I");
    const LawCheck* l3 = r.find("3");
    const bool pass = l2 && l3 && l2->holds() && l3->holds() && l3->reverse_difference > 0;
    return result(pass, cat("law 2 violations ", l2 ? l2->violations : -1, ", law 3 violations ",
                            l3 ? l3->violations : -1, ", reverse ", l3 ? l3->reverse_difference : -1));
  });

  add("law-4-strict", "U({nz} n {n(z-1/2)}) is strictly inside the intersection of U", [](const VerifyConfig& c) {
    const LawReport r = check_algebra_laws(parse_family(kNz), parse_family(kNzHalf), unit_disk(128), laws(c));
    const LawCheck* l4 = r.find("4");
    const bool pass = l4 && l4->holds() && l4->reverse_difference > 0;
    return result(pass, cat("law 4 violations ", l4 ? l4->violations : -1, ", reverse ",
                            l4 ? l4->reverse_difference : -1));
  });

  add("invariance-exp-backward", "backward invariance of I({e^(nz)}) is not checkable", [](const VerifyConfig& c) {
    const Window w = rect(-2, 2, -2, 2, 64);
    const Mask i = classify_I(parse_family(kExp), w, escape(c));
    const InvarianceReport r = check_backward_invariance(parse_family(kExp), w, i, OrbitLimits{});
    return result(!r.supported, r.notice);
  });

  add("invariance-exp-forward", "I({e^(nz)}) is not forward invariant", [](const VerifyConfig& c) {
    const Window w = rect(-2, 2, -2, 2, 128);
    const Mask i = classify_I(parse_family(kExp), w, escape(c));
    const InvarianceReport r = check_forward_invariance(parse_family(kExp), w, i);
    return result(r.violations > 0, cat(r.violations, " violations among ", r.images, " images"));
  });

  add("invariance-nz-backward", "I({nz}) is backward invariant", [](const VerifyConfig& c) {
    const Window w = rect(-2, 2, -2, 2, 128);
    const Mask i = classify_I(parse_family(kNz), w, escape(c));
    const InvarianceReport r = check_backward_invariance(parse_family(kNz), w, i, OrbitLimits{});
    return result(r.supported && r.violations == 0 && r.images > 0,
                  cat(r.violations, " violations among ", r.images, " preimages"));
  });

  add("topology-two-holes", "the plane minus the pixels at 0 and 1 is one component", [](const VerifyConfig&) {
    const Window w = rect(-2, 2, -2, 2, 256);
    Mask m(w.width, w.height, 1);
    for (const cd z : {cd(0, 0), cd(1, 0)}) {
      const auto px = w.pixel_of(z);
      m.at(px->first, px->second) = 0;
    }
    const LabeledComponents c = label_components(m, 8);
    return result(c.count == 1, cat(c.count, " components"));
  });

  add("topology-annulus-half", "the upper half-annulus has a disconnected boundary", [](const VerifyConfig&) {
    const Window w = rect(-2, 2, -2, 2, 128);
    const Mask domain = truth_mask(w, [](cd z) { return std::abs(z) > 1 && std::abs(z) < 2; });
    Mask upper = truth_mask(w, [](cd z) { return std::abs(z) > 1 && std::abs(z) < 2 && z.imag() > 0; });
    const LabeledComponents c = label_components(upper, 8);
    const Mask b = boundary_of(c, 1, domain);
    bool empty = false;
    const bool conn = is_connected(b, 8, &empty);
    return result(c.count == 1 && !empty && !conn, cat("components ", c.count, ", boundary connected ", conn));
  });

  add("connectedness-nz", "{nz}: J connected, one Fatou component, consistent", [](const VerifyConfig& c) {
    return connectedness_case(c, kNz, rect(-2, 2, -2, 2, 128), true, 1);
  });

  add("connectedness-nz-union", "{nz} u {n(z-1)}: J and the Fatou boundary disconnected", [](const VerifyConfig& c) {
    return connectedness_case(c, kNzUnion, rect(-2, 2, -2, 2, 128), false, 1);
  });

  add("connectedness-ring", "{z^n(z-1/2)+z}: J is the unit circle, two Fatou components",
      [](const VerifyConfig& c) { return connectedness_case(c, kRing, rect(-1.5, 1.5, -1.5, 1.5, 128), true, 2); });

  add("fixed-attracting", "0 is attracting for (1/2+1/(3n)) z e^(nz)", [](const VerifyConfig&) {
    return fixed_case("family n: (1/2+1/(3*n))*z*exp(n*z)", 0.0, FixedClass::Attracting, 16,
                      [](int k) { return cd(0.5 + 1.0 / (3.0 * (k + 1))); });
  });

  add("fixed-super-attracting", "0 is super attracting for n z^2", [](const VerifyConfig&) {
    return fixed_case("family n: n*z^2", 0.0, FixedClass::SuperAttracting, 16, [](int) { return cd(0); });
  });

  add("fixed-repelling", "0 is repelling for {nz : n >= 2}", [](const VerifyConfig&) {
    return fixed_case("family n from 2: n*z", 0.0, FixedClass::Repelling, 16,
                      [](int k) { return cd(k + 2.0); });
  });

  add("fixed-ring", "the ring family has 0 indifferent and 1/2 repelling", [](const VerifyConfig&) {
    const auto fps = find_fixed_points(parse_family(kRing), rect(-1, 1, -1, 1, 64), 16);
    bool zero = false, half = false;
    for (const auto& f : fps) {
      zero |= near(f.location, 0.0, 1e-9) && f.cls == FixedClass::Indifferent;
      half |= near(f.location, 0.5, 1e-9) && f.cls == FixedClass::Repelling;
    }
    return result(zero && half, cat(fps.size(), " fixed points, 0 indifferent ", zero, ", 1/2 repelling ", half));
  });

  add("fixed-repelling-scaled", "0 is repelling for 2(1+1/n) z e^z", [](const VerifyConfig&) {
    return fixed_case("family n: 2*(1+1/n)*z*exp(z)", 0.0, FixedClass::Repelling, 16,
                      [](int k) { return cd(2.0 * (1.0 + 1.0 / (k + 1))); });
  });

  add("fixed-attracting-limit", "0 is attracting for z e^z (1-1/(2n))", [](const VerifyConfig&) {
    return fixed_case(kZexp, 0.0, FixedClass::Attracting, 16, [](int k) { return cd(1.0 - 0.5 / (k + 1)); });
  });

  add("limit-finite", "z e^z (1-1/(2n)) converges to z e^z near 0", [](const VerifyConfig& c) {
    const std::vector<cd> probes = circle_probes(0.2, 8, true);
    const LimitFunctionEstimate e = limit_functions(parse_family(kZexp), probes, escape(c, 8192));
    double err = 0.0;
    for (std::size_t q = 0; q < e.values.size(); ++q) {
      err = std::max(err, std::abs(e.values[q] - probes[q] * std::exp(probes[q])));
    }
    const bool pass = e.kind == LimitKind::Finite && err <= 1e-4;
    return result(pass, cat(limit_kind_name(e.kind), ", max error ", err, ", defect ", e.cauchy_defect));
  });

  add("limit-infinity", "{n(z-2)} tends to infinity on the unit disk", [](const VerifyConfig& c) {
    const LimitFunctionEstimate e =
        limit_functions(parse_family("family n: n*(z-2)"), circle_probes(0.5, 8, true), escape(c));
    return result(e.kind == LimitKind::Infinity, limit_kind_name(e.kind));
  });

  add("limit-two-attracting", "g + ((z-a)(z-b))^n converges to g on |z| < 0.25", [](const VerifyConfig& c) {
    const std::vector<cd> probes = circle_probes(0.25, 8, true);
    const LimitFunctionEstimate e = limit_functions(parse_family(kTwoAttracting), probes, escape(c));
    double err = 0.0;
    for (std::size_t q = 0; q < e.values.size(); ++q) {
      const cd z = probes[q];
      const cd g = 0.1 + (z - 0.1) * (0.2 * (z + 0.1) + (z - 0.1)) / -0.2;
      err = std::max(err, std::abs(e.values[q] - g));
    }
    return result(e.kind == LimitKind::Finite && err <= 1e-9, cat(limit_kind_name(e.kind), ", max error ", err));
  });

  add("escape-bounded-limit", "z e^z (1-1/(2n)) escapes nowhere on [1.5,2.5]x[-0.5,0.5]", [](const VerifyConfig& c) {
    // the members stay below |2 e^2.5| < 25, so any radius below that
    // certifies escape here
    const Mask i = classify_I(parse_family(kZexp), rect(1.5, 2.5, -0.5, 0.5, 32), escape(c));
    const long n = count_set(i);
    return result(n == 0, cat(n, " I pixels"));
  });

  add("algebra-identical", "identical families satisfy every law as an equality", [](const VerifyConfig& c) {
    const LawReport r = check_algebra_laws(parse_family(kNz), parse_family(kNz), rect(-2, 2, -2, 2, 64), laws(c));
    long bad = 0;
    for (const auto& l : r.checks) bad += !l.skipped && (l.violations != 0 || l.reverse_difference != 0);
    return result(bad == 0, cat(bad, " laws with a difference"));
  });

  add("report-schema", "a report validates against the shipped schema version", [](const VerifyConfig& c) {
    const std::string path = c.schema_path.empty() ? default_schema_path() : c.schema_path;
    const json schema = json::parse(read_text(path));
    const auto& props = schema.at("properties");
    if (props.at("version").at("const") != kReportVersion || props.at("schema").at("const") != kReportSchema) {
      return result(false, "schema id or version differs from the report writer");
    }
    const RunInputs in{kNz, parse_family(kNz), rect(-2, 2, -2, 2, 16), normality(c), escape(c), {}};
    const auto errs = validate_schema(report_document(in, analyze(in)), schema);
    return result(errs.empty(), errs.empty() ? "valid" : errs.front());
  });

  return v;
}

}  // namespace

const std::vector<VerifyCase>& verify_cases() {
  static const std::vector<VerifyCase> cases = build();
  return cases;
}

}  // namespace fatoukit
