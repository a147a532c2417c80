#include "fatoukit/member.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <unordered_map>

namespace fatoukit {

struct Member::Impl {
  Program program;  // expression members only
  std::shared_ptr<const std::vector<Program>> generators;
  std::vector<int> word;
  std::optional<std::int64_t> n;
  int part = 0;
  bool is_word = false;

  mutable std::once_flag composed_once;
  mutable Expr composed;
};

Member Member::from_expr(const Expr& bound, std::optional<std::int64_t> n, int part) {
  auto impl = std::make_shared<Impl>();
  impl->program = Program(bound);
  impl->n = n;
  impl->part = part;
  Member m;
  m.impl_ = std::move(impl);
  return m;
}

Member Member::from_word(std::shared_ptr<const std::vector<Program>> generators,
                         std::vector<int> word, int part) {
  auto impl = std::make_shared<Impl>();
  impl->generators = std::move(generators);
  impl->word = std::move(word);
  impl->part = part;
  impl->is_word = true;
  Member m;
  m.impl_ = std::move(impl);
  return m;
}

bool Member::is_word() const { return impl_->is_word; }
const std::vector<int>& Member::word() const { return impl_->word; }
std::optional<std::int64_t> Member::index() const { return impl_->n; }
int Member::part() const { return impl_->part; }

EvalResult Member::eval(cd z) const {
  if (!impl_->is_word) return impl_->program.eval(z);
  EvalResult r{z, EvalStatus::Finite};
  for (int g : impl_->word) {
    r = (*impl_->generators)[g].eval(r.value);
    if (!r.finite()) return r;
  }
  return r;
}

EvalDual Member::eval_dual(cd z) const {
  if (!impl_->is_word) return impl_->program.eval_dual(z);
  EvalDual acc{z, cd{1.0, 0.0}, EvalStatus::Finite};
  for (int g : impl_->word) {
    const EvalDual step = (*impl_->generators)[g].eval_dual(acc.value);
    acc.value = step.value;
    acc.status = step.status;
    if (!step.finite()) return acc;
    acc.deriv = cmul(step.deriv, acc.deriv);
  }
  if (!is_finite(acc.deriv)) acc.status = EvalStatus::Escaped;
  return acc;
}

const Expr& Member::expr() const {
  if (!impl_->is_word) return impl_->program.expr();
  std::call_once(impl_->composed_once, [this] {
    Expr e = Expr::var();
    for (int g : impl_->word) e = substitute_z((*impl_->generators)[g].expr(), e);
    impl_->composed = e;
  });
  return impl_->composed;
}

std::string Member::describe() const {
  std::string s = to_string(expr());
  if (impl_->n) return "n=" + std::to_string(*impl_->n) + ": " + s;
  if (impl_->is_word) {
    std::string w = "word[";
    for (std::size_t i = 0; i < impl_->word.size(); ++i) {
      if (i) w += ",";
      w += std::to_string(impl_->word[i] + 1);
    }
    return w + "]: " + s;
  }
  return s;
}

Member differentiate(const Member& m) {
  if (!m.is_word()) return Member::from_expr(derivative(m.expr()), m.index(), m.part());
  return Member::from_expr(derivative(m.expr()), std::nullopt, m.part());
}

namespace {

using Poly = std::vector<cd>;

void trim(Poly& p) {
  while (p.size() > 1 && p.back() == cd{0.0, 0.0}) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, cd{0.0, 0.0});
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == cd{0.0, 0.0}) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += cmul(a[i], b[j]);
  }
  trim(out);
  return out;
}

Poly poly_add(const Poly& a, const Poly& b, double sign) {
  Poly out(std::max(a.size(), b.size()), cd{0.0, 0.0});
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += sign * b[i];
  trim(out);
  return out;
}

struct Expander {
  PolyStatus status = PolyStatus::Polynomial;
  std::unordered_map<const Node*, Poly> memo;

  bool fail(PolyStatus s) {
    if (status == PolyStatus::Polynomial || s == PolyStatus::NotPolynomial) status = s;
    return false;
  }

  bool check(const Poly& p) {
    if (static_cast<int>(p.size()) - 1 > kMaxPolyDegree) return fail(PolyStatus::DegreeTooHigh);
    return true;
  }

  bool go(const Expr& e, Poly& out) {
    if (auto it = memo.find(e.node()); it != memo.end()) {
      out = it->second;
      return true;
    }
    if (!e.depends_on_z()) {
      if (!e.is_constant()) return fail(PolyStatus::NotPolynomial);
      out = {e.value()};
      memo.emplace(e.node(), out);
      return true;
    }
    Poly a, b;
    switch (e.kind()) {
      case NodeKind::Var: out = {cd{0.0, 0.0}, cd{1.0, 0.0}}; break;
      case NodeKind::Neg:
        if (!go(e.lhs(), a)) return false;
        out = poly_add(Poly{cd{0.0, 0.0}}, a, -1.0);
        break;
      case NodeKind::Add:
      case NodeKind::Sub:
        if (!go(e.lhs(), a) || !go(e.rhs(), b)) return false;
        out = poly_add(a, b, e.kind() == NodeKind::Add ? 1.0 : -1.0);
        break;
      case NodeKind::Mul:
        if (!go(e.lhs(), a) || !go(e.rhs(), b)) return false;
        if (a.size() + b.size() - 2 > static_cast<std::size_t>(kMaxPolyDegree)) {
          return fail(PolyStatus::DegreeTooHigh);
        }
        out = poly_mul(a, b);
        break;
      case NodeKind::Div: {
        if (e.rhs().depends_on_z() || !e.rhs().is_constant()) return fail(PolyStatus::NotPolynomial);
        const cd d = e.rhs().value();
        if (d == cd{0.0, 0.0}) return fail(PolyStatus::NotPolynomial);
        if (!go(e.lhs(), a)) return false;
        out = a;
        for (auto& c : out) c /= d;
        break;
      }
      case NodeKind::Pow: {
        int k = 0;
        if (!e.rhs().is_constant() || !as_small_integer(e.rhs().value(), k) || k < 0) {
          return fail(PolyStatus::NotPolynomial);
        }
        if (!go(e.lhs(), a)) return false;
        if (static_cast<long long>(a.size() - 1) * k > kMaxPolyDegree) return fail(PolyStatus::DegreeTooHigh);
        out = Poly{cd{1.0, 0.0}};
        Poly base = a;
        for (int kk = k; kk > 0; kk >>= 1) {
          if (kk & 1) out = poly_mul(out, base);
          if (kk > 1) base = poly_mul(base, base);
        }
        break;
      }
      default: return fail(PolyStatus::NotPolynomial);
    }
    if (!check(out)) return false;
    memo.emplace(e.node(), out);
    return true;
  }
};

}  // namespace

PolyForm polynomial_form(const Expr& e) {
  Expander ex;
  Poly p;
  PolyForm form;
  if (ex.go(e, p)) {
    form.status = PolyStatus::Polynomial;
    form.coeffs = std::move(p);
  } else {
    form.status = ex.status;
  }
  return form;
}

PolyForm polynomial_form(const Member& m) { return polynomial_form(m.expr()); }

cd horner(const std::vector<cd>& coeffs, cd z) {
  cd acc{0.0, 0.0};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = cmul(acc, z) + *it;
  return acc;
}

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t x = (state += 0x9E3779B97F4A7C15ULL);
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

double unit(std::uint64_t& state) { return static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53; }

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  std::uint64_t s = h ^ (v + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2));
  return splitmix64(s);
}

std::int64_t quantize(double x, double scale) {
  return static_cast<std::int64_t>(std::llround(x / scale / kFingerprintQuantum));
}

}  // namespace

const std::vector<cd>& fingerprint_probes() {
  static const std::vector<cd> probes = [] {
    std::vector<cd> out;
    std::uint64_t state = kFingerprintSeed;
    for (int k = 0; k < kFingerprintProbes + kFingerprintFallbacks; ++k) {
      const double r = 0.3 + unit(state);
      const double theta = 2.0 * kPi * unit(state);
      out.push_back(std::polar(r, theta));
    }
    return out;
  }();
  return probes;
}

std::uint64_t fingerprint(const Member& m) {
  const auto& probes = fingerprint_probes();
  std::uint64_t h = 0x5EEDULL;
  int fallback = kFingerprintProbes;
  for (int k = 0; k < kFingerprintProbes; ++k) {
    EvalResult r = m.eval(probes[k]);
    while (r.status == EvalStatus::Pole && fallback < static_cast<int>(probes.size())) {
      r = m.eval(probes[fallback++]);
    }
    switch (r.status) {
      case EvalStatus::Pole: h = mix(h, 0x9013ULL); break;
      case EvalStatus::Escaped: h = mix(h, 0xE5CAULL); break;
      case EvalStatus::Finite: {
        const double big = std::max(std::abs(r.value.real()), std::abs(r.value.imag()));
        if (big == 0.0) {
          h = mix(mix(h, 0), 0);
          break;
        }
        int exponent = 0;
        std::frexp(big, &exponent);
        const double scale = std::ldexp(1.0, exponent);
        h = mix(h, static_cast<std::uint64_t>(exponent));
        h = mix(h, static_cast<std::uint64_t>(quantize(r.value.real(), scale)));
        h = mix(h, static_cast<std::uint64_t>(quantize(r.value.imag(), scale)));
        break;
      }
    }
  }
  return h;
}

}  // namespace fatoukit
