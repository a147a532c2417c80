#include "fatoukit/family.hpp"

#include <cctype>
#include <charconv>

namespace fatoukit {

namespace {

enum class Tok { Number, Ident, Symbol, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  cd number{};
  bool integral = false;  // plain digits, no fraction/exponent/imaginary suffix
  std::size_t pos = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    tok_ = Token{};
    tok_.pos = pos_;
    if (pos_ >= src_.size()) return;
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      lex_number();
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        ++pos_;
      }
      tok_.kind = Tok::Ident;
      tok_.text = std::string(src_.substr(start, pos_ - start));
    } else if (std::string_view("+-*/^():;|=").find(c) != std::string_view::npos) {
      tok_.kind = Tok::Symbol;
      tok_.text = std::string(1, c);
      ++pos_;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }
  }

  void lex_number() {
    const std::size_t start = pos_;
    bool integral = true;
    auto digits = [&] {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    };
    digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      integral = false;
      ++pos_;
      digits();
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t save = pos_;
      ++pos_;
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
      if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        integral = false;
        digits();
      } else {
        pos_ = save;  // "2e" is not an exponent; let the identifier lexer complain
      }
    }
    std::string_view body = src_.substr(start, pos_ - start);
    double value = 0.0;
    auto res = std::from_chars(body.data(), body.data() + body.size(), value);
    if (res.ec != std::errc{} || res.ptr != body.data() + body.size()) {
      throw ParseError("malformed number '" + std::string(body) + "'", start);
    }
    tok_.kind = Tok::Number;
    tok_.text = std::string(body);
    if (pos_ < src_.size() && src_[pos_] == 'i' &&
        !(pos_ + 1 < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_ + 1])))) {
      ++pos_;
      tok_.number = cd{0.0, value};
      integral = false;
    } else {
      tok_.number = cd{value, 0.0};
    }
    tok_.integral = integral;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  Token tok_;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) {}

  FamilySpec spec() {
    std::vector<FamilySpec> parts;
    parts.push_back(part());
    while (is_symbol("|")) {
      lex_.take();
      parts.push_back(part());
    }
    expect_end();
    if (parts.size() == 1) return std::move(parts.front());
    return make_union(std::move(parts));
  }

  Expr lone_expr() {
    allow_n_ = true;
    Expr e = expr();
    expect_end();
    return e;
  }

 private:
  bool is_symbol(const char* s) const {
    return lex_.peek().kind == Tok::Symbol && lex_.peek().text == s;
  }
  bool is_ident(const char* s) const {
    return lex_.peek().kind == Tok::Ident && lex_.peek().text == s;
  }

  void expect_symbol(const char* s) {
    if (!is_symbol(s)) fail(std::string("expected '") + s + "'");
    lex_.take();
  }
  void expect_ident(const char* s) {
    if (!is_ident(s)) fail(std::string("expected '") + s + "'");
    lex_.take();
  }
  void expect_end() {
    if (lex_.peek().kind != Tok::End) fail("unexpected trailing input '" + lex_.peek().text + "'");
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, lex_.peek().pos); }

  std::int64_t positive_int() {
    const Token& t = lex_.peek();
    if (t.kind != Tok::Number || !t.integral || t.number.real() < 1.0 || t.number.real() > 1e15) {
      fail("expected a positive integer");
    }
    return static_cast<std::int64_t>(lex_.take().number.real());
  }

  FamilySpec part() {
    if (is_ident("family")) {
      lex_.take();
      expect_ident("n");
      Parametric p;
      if (is_ident("from")) {
        lex_.take();
        p.n_from = positive_int();
      }
      if (is_ident("to")) {
        const std::size_t at = lex_.peek().pos;
        lex_.take();
        p.n_to = positive_int();
        if (*p.n_to < p.n_from) throw ParseError("empty index range", at);
      }
      expect_symbol(":");
      allow_n_ = true;
      p.expr = expr();
      return p;
    }
    if (is_ident("set")) {
      lex_.take();
      expect_symbol(":");
      FiniteSet s;
      allow_n_ = false;
      s.members = expr_list();
      return s;
    }
    if (is_ident("semigroup")) {
      lex_.take();
      expect_ident("L");
      expect_symbol("=");
      Semigroup g;
      g.max_word_len = static_cast<int>(positive_int());
      expect_symbol(":");
      allow_n_ = false;
      g.generators = expr_list();
      return g;
    }
    fail("expected 'family', 'set:' or 'semigroup'");
  }

  std::vector<Expr> expr_list() {
    std::vector<Expr> out;
    out.push_back(expr());
    while (is_symbol(";")) {
      lex_.take();
      out.push_back(expr());
    }
    return out;
  }

  Expr expr() {
    Expr lhs = term();
    while (is_symbol("+") || is_symbol("-")) {
      const bool plus = lex_.take().text == "+";
      Expr rhs = term();
      lhs = plus ? Expr::add(lhs, rhs) : Expr::sub(lhs, rhs);
    }
    return lhs;
  }

  Expr term() {
    Expr lhs = unary();
    while (is_symbol("*") || is_symbol("/")) {
      const bool times = lex_.take().text == "*";
      Expr rhs = unary();
      lhs = times ? Expr::mul(lhs, rhs) : Expr::div(lhs, rhs);
    }
    return lhs;
  }

  Expr unary() {
    if (is_symbol("-")) {
      lex_.take();
      return Expr::neg(unary());
    }
    return power();
  }

  Expr power() {
    Expr base = primary();
    if (is_symbol("^")) {
      lex_.take();
      return Expr::pow(base, unary());
    }
    return base;
  }

  Expr primary() {
    const Token& t = lex_.peek();
    if (t.kind == Tok::Number) return Expr::constant(lex_.take().number);
    if (t.kind == Tok::Symbol && t.text == "(") {
      lex_.take();
      Expr e = expr();
      expect_symbol(")");
      return e;
    }
    if (t.kind == Tok::Ident) {
      const std::size_t at = t.pos;
      const std::string name = lex_.take().text;
      if (name == "z") return Expr::var();
      if (name == "i") return Expr::constant(cd{0.0, 1.0});
      if (name == "n") {
        if (!allow_n_) throw ParseError("'n' is not allowed in set members or semigroup generators", at);
        return Expr::index();
      }
      if (name == "exp" || name == "sin" || name == "cos") {
        expect_symbol("(");
        Expr arg = expr();
        expect_symbol(")");
        if (name == "exp") return Expr::exp(arg);
        if (name == "sin") return Expr::sin(arg);
        return Expr::cos(arg);
      }
      throw ParseError("unknown identifier '" + name + "'", at);
    }
    if (t.kind == Tok::End) fail("unexpected end of input");
    fail("unexpected '" + t.text + "'");
  }

  Lexer lex_;
  bool allow_n_ = true;
};

std::string print_list(const std::vector<Expr>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += "; ";
    out += to_string(xs[i]);
  }
  return out;
}

}  // namespace

FamilySpec parse_family(std::string_view text) { return Parser(text).spec(); }

Expr parse_expr(std::string_view text) { return Parser(text).lone_expr(); }

std::string print_family(const FamilySpec& spec) {
  struct Printer {
    std::string operator()(const Parametric& p) const {
      std::string s = "family n";
      if (p.n_from != 1) s += " from " + std::to_string(p.n_from);
      if (p.n_to) s += " to " + std::to_string(*p.n_to);
      return s + ": " + to_string(p.expr);
    }
    std::string operator()(const FiniteSet& s) const { return "set: " + print_list(s.members); }
    std::string operator()(const Semigroup& g) const {
      return "semigroup L=" + std::to_string(g.max_word_len) + ": " + print_list(g.generators);
    }
    std::string operator()(const Union& u) const {
      std::string s;
      for (std::size_t i = 0; i < u.parts.size(); ++i) {
        if (i) s += " | ";
        s += print_family(u.parts[i]);
      }
      return s;
    }
  };
  return std::visit(Printer{}, spec.node);
}

std::vector<FamilySpec> flatten_parts(const FamilySpec& spec) {
  std::vector<FamilySpec> out;
  if (const auto* u = std::get_if<Union>(&spec.node)) {
    for (const auto& p : u->parts) {
      auto sub = flatten_parts(p);
      out.insert(out.end(), sub.begin(), sub.end());
    }
  } else {
    out.push_back(spec);
  }
  return out;
}

bool is_infinite_part(const FamilySpec& part) {
  if (const auto* p = std::get_if<Parametric>(&part.node)) return !p->n_to.has_value();
  if (const auto* s = std::get_if<FiniteSet>(&part.node)) return s->infinite_truncation;
  if (std::holds_alternative<Semigroup>(part.node)) return true;
  return has_infinite_part(part);
}

bool has_infinite_part(const FamilySpec& spec) {
  if (const auto* u = std::get_if<Union>(&spec.node)) {
    for (const auto& p : u->parts) {
      if (is_infinite_part(p)) return true;
    }
    return false;
  }
  return is_infinite_part(spec);
}

FamilySpec make_union(std::vector<FamilySpec> parts) {
  Union u;
  for (auto& p : parts) {
    auto flat = flatten_parts(p);
    u.parts.insert(u.parts.end(), flat.begin(), flat.end());
  }
  if (u.parts.size() == 1) return std::move(u.parts.front());
  return u;
}

}  // namespace fatoukit
