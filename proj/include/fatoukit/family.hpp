#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fatoukit/expr.hpp"

namespace fatoukit {

struct FamilySpec;

/// {expr(n) : n_from <= n <= n_to}; unbounded when n_to is empty.
struct Parametric {
  Expr expr;
  std::int64_t n_from = 1;
  std::optional<std::int64_t> n_to;
  friend bool operator==(const Parametric&, const Parametric&) = default;
};

struct FiniteSet {
  std::vector<Expr> members;
  // Set by intersect_families when the list is a truncation of a family
  // that is itself infinite; escape and normality treat it as a sequence.
  // Not expressible in the DSL.
  bool infinite_truncation = false;
  friend bool operator==(const FiniteSet&, const FiniteSet&) = default;
};

/// Finitely generated semigroup under composition, truncated to words of
/// length <= max_word_len. Words apply their leftmost generator first.
struct Semigroup {
  std::vector<Expr> generators;
  int max_word_len = 1;
  friend bool operator==(const Semigroup&, const Semigroup&) = default;
};

struct Union {
  std::vector<FamilySpec> parts;
  friend bool operator==(const Union&, const Union&);
};

struct FamilySpec {
  std::variant<Parametric, FiniteSet, Semigroup, Union> node;

  FamilySpec() = default;
  FamilySpec(Parametric p) : node(std::move(p)) {}
  FamilySpec(FiniteSet s) : node(std::move(s)) {}
  FamilySpec(Semigroup s) : node(std::move(s)) {}
  FamilySpec(Union u) : node(std::move(u)) {}

  friend bool operator==(const FamilySpec& a, const FamilySpec& b) { return a.node == b.node; }
};

inline bool operator==(const Union& a, const Union& b) { return a.parts == b.parts; }

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses the family DSL:
///
///   spec := part ("|" part)*
///   part := "family" "n" ["from" INT] ["to" INT] ":" expr
///         | "set:" expr (";" expr)*
///         | "semigroup" "L=" INT ":" expr (";" expr)*
///
/// Throws ParseError on malformed input, unknown identifiers, and `n`
/// inside set members or semigroup generators.
FamilySpec parse_family(std::string_view text);

/// Parses a single expression over z and n.
Expr parse_expr(std::string_view text);

/// Canonical printer; parse_family(print_family(s)) == s for grammar specs.
std::string print_family(const FamilySpec& spec);

/// Leaf parts in order, with nested unions flattened.
std::vector<FamilySpec> flatten_parts(const FamilySpec& spec);

/// True for parts that denote an infinite family (unbounded parametric,
/// semigroups, infinite truncations); finite sets and bounded ranges are not.
bool is_infinite_part(const FamilySpec& part);

bool has_infinite_part(const FamilySpec& spec);

FamilySpec make_union(std::vector<FamilySpec> parts);

}  // namespace fatoukit
