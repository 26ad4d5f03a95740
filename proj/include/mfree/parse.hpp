#pragma once

// Spec strings: fields "gf(p,k)", groups "sym(n)", "gl(n,p,k)", "prod(a,b,...)",
// subgroups "young(m)", "gens[(1 2),(1 2 3)]", characters "gg(3)", ...

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "mfree/group.hpp"
#include "mfree/rep.hpp"

namespace mfree {

namespace detail {

class SpecLexer {
 public:
  SpecLexer(std::string_view text, std::string what) : s_(text), what_(std::move(what)) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) error(std::string("expected '") + c + "'");
  }
  std::string ident() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (start == pos_) error("expected a name");
    return std::string(s_.substr(start, pos_ - start));
  }
  long integer() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_ || (pos_ == start + 1 && s_[start] == '-')) error("expected an integer");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }
  void finish() {
    if (!done()) error("trailing input");
  }
  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorKind::ParseError, what_ + " \"" + std::string(s_) + "\" at column " + std::to_string(pos_ + 1) + ": " + msg);
  }

  std::size_t pos() const noexcept { return pos_; }
  std::string_view text() const noexcept { return s_; }

 private:
  std::string_view s_;
  std::string what_;
  std::size_t pos_ = 0;
};

inline GroupPtr parse_group_expr(SpecLexer& lx) {
  const std::string name = lx.ident();
  if (name == "quaternion8") return quaternion8();
  lx.expect('(');
  GroupPtr g;
  if (name == "prod") {
    std::vector<GroupPtr> comps{parse_group_expr(lx)};
    while (lx.accept(',')) comps.push_back(parse_group_expr(lx));
    lx.expect(')');
    return product_group(comps);
  }
  const long a = lx.integer();
  if (name == "gl") {
    lx.expect(',');
    const long p = lx.integer();
    lx.expect(',');
    const long k = lx.integer();
    lx.expect(')');
    if (a < 1 || p < 2 || k < 1) lx.error("gl(n,p,k) needs n >= 1, p >= 2, k >= 1");
    return general_linear_group(static_cast<std::size_t>(a), make_field(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(k)));
  }
  lx.expect(')');
  if (a < 1) lx.error("group parameter must be positive");
  const auto n = static_cast<std::size_t>(a);
  if (name == "sym") return symmetric_group(n);
  if (name == "alt") return alternating_group(n);
  if (name == "cyclic") return cyclic_group(n);
  if (name == "dihedral") return dihedral_group(n);
  lx.error("unknown group constructor '" + name + "'");
}

}  // namespace detail

/// "gf(p,k)"
inline FieldPtr parse_field(std::string_view text) {
  detail::SpecLexer lx(text, "field spec");
  if (lx.ident() != "gf") lx.error("expected gf(p,k)");
  lx.expect('(');
  const long p = lx.integer();
  long k = 1;
  if (lx.accept(',')) k = lx.integer();
  lx.expect(')');
  lx.finish();
  if (p < 2 || k < 1) lx.error("gf(p,k) needs p >= 2 and k >= 1");
  return make_field(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(k));
}

inline GroupPtr parse_group(std::string_view text) {
  detail::SpecLexer lx(text, "group spec");
  auto g = detail::parse_group_expr(lx);
  lx.finish();
  return g;
}

namespace detail {

/// "(1 2)(3 4 5)" as a permutation of degree n; "()" is the identity.
inline Word parse_cycles(SpecLexer& lx, std::size_t n) {
  std::vector<std::vector<int>> cycles;
  while (lx.peek() == '(') {
    lx.expect('(');
    std::vector<int> cyc;
    while (!lx.accept(')')) {
      const long x = lx.integer();
      if (x < 1 || static_cast<std::size_t>(x) > n) lx.error("point out of range");
      cyc.push_back(static_cast<int>(x));
      lx.accept(',');
    }
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
  }
  return perm_from_cycles(n, cycles);
}

/// "[[a,b],[c,d]]" with entries taken as field-element codes.
inline Word parse_matrix_literal(SpecLexer& lx, std::size_t n, std::uint32_t q) {
  Word w;
  lx.expect('[');
  for (std::size_t r = 0; r < n; ++r) {
    if (r) lx.expect(',');
    lx.expect('[');
    for (std::size_t c = 0; c < n; ++c) {
      if (c) lx.expect(',');
      const long x = lx.integer();
      if (x < 0) lx.error("matrix entries are non-negative codes");
      if (static_cast<std::uint64_t>(x) >= q) lx.error("matrix entry exceeds the field size");
      w.push_back(static_cast<int>(x));
    }
    lx.expect(']');
  }
  lx.expect(']');
  return w;
}

}  // namespace detail

/// Subgroup specs: "whole", "trivial", "young(m)", "unitriangular", "borel",
/// "torus", "cartan", "diag", "gens[...]".
inline Subgroup parse_subgroup(const GroupPtr& g, std::string_view text) {
  detail::SpecLexer lx(text, "subgroup spec");
  const std::string name = lx.ident();
  Subgroup h;
  if (name == "whole") {
    h = whole_group(g);
  } else if (name == "trivial") {
    h = trivial_subgroup(g);
  } else if (name == "young") {
    lx.expect('(');
    const long m = lx.integer();
    lx.expect(')');
    if (m < 1) lx.error("young(m) needs m >= 1");
    h = young_subgroup(g, static_cast<std::size_t>(m));
  } else if (name == "unitriangular") {
    h = unitriangular_subgroup(g);
  } else if (name == "borel") {
    h = borel_subgroup(g);
  } else if (name == "torus") {
    h = torus_subgroup(g);
  } else if (name == "cartan") {
    h = cartan_subgroup(g);
  } else if (name == "diag") {
    h = diagonal_subgroup(g);
  } else if (name == "gens") {
    lx.expect('[');
    std::vector<std::size_t> gens;
    while (!lx.accept(']')) {
      Word w;
      if (g->kind() == GroupKind::Permutation) {
        w = detail::parse_cycles(lx, g->element(0).size());
      } else if (g->kind() == GroupKind::Matrix) {
        w = detail::parse_matrix_literal(lx, g->matrix_degree(), g->matrix_field()->q());
      } else {
        lx.error("gens[...] is supported for permutation and matrix groups");
      }
      auto idx = g->find(w);
      if (!idx) lx.error("generator is not an element of " + g->name());
      gens.push_back(*idx);
      lx.accept(',');
    }
    h = subgroup_from_generators(g, gens, std::string(text));
  } else {
    lx.error("unknown subgroup spec '" + name + "'");
  }
  lx.finish();
  return h;
}

/// Character specs on h: "trivial", "sign", "gg(order)", "multchar(e)".
inline Representation parse_character(const Subgroup& h, const FieldPtr& f, std::string_view text) {
  detail::SpecLexer lx(text, "character spec");
  const std::string name = lx.ident();
  Representation eta;
  if (name == "trivial") {
    eta = trivial_rep(h.group, f);
  } else if (name == "sign") {
    if (h.group->kind() != GroupKind::Permutation) lx.error("sign needs a permutation group");
    eta = sign_rep(h.group, f);
  } else if (name == "gg" || name == "multchar") {
    lx.expect('(');
    const long x = lx.integer();
    lx.expect(')');
    if (x < 0) lx.error("parameter must be non-negative");
    eta = name == "gg" ? gelfand_graev_character(h, f, static_cast<std::uint64_t>(x))
                       : multiplicative_character(h.group, f, static_cast<std::uint64_t>(x));
  } else {
    lx.error("unknown character spec '" + name + "'");
  }
  lx.finish();
  return eta;
}

}  // namespace mfree
