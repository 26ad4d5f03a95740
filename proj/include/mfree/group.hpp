#pragma once

// Finite groups by full enumeration.
//
// Every element has a canonical representation (a permutation array, a
// matrix entry vector, or a tuple of component indices).  Elements are
// sorted lexicographically by that representation, so element indices are
// reproducible across runs.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "mfree/field.hpp"
#include "mfree/matrix.hpp"

namespace mfree {

using Word = std::vector<int>;

struct WordHash {
  std::size_t operator()(const Word& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) h = (h ^ static_cast<std::size_t>(x + 7)) * 1099511628211ull;
    return h;
  }
};

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

enum class GroupKind { Permutation, Matrix, Product };

class FiniteGroup {
 public:
  static constexpr std::size_t kTableCap = 2048;
  static constexpr std::size_t kElementCap = 100000;

  using Compose = std::function<Word(const Word&, const Word&)>;

  struct Spec {
    std::string name;
    GroupKind kind;
    Word identity;
    std::vector<Word> generators;
    Compose compose;
    FieldPtr matrix_field;                 // Matrix kind
    std::size_t matrix_n = 0;              // Matrix kind
    std::vector<GroupPtr> components;      // Product kind
  };

  /// Closure of the generators under composition, canonically sorted.
  static GroupPtr generate(Spec spec) {
    std::unordered_map<Word, std::size_t, WordHash> seen;
    std::vector<Word> elems{spec.identity};
    seen.emplace(spec.identity, 0);
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (const auto& s : spec.generators) {
        Word w = spec.compose(elems[i], s);
        if (seen.emplace(w, elems.size()).second) {
          elems.push_back(std::move(w));
          require(elems.size() <= kElementCap, ErrorKind::SizeCapExceeded,
                  spec.name + " exceeds the element cap of " + std::to_string(kElementCap));
        }
      }
    }
    return from_elements(std::move(spec), std::move(elems));
  }

  /// Build from a complete, closed element list (any order).
  static GroupPtr from_elements(Spec spec, std::vector<Word> elems) {
    require(elems.size() <= kElementCap, ErrorKind::SizeCapExceeded, spec.name + " exceeds the element cap");
    std::sort(elems.begin(), elems.end());
    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->name_ = spec.name;
    g->kind_ = spec.kind;
    g->compose_ = spec.compose;
    g->matrix_field_ = spec.matrix_field;
    g->matrix_n_ = spec.matrix_n;
    g->components_ = spec.components;
    g->elements_ = std::move(elems);
    for (std::size_t i = 0; i < g->elements_.size(); ++i) g->index_.emplace(g->elements_[i], i);
    g->identity_ = g->index_of(spec.identity);
    for (const auto& s : spec.generators) {
      const std::size_t idx = g->index_of(s);
      if (idx != g->identity_ && std::find(g->gens_.begin(), g->gens_.end(), idx) == g->gens_.end())
        g->gens_.push_back(idx);
    }
    g->finish();
    return g;
  }

  const std::string& name() const noexcept { return name_; }
  GroupKind kind() const noexcept { return kind_; }
  std::size_t order() const noexcept { return elements_.size(); }
  std::size_t identity() const noexcept { return identity_; }
  const std::vector<std::size_t>& generators() const noexcept { return gens_; }
  const Word& element(std::size_t i) const { return elements_[i]; }
  const std::vector<Word>& elements() const noexcept { return elements_; }
  const FieldPtr& matrix_field() const noexcept { return matrix_field_; }
  std::size_t matrix_degree() const noexcept { return matrix_n_; }
  const std::vector<GroupPtr>& components() const noexcept { return components_; }
  const Compose& composer() const noexcept { return compose_; }
  bool has_table() const noexcept { return !table_.empty(); }

  std::size_t index_of(const Word& w) const {
    auto it = index_.find(w);
    if (it == index_.end()) fail(ErrorKind::InvalidArgument, "element is not in " + name_);
    return it->second;
  }
  std::optional<std::size_t> find(const Word& w) const {
    auto it = index_.find(w);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t mul(std::size_t a, std::size_t b) const {
    if (!table_.empty()) return table_[a * order() + b];
    return index_of(compose_(elements_[a], elements_[b]));
  }
  std::size_t inv(std::size_t a) const noexcept { return inverse_[a]; }

  std::size_t element_order(std::size_t a) const {
    std::size_t n = 1, x = a;
    while (x != identity_) {
      x = mul(x, a);
      ++n;
    }
    return n;
  }

  /// Matrix of a Matrix-kind element over its defining field.
  Matrix as_matrix(std::size_t a) const {
    require(kind_ == GroupKind::Matrix, ErrorKind::InvalidArgument, name_ + " is not a matrix group");
    const Word& w = elements_[a];
    std::vector<Elt> d(w.begin(), w.end());
    return Matrix(matrix_field_, matrix_n_, matrix_n_, std::move(d));
  }

  /// Number of conjugacy classes (orbit count of the conjugation action).
  std::size_t conjugacy_class_count() const {
    std::vector<bool> seen(order(), false);
    std::size_t classes = 0;
    for (std::size_t x = 0; x < order(); ++x) {
      if (seen[x]) continue;
      ++classes;
      for (std::size_t g = 0; g < order(); ++g) seen[mul(mul(g, x), inv(g))] = true;
    }
    return classes;
  }

 private:
  FiniteGroup() = default;

  void finish() {
    const std::size_t n = order();
    if (n <= kTableCap) {
      table_.resize(n * n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          auto it = index_.find(compose_(elements_[a], elements_[b]));
          if (it == index_.end()) fail(ErrorKind::InvalidArgument, name_ + " is not closed under multiplication");
          table_[a * n + b] = static_cast<std::uint32_t>(it->second);
        }
    }
    inverse_.assign(n, n);
    for (std::size_t a = 0; a < n; ++a) {
      if (inverse_[a] != n) continue;
      std::size_t x = a, prev = identity_;
      while (x != identity_) {
        prev = x;
        x = mul(x, a);
      }
      inverse_[a] = prev;
      inverse_[prev] = a;
    }
    for (std::size_t a = 0; a < n; ++a)
      require(mul(a, inverse_[a]) == identity_ && mul(identity_, a) == a, ErrorKind::InvalidArgument,
              name_ + " fails the identity/inverse audit");
    if (gens_.empty() && n > 1) greedy_generators();
  }

  void greedy_generators() {
    std::vector<bool> in(order(), false);
    in[identity_] = true;
    std::size_t count = 1;
    for (std::size_t g = 0; g < order() && count < order(); ++g) {
      if (in[g]) continue;
      gens_.push_back(g);
      std::vector<std::size_t> frontier;
      for (std::size_t x = 0; x < order(); ++x)
        if (in[x]) frontier.push_back(x);
      for (std::size_t i = 0; i < frontier.size(); ++i) {
        for (std::size_t s : gens_) {
          const std::size_t y = mul(frontier[i], s);
          if (!in[y]) {
            in[y] = true;
            ++count;
            frontier.push_back(y);
          }
        }
      }
    }
  }

  std::string name_;
  GroupKind kind_ = GroupKind::Permutation;
  Compose compose_;
  FieldPtr matrix_field_;
  std::size_t matrix_n_ = 0;
  std::vector<GroupPtr> components_;
  std::vector<Word> elements_;
  std::unordered_map<Word, std::size_t, WordHash> index_;
  std::vector<std::uint32_t> table_;
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> gens_;
  std::size_t identity_ = 0;
};

// ---------------------------------------------------------------------------
// Standard constructions

namespace detail {

inline Word compose_perm(const Word& a, const Word& b) {
  // (a*b)(i) = a(b(i)): apply b first.
  Word out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[static_cast<std::size_t>(b[i])];
  return out;
}

inline Word identity_perm(std::size_t n) {
  Word w(n);
  std::iota(w.begin(), w.end(), 0);
  return w;
}

inline FiniteGroup::Compose matrix_composer(const FieldPtr& f, std::size_t n) {
  return [f, n](const Word& a, const Word& b) {
    const Field& F = *f;
    Word out(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Elt acc = 0;
        for (std::size_t k = 0; k < n; ++k)
          acc = F.add(acc, F.mul(static_cast<Elt>(a[i * n + k]), static_cast<Elt>(b[k * n + j])));
        out[i * n + j] = static_cast<int>(acc);
      }
    return out;
  };
}

inline Word identity_matrix_word(std::size_t n) {
  Word w(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) w[i * n + i] = 1;
  return w;
}

}  // namespace detail

/// Permutation from 1-based cycles, e.g. {{1,2},{3,4}} on n points.
inline Word perm_from_cycles(std::size_t n, const std::vector<std::vector<int>>& cycles) {
  Word w = detail::identity_perm(n);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      const int from = c[i] - 1, to = c[(i + 1) % c.size()] - 1;
      require(from >= 0 && static_cast<std::size_t>(from) < n && to >= 0 && static_cast<std::size_t>(to) < n,
              ErrorKind::InvalidArgument, "cycle point out of range");
      w[static_cast<std::size_t>(from)] = to;
    }
  }
  return w;
}

inline GroupPtr permutation_group(std::string name, std::size_t n, std::vector<Word> gens) {
  FiniteGroup::Spec s{std::move(name), GroupKind::Permutation, detail::identity_perm(n), std::move(gens),
                      detail::compose_perm, nullptr, 0, {}};
  return FiniteGroup::generate(std::move(s));
}

inline GroupPtr symmetric_group(std::size_t n) {
  require(n >= 2 && n <= 7, ErrorKind::SizeCapExceeded, "sym(n) supports 2 <= n <= 7");
  std::vector<int> cyc(n);
  std::iota(cyc.begin(), cyc.end(), 1);
  return permutation_group("sym(" + std::to_string(n) + ")", n, {perm_from_cycles(n, {{1, 2}}), perm_from_cycles(n, {cyc})});
}

inline GroupPtr alternating_group(std::size_t n) {
  require(n >= 3 && n <= 7, ErrorKind::SizeCapExceeded, "alt(n) supports 3 <= n <= 7");
  std::vector<Word> gens{perm_from_cycles(n, {{1, 2, 3}})};
  if (n > 3) {
    std::vector<int> cyc;
    for (std::size_t i = (n % 2 == 1) ? 1 : 2; i <= n; ++i) cyc.push_back(static_cast<int>(i));
    gens.push_back(perm_from_cycles(n, {cyc}));
  }
  return permutation_group("alt(" + std::to_string(n) + ")", n, std::move(gens));
}

inline GroupPtr cyclic_group(std::size_t n) {
  require(n >= 1 && n <= 5040, ErrorKind::SizeCapExceeded, "cyclic(n) order cap");
  if (n == 1) return permutation_group("cyclic(1)", 1, {});
  std::vector<int> cyc(n);
  std::iota(cyc.begin(), cyc.end(), 1);
  return permutation_group("cyclic(" + std::to_string(n) + ")", n, {perm_from_cycles(n, {cyc})});
}

/// Symmetries of the regular n-gon, order 2n.
inline GroupPtr dihedral_group(std::size_t n) {
  require(n >= 3 && n <= 1000, ErrorKind::SizeCapExceeded, "dihedral(n) supports 3 <= n <= 1000");
  std::vector<int> cyc(n);
  std::iota(cyc.begin(), cyc.end(), 1);
  std::vector<std::vector<int>> refl;
  for (std::size_t i = 2, j = n; i < j; ++i, --j) refl.push_back({static_cast<int>(i), static_cast<int>(j)});
  return permutation_group("dihedral(" + std::to_string(n) + ")", n, {perm_from_cycles(n, {cyc}), perm_from_cycles(n, refl)});
}

/// Matrix group generated by the given matrices over f.
inline GroupPtr matrix_group(std::string name, const FieldPtr& f, std::size_t n, const std::vector<Matrix>& gens) {
  std::vector<Word> ws;
  for (const auto& m : gens) {
    require(m.rows() == n && m.cols() == n && m.field() == f, ErrorKind::ShapeMismatch, "generator shape");
    ws.emplace_back(m.data().begin(), m.data().end());
  }
  FiniteGroup::Spec s{std::move(name), GroupKind::Matrix, detail::identity_matrix_word(n), std::move(ws),
                      detail::matrix_composer(f, n), f, n, {}};
  return FiniteGroup::generate(std::move(s));
}

/// Q_8 realized inside GL_2(F_3) by i = [[0,2],[1,0]], j = [[1,1],[1,2]].
inline GroupPtr quaternion8() {
  auto f = make_field(3, 1);
  return matrix_group("quaternion8", f, 2, {Matrix::from_ints(f, {{0, 2}, {1, 0}}), Matrix::from_ints(f, {{1, 1}, {1, 2}})});
}

/// All invertible n x n matrices over f.
inline GroupPtr general_linear_group(std::size_t n, const FieldPtr& f) {
  const std::uint32_t q = f->q();
  require((n == 2 && q <= 7) || (n == 3 && q == 2) || n == 1, ErrorKind::SizeCapExceeded,
          "gl(n,q) supports n = 2 with q <= 7 or n = 3 with q = 2");
  std::vector<Word> elems;
  std::uint64_t expected = 1;
  std::uint64_t qn = 1;
  for (std::size_t i = 0; i < n; ++i) qn *= q;
  for (std::uint64_t qi = 1, i = 0; i < n; ++i, qi *= q) expected *= qn - qi;
  Word w(n * n, 0);
  while (true) {
    Matrix m(f, n, n, std::vector<Elt>(w.begin(), w.end()));
    if (rank(m) == n) elems.push_back(w);
    std::size_t i = 0;
    while (i < w.size() && ++w[i] == static_cast<int>(q)) w[i++] = 0;
    if (i == w.size()) break;
  }
  require(elems.size() == expected, ErrorKind::InvalidArgument, "GL order mismatch");
  FiniteGroup::Spec s{"gl(" + std::to_string(n) + "," + std::to_string(f->p()) + "," + std::to_string(f->k()) + ")",
                      GroupKind::Matrix, detail::identity_matrix_word(n), {}, detail::matrix_composer(f, n), f, n, {}};
  return FiniteGroup::from_elements(std::move(s), std::move(elems));
}

/// Direct product; elements are tuples of component indices.
inline GroupPtr product_group(const std::vector<GroupPtr>& comps) {
  require(!comps.empty(), ErrorKind::InvalidArgument, "empty product");
  std::uint64_t total = 1;
  for (const auto& c : comps) {
    total *= c->order();
    require(total <= FiniteGroup::kElementCap, ErrorKind::SizeCapExceeded, "product order exceeds the element cap");
  }
  std::string name = "prod(";
  Word id;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    name += (i ? "," : "") + comps[i]->name();
    id.push_back(static_cast<int>(comps[i]->identity()));
  }
  name += ")";
  std::vector<Word> gens;
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (std::size_t s : comps[i]->generators()) {
      Word g = id;
      g[i] = static_cast<int>(s);
      gens.push_back(g);
    }
  auto compose = [comps](const Word& a, const Word& b) {
    Word out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      out[i] = static_cast<int>(comps[i]->mul(static_cast<std::size_t>(a[i]), static_cast<std::size_t>(b[i])));
    return out;
  };
  std::vector<Word> elems;
  elems.reserve(total);
  Word w(comps.size(), 0);
  while (true) {
    elems.push_back(w);
    std::size_t i = comps.size();
    while (i-- > 0) {
      if (++w[i] < static_cast<int>(comps[i]->order())) break;
      w[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  FiniteGroup::Spec s{name, GroupKind::Product, id, gens, compose, nullptr, 0, comps};
  return FiniteGroup::from_elements(std::move(s), std::move(elems));
}

// ---------------------------------------------------------------------------
// Subgroups

/// A subgroup with its own group view.  View element i corresponds to parent
/// element members[i] (both orders are lexicographic on representations).
struct Subgroup {
  GroupPtr parent;
  std::vector<std::size_t> members;
  GroupPtr group;
  std::vector<std::size_t> parent_to_member;  ///< parent index -> view index, or npos

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t order() const noexcept { return members.size(); }
  bool contains(std::size_t parent_idx) const noexcept { return parent_to_member[parent_idx] != npos; }
  std::size_t to_parent(std::size_t view_idx) const noexcept { return members[view_idx]; }
  std::size_t to_view(std::size_t parent_idx) const noexcept { return parent_to_member[parent_idx]; }
};

namespace detail {

inline Subgroup make_subgroup(const GroupPtr& g, std::vector<std::size_t> members, std::vector<std::size_t> gens,
                              const std::string& name) {
  std::sort(members.begin(), members.end());
  Subgroup h;
  h.parent = g;
  h.members = members;
  h.parent_to_member.assign(g->order(), Subgroup::npos);
  for (std::size_t i = 0; i < members.size(); ++i) h.parent_to_member[members[i]] = i;
  if (members.size() <= FiniteGroup::kTableCap) {
    for (std::size_t a : members)
      for (std::size_t b : members)
        require(h.contains(g->mul(a, b)), ErrorKind::InvalidArgument, "subgroup is not closed");
  }
  std::vector<Word> elems;
  for (std::size_t m : members) elems.push_back(g->element(m));
  std::vector<Word> gw;
  for (std::size_t s : gens) gw.push_back(g->element(s));
  FiniteGroup::Spec s{name, g->kind(), g->element(g->identity()), gw, g->composer(), g->matrix_field(), g->matrix_degree(),
                      g->components()};
  h.group = FiniteGroup::from_elements(std::move(s), std::move(elems));
  return h;
}

}  // namespace detail

/// BFS closure of the given parent elements.
inline Subgroup subgroup_from_generators(const GroupPtr& g, const std::vector<std::size_t>& gens, const std::string& name = "") {
  std::vector<bool> in(g->order(), false);
  std::vector<std::size_t> members{g->identity()};
  in[g->identity()] = true;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t s : gens) {
      const std::size_t y = g->mul(members[i], s);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  const std::string nm = name.empty() ? g->name() + ".sub" + std::to_string(members.size()) : name;
  return detail::make_subgroup(g, std::move(members), gens, nm);
}

/// Subgroup from an explicit member predicate (must be closed).
inline Subgroup subgroup_from_predicate(const GroupPtr& g, const std::function<bool(std::size_t)>& pred, const std::string& name) {
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < g->order(); ++i)
    if (pred(i)) members.push_back(i);
  require(!members.empty() && std::find(members.begin(), members.end(), g->identity()) != members.end(),
          ErrorKind::InvalidArgument, "subgroup must contain the identity");
  return detail::make_subgroup(g, std::move(members), {}, name);
}

inline Subgroup whole_group(const GroupPtr& g) {
  std::vector<std::size_t> all(g->order());
  std::iota(all.begin(), all.end(), 0);
  return detail::make_subgroup(g, std::move(all), g->generators(), g->name());
}

inline Subgroup trivial_subgroup(const GroupPtr& g) { return detail::make_subgroup(g, {g->identity()}, {}, g->name() + ".1"); }

/// Point stabilizer of the last n - m points in sym(n): S_m on {1..m}.
inline Subgroup young_subgroup(const GroupPtr& g, std::size_t m) {
  require(g->kind() == GroupKind::Permutation, ErrorKind::InvalidArgument, "young(m) needs a permutation group");
  const std::size_t n = g->element(0).size();
  require(m >= 1 && m <= n, ErrorKind::InvalidArgument, "young(m) out of range");
  return subgroup_from_predicate(
      g,
      [&](std::size_t i) {
        const Word& w = g->element(i);
        for (std::size_t p = m; p < n; ++p)
          if (w[p] != static_cast<int>(p)) return false;
        return true;
      },
      "young(" + std::to_string(m) + ")");
}

/// Upper unitriangular matrices in a matrix group.
inline Subgroup unitriangular_subgroup(const GroupPtr& g) {
  require(g->kind() == GroupKind::Matrix, ErrorKind::InvalidArgument, "unitriangular needs a matrix group");
  const std::size_t n = g->matrix_degree();
  return subgroup_from_predicate(
      g,
      [&](std::size_t i) {
        const Word& w = g->element(i);
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t c = 0; c <= r; ++c)
            if (w[r * n + c] != (r == c ? 1 : 0)) return false;
        return true;
      },
      "unitriangular");
}

/// Upper triangular (Borel) matrices in a matrix group.
inline Subgroup borel_subgroup(const GroupPtr& g) {
  require(g->kind() == GroupKind::Matrix, ErrorKind::InvalidArgument, "borel needs a matrix group");
  const std::size_t n = g->matrix_degree();
  return subgroup_from_predicate(
      g,
      [&](std::size_t i) {
        const Word& w = g->element(i);
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t c = 0; c < r; ++c)
            if (w[r * n + c] != 0) return false;
        return true;
      },
      "borel");
}

/// Diagonal matrices in a matrix group.
inline Subgroup torus_subgroup(const GroupPtr& g) {
  require(g->kind() == GroupKind::Matrix, ErrorKind::InvalidArgument, "torus needs a matrix group");
  const std::size_t n = g->matrix_degree();
  return subgroup_from_predicate(
      g,
      [&](std::size_t i) {
        const Word& w = g->element(i);
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t c = 0; c < n; ++c)
            if (r != c && w[r * n + c] != 0) return false;
        return true;
      },
      "torus");
}

/// Nonsplit Cartan subgroup {[[a, b z],[b, a]] : (a,b) != 0} of GL_2(F_q),
/// q odd, z the stored generator of F_q^* (a non-square); isomorphic to F_{q^2}^*.
inline Subgroup cartan_subgroup(const GroupPtr& g) {
  require(g->kind() == GroupKind::Matrix && g->matrix_degree() == 2, ErrorKind::InvalidArgument, "cartan needs GL_2(F_q)");
  const FieldPtr& f = g->matrix_field();
  require(f->p() != 2, ErrorKind::InvalidArgument, "cartan needs odd q");
  const Elt z = f->generator();
  return subgroup_from_predicate(
      g,
      [&](std::size_t i) {
        const Word& w = g->element(i);
        const Elt a = static_cast<Elt>(w[0]), bz = static_cast<Elt>(w[1]), b = static_cast<Elt>(w[2]), d = static_cast<Elt>(w[3]);
        return a == d && bz == f->mul(b, z);
      },
      "cartan");
}

/// {(x, ..., x)} inside a product of identical components.
inline Subgroup diagonal_subgroup(const GroupPtr& prod) {
  require(prod->kind() == GroupKind::Product, ErrorKind::InvalidArgument, "diag needs a product group");
  const auto& comps = prod->components();
  for (const auto& c : comps)
    require(c->elements() == comps[0]->elements(), ErrorKind::InvalidArgument, "diag needs identical components");
  std::vector<std::size_t> gens;
  for (std::size_t s : comps[0]->generators()) gens.push_back(prod->index_of(Word(comps.size(), static_cast<int>(s))));
  return subgroup_from_generators(prod, gens, "diag");
}

// ---------------------------------------------------------------------------
// Cosets and double cosets

/// Left cosets xH with lowest-index representatives.
struct LeftCosets {
  std::vector<std::size_t> reps;
  std::vector<std::size_t> coset_of;  ///< element -> coset position
};

inline LeftCosets left_cosets(const Subgroup& h) {
  const auto& g = h.parent;
  LeftCosets lc;
  lc.coset_of.assign(g->order(), Subgroup::npos);
  for (std::size_t x = 0; x < g->order(); ++x) {
    if (lc.coset_of[x] != Subgroup::npos) continue;
    const std::size_t pos = lc.reps.size();
    lc.reps.push_back(x);
    for (std::size_t m : h.members) lc.coset_of[g->mul(x, m)] = pos;
  }
  return lc;
}

/// Right cosets Hx; `highest` picks the largest index per coset instead.
inline std::vector<std::size_t> right_coset_reps(const Subgroup& h, bool highest = false) {
  const auto& g = h.parent;
  std::vector<std::size_t> owner(g->order(), Subgroup::npos);
  std::vector<std::size_t> reps;
  for (std::size_t x = 0; x < g->order(); ++x) {
    if (owner[x] != Subgroup::npos) continue;
    std::size_t best = x;
    for (std::size_t m : h.members) {
      const std::size_t y = g->mul(m, x);
      owner[y] = reps.size();
      best = highest ? std::max(best, y) : std::min(best, y);
    }
    reps.push_back(best);
  }
  return reps;
}

struct DoubleCosetDecomposition {
  std::vector<std::size_t> representatives;
  std::vector<std::size_t> membership;  ///< element -> representative position
  std::vector<std::size_t> sizes;
};

/// H \ G / K, representatives lowest-index.
inline DoubleCosetDecomposition double_cosets(const Subgroup& h, const Subgroup& k) {
  const auto& g = h.parent;
  require(k.parent == g, ErrorKind::GroupMismatch, "double cosets of subgroups of different groups");
  DoubleCosetDecomposition d;
  d.membership.assign(g->order(), Subgroup::npos);
  std::vector<std::size_t> hx;
  for (std::size_t x = 0; x < g->order(); ++x) {
    if (d.membership[x] != Subgroup::npos) continue;
    const std::size_t pos = d.representatives.size();
    d.representatives.push_back(x);
    std::size_t size = 0;
    hx.clear();
    for (std::size_t a : h.members) hx.push_back(g->mul(a, x));
    for (std::size_t y : hx)
      for (std::size_t b : k.members) {
        const std::size_t z = g->mul(y, b);
        if (d.membership[z] == Subgroup::npos) {
          d.membership[z] = pos;
          ++size;
        }
      }
    d.sizes.push_back(size);
  }
  return d;
}

/// sHs^{-1} ∩ H as a subgroup of the parent.
inline Subgroup conjugate_intersection(const Subgroup& h, std::size_t s) {
  const auto& g = h.parent;
  const std::size_t si = g->inv(s);
  return subgroup_from_predicate(
      g, [&](std::size_t x) { return h.contains(x) && h.contains(g->mul(g->mul(si, x), s)); }, "H_s");
}

// ---------------------------------------------------------------------------
// Anti-involutions

struct AntiInvolution {
  GroupPtr group;
  std::vector<std::size_t> images;

  std::size_t operator()(std::size_t x) const noexcept { return images[x]; }
};

/// Validates iota(gh) = iota(h) iota(g) for all pairs and iota∘iota = id.
inline AntiInvolution make_anti_involution(const GroupPtr& g, std::vector<std::size_t> images) {
  require(images.size() == g->order(), ErrorKind::InvalidArgument, "anti-involution size");
  for (std::size_t a = 0; a < g->order(); ++a) {
    require(images[images[a]] == a, ErrorKind::InvalidArgument, "map is not an involution");
    for (std::size_t b = 0; b < g->order(); ++b)
      require(images[g->mul(a, b)] == g->mul(images[b], images[a]), ErrorKind::InvalidArgument,
              "map is not an anti-homomorphism");
  }
  return {g, std::move(images)};
}

inline AntiInvolution inversion_map(const GroupPtr& g) {
  std::vector<std::size_t> im(g->order());
  for (std::size_t a = 0; a < g->order(); ++a) im[a] = g->inv(a);
  return make_anti_involution(g, std::move(im));
}

inline AntiInvolution transpose_map(const GroupPtr& g) {
  require(g->kind() == GroupKind::Matrix, ErrorKind::InvalidArgument, "transpose needs a matrix group");
  const std::size_t n = g->matrix_degree();
  std::vector<std::size_t> im(g->order());
  for (std::size_t a = 0; a < g->order(); ++a) {
    const Word& w = g->element(a);
    Word t(w.size());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) t[j * n + i] = w[i * n + j];
    im[a] = g->index_of(t);
  }
  return make_anti_involution(g, std::move(im));
}

/// True iff iota(HgH) = HgH for every double coset (H, K = the two sides).
inline bool check_anti_involution_preserves_double_cosets(const AntiInvolution& iota, const Subgroup& h, const Subgroup& k,
                                                          const DoubleCosetDecomposition& d) {
  require(iota.group == h.parent, ErrorKind::GroupMismatch, "anti-involution on a different group");
  for (std::size_t x : h.members)
    if (!k.contains(iota(x))) return false;
  for (std::size_t x : k.members)
    if (!h.contains(iota(x))) return false;
  for (std::size_t pos = 0; pos < d.representatives.size(); ++pos)
    if (d.membership[iota(d.representatives[pos])] != pos) return false;
  return true;
}

/// Associativity/identity/inverse audit: exhaustive up to 300 elements,
/// otherwise `samples` random triples.
inline bool audit_group(const FiniteGroup& g, std::uint64_t seed = 42, std::size_t samples = 10000) {
  const std::size_t n = g.order();
  for (std::size_t a = 0; a < n; ++a)
    if (g.mul(a, g.inv(a)) != g.identity() || g.mul(g.identity(), a) != a || g.mul(a, g.identity()) != a) return false;
  auto assoc = [&](std::size_t a, std::size_t b, std::size_t c) { return g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)); };
  if (n <= 300) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (!assoc(a, b, c)) return false;
    return true;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t i = 0; i < samples; ++i)
    if (!assoc(pick(rng), pick(rng), pick(rng))) return false;
  return true;
}

}  // namespace mfree
