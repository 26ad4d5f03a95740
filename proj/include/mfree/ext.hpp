#pragma once

// First extension groups via 1-cocycles, and the search for an irreducible
// pi with two non-split extensions by distinct simple quotients tau_1, tau_2.

#include <optional>
#include <vector>

#include "mfree/homalg.hpp"
#include "mfree/meataxe.hpp"
#include "mfree/rep.hpp"

namespace mfree {

/// Z^1(G, Hom(tau, pi)) and B^1 as subspaces of the flattened cochain space
/// (element g occupies entries g*dp*dt .. (g+1)*dp*dt, row-major).
struct CocycleSpaces {
  Subspace cocycles;
  Subspace coboundaries;
  std::size_t ext_dim() const noexcept { return cocycles.dim() - coboundaries.dim(); }
};

/// Cocycle condition c(sh) = pi(s) c(h) + c(s) tau(h) for generators s and all h.
inline CocycleSpaces cocycle_spaces(const Representation& pi, const Representation& tau) {
  require(pi.group() == tau.group(), ErrorKind::GroupMismatch, "extension of representations of different groups");
  require(pi.field() == tau.field(), ErrorKind::CtxMismatch, "extension over different fields");
  const auto& g = *pi.group();
  const Field& F = *pi.field();
  const std::size_t dp = pi.dim(), dt = tau.dim(), blk = dp * dt, n = g.order();
  require(n * blk <= 4096, ErrorKind::SizeCapExceeded, "cochain space too large");
  const auto& gens = g.generators();
  Matrix sys(pi.field(), gens.size() * n * blk, n * blk);
  std::size_t row = 0;
  for (std::size_t s : gens) {
    const Matrix& ps = pi.image(s);
    for (std::size_t h = 0; h < n; ++h) {
      const Matrix& th = tau.image(h);
      const std::size_t sh = g.mul(s, h);
      for (std::size_t a = 0; a < dp; ++a)
        for (std::size_t b = 0; b < dt; ++b, ++row) {
          auto r = sys.row(row);
          r[sh * blk + a * dt + b] = F.add(r[sh * blk + a * dt + b], 1);
          for (std::size_t k = 0; k < dp; ++k)
            r[h * blk + k * dt + b] = F.sub(r[h * blk + k * dt + b], ps(a, k));
          for (std::size_t k = 0; k < dt; ++k)
            r[s * blk + a * dt + k] = F.sub(r[s * blk + a * dt + k], th(k, b));
        }
    }
  }
  CocycleSpaces out{kernel(sys), Subspace::zero(pi.field(), n * blk)};
  Matrix cob(pi.field(), blk, n * blk);
  for (std::size_t e = 0; e < blk; ++e) {
    Matrix x(pi.field(), dp, dt);
    x.data()[e] = 1;
    for (std::size_t gi = 0; gi < n; ++gi) {
      const Matrix c = pi.image(gi) * x - x * tau.image(gi);
      std::copy(c.data().begin(), c.data().end(), cob.row(e).begin() + static_cast<std::ptrdiff_t>(gi * blk));
    }
  }
  out.coboundaries = Subspace::span(cob);
  return out;
}

inline std::size_t ext1_dim(const Representation& pi, const Representation& tau) { return cocycle_spaces(pi, tau).ext_dim(); }

/// sigma(g) = [[pi(g), c(g)], [0, tau(g)]] for a cocycle c (pi is the submodule).
inline Representation extension_from_cocycle(const Representation& pi, const Representation& tau, std::span<const Elt> c) {
  const auto& g = pi.group();
  const std::size_t dp = pi.dim(), dt = tau.dim(), blk = dp * dt;
  std::vector<Matrix> images;
  for (std::size_t gi = 0; gi < g->order(); ++gi) {
    Matrix m(pi.field(), dp + dt, dp + dt);
    m.set_block(0, 0, pi.image(gi));
    m.set_block(dp, dp, tau.image(gi));
    for (std::size_t a = 0; a < dp; ++a)
      for (std::size_t b = 0; b < dt; ++b) m(a, dp + b) = c[gi * blk + a * dt + b];
    images.push_back(std::move(m));
  }
  return Representation(g, pi.field(), std::move(images));
}

/// Some non-split extension 0 -> pi -> sigma -> tau -> 0, if Ext^1(tau, pi) != 0.
inline std::optional<Representation> nonsplit_extension(const Representation& pi, const Representation& tau) {
  const auto cs = cocycle_spaces(pi, tau);
  for (std::size_t r = 0; r < cs.cocycles.dim(); ++r) {
    const auto c = cs.cocycles.basis().row(r);
    if (!cs.coboundaries.contains(c)) return extension_from_cocycle(pi, tau, c);
  }
  return std::nullopt;
}

struct NonExampleTwo {
  std::size_t pi_index = 0, tau1_index = 0, tau2_index = 0;  ///< inventory positions
  Representation sigma1, sigma2, rho;                        ///< rho = sigma1 ⊕ sigma2
};

/// Scan the inventory for pi with two distinct tau_i != pi and Ext^1(tau_i, pi) != 0.
inline std::optional<NonExampleTwo> find_non_example_two(const Inventory& inv) {
  require(inv.certified, ErrorKind::UncertifiedInventory, "inventory is not certified");
  const std::size_t n = inv.size();
  for (std::size_t p = 0; p < n; ++p) {
    std::vector<std::pair<std::size_t, Representation>> found;
    for (std::size_t t = 0; t < n && found.size() < 2; ++t) {
      if (t == p) continue;
      if (inv.irreducibles[p].dim() * inv.irreducibles[t].dim() * inv.group->order() > 4096) continue;
      if (auto s = nonsplit_extension(inv.irreducibles[p], inv.irreducibles[t])) found.emplace_back(t, std::move(*s));
    }
    if (found.size() == 2) {
      NonExampleTwo ne{p, found[0].first, found[1].first, found[0].second, found[1].second,
                       direct_sum(found[0].second, found[1].second)};
      return ne;
    }
  }
  return std::nullopt;
}

}  // namespace mfree
