#pragma once

// Binary inventory cache keyed by (group spec, field spec).
//
// Layout (little-endian u32 unless noted):
//   magic "MFIV", version, q, entry_bytes, key length, key bytes,
//   count, then per irreducible: dim, ngens, end_dim, regular multiplicity,
//   and ngens * dim * dim entries of entry_bytes each.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include "mfree/meataxe.hpp"

namespace mfree {

inline constexpr std::uint32_t kInventoryMagic = 0x5649464d;  // "MFIV"
inline constexpr std::uint32_t kInventoryVersion = 1;

namespace detail {

inline void put_u32(std::ostream& os, std::uint32_t v) {
  const unsigned char b[4] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8),
                              static_cast<unsigned char>(v >> 16), static_cast<unsigned char>(v >> 24)};
  os.write(reinterpret_cast<const char*>(b), 4);
}

inline bool get_u32(std::istream& is, std::uint32_t& v) {
  unsigned char b[4];
  if (!is.read(reinterpret_cast<char*>(b), 4)) return false;
  v = std::uint32_t{b[0]} | std::uint32_t{b[1]} << 8 | std::uint32_t{b[2]} << 16 | std::uint32_t{b[3]} << 24;
  return true;
}

inline std::uint32_t entry_bytes_for(std::uint32_t q) { return q <= 256 ? 1 : q <= 65536 ? 2 : 4; }

}  // namespace detail

inline std::string inventory_cache_key(const std::string& group_spec, const std::string& field_spec) {
  return group_spec + "|" + field_spec;
}

inline void save_inventory(const std::filesystem::path& path, const std::string& key, const Inventory& inv) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  require(static_cast<bool>(os), ErrorKind::InvalidArgument, "cannot write " + path.string());
  const std::uint32_t q = inv.field->q(), eb = detail::entry_bytes_for(q);
  detail::put_u32(os, kInventoryMagic);
  detail::put_u32(os, kInventoryVersion);
  detail::put_u32(os, q);
  detail::put_u32(os, eb);
  detail::put_u32(os, static_cast<std::uint32_t>(key.size()));
  os.write(key.data(), static_cast<std::streamsize>(key.size()));
  detail::put_u32(os, static_cast<std::uint32_t>(inv.size()));
  for (std::size_t i = 0; i < inv.size(); ++i) {
    const auto gens = inv.irreducibles[i].generator_images();
    const auto dim = static_cast<std::uint32_t>(inv.irreducibles[i].dim());
    detail::put_u32(os, dim);
    detail::put_u32(os, static_cast<std::uint32_t>(gens.size()));
    detail::put_u32(os, static_cast<std::uint32_t>(inv.end_dims.empty() ? 1 : inv.end_dims[i]));
    detail::put_u32(os, static_cast<std::uint32_t>(inv.regular_multiplicity[i]));
    for (const auto& m : gens)
      for (Elt e : m.data())
        for (std::uint32_t b = 0; b < eb; ++b) os.put(static_cast<char>((e >> (8 * b)) & 0xff));
  }
}

/// nullopt when the file is missing, stale (version/key/q mismatch) or
/// fails re-certification against the group.
inline std::optional<Inventory> load_inventory(const std::filesystem::path& path, const std::string& key, const GroupPtr& g,
                                               const FieldPtr& f) {
  std::ifstream is(path, std::ios::binary);
  if (!is) return std::nullopt;
  std::uint32_t magic = 0, version = 0, q = 0, eb = 0, klen = 0, count = 0;
  if (!detail::get_u32(is, magic) || magic != kInventoryMagic) return std::nullopt;
  if (!detail::get_u32(is, version) || version != kInventoryVersion) return std::nullopt;
  if (!detail::get_u32(is, q) || q != f->q()) return std::nullopt;
  if (!detail::get_u32(is, eb) || eb != detail::entry_bytes_for(q)) return std::nullopt;
  if (!detail::get_u32(is, klen) || klen > 4096) return std::nullopt;
  std::string stored(klen, '\0');
  if (!is.read(stored.data(), klen) || stored != key) return std::nullopt;
  if (!detail::get_u32(is, count)) return std::nullopt;
  Inventory inv;
  inv.group = g;
  inv.field = f;
  std::size_t total = 0;
  for (std::uint32_t i = 0; i < count; ++i) {
    std::uint32_t dim = 0, ngens = 0, end_dim = 0, mult = 0;
    if (!detail::get_u32(is, dim) || !detail::get_u32(is, ngens) || !detail::get_u32(is, end_dim) || !detail::get_u32(is, mult))
      return std::nullopt;
    if (ngens != g->generators().size() || dim == 0 || dim > 256) return std::nullopt;
    std::vector<Matrix> gens;
    for (std::uint32_t s = 0; s < ngens; ++s) {
      Matrix m(f, dim, dim);
      for (auto& e : m.data()) {
        Elt v = 0;
        for (std::uint32_t b = 0; b < eb; ++b) {
          const int c = is.get();
          if (c == EOF) return std::nullopt;
          v |= static_cast<Elt>(c) << (8 * b);
        }
        if (v >= q) return std::nullopt;
        e = v;
      }
      gens.push_back(std::move(m));
    }
    auto rho = Representation::from_generators(g, f, dim, gens);
    if (!check_generator_homomorphism(rho)) return std::nullopt;
    const auto mod = module_of(rho);
    if (hom_dim(mod, mod) != end_dim) return std::nullopt;
    total += std::size_t{dim} * mult;
    inv.irreducibles.push_back(std::move(rho));
    inv.regular_multiplicity.push_back(mult);
    inv.end_dims.push_back(end_dim);
  }
  if (total != g->order()) return std::nullopt;
  inv.certified = std::all_of(inv.end_dims.begin(), inv.end_dims.end(), [](std::size_t d) { return d == 1; });
  return inv;
}

}  // namespace mfree
