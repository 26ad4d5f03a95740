#pragma once

// Exact arithmetic in GF(p^k).
//
// Elements are encoded as integers in [0, q): the coefficient vector
// (c_0, ..., c_{k-1}) in the power basis of the defining polynomial is read
// as the base-p number c_0 + c_1 p + ... + c_{k-1} p^{k-1}.  Prime-field
// elements therefore have their natural integer codes.

#include <cstdint>
#include <map>
#include <mutex>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "mfree/error.hpp"

namespace mfree {

using Elt = std::uint32_t;

namespace detail {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// Dense polynomials over GF(p), lowest degree first, no trailing zeros.
struct PrimePoly {
  std::uint32_t p;

  std::vector<std::uint32_t> trim(std::vector<std::uint32_t> a) const {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
  }

  std::vector<std::uint32_t> mod(std::vector<std::uint32_t> a, const std::vector<std::uint32_t>& m) const {
    a = trim(std::move(a));
    const std::size_t dm = m.size() - 1;
    const std::uint32_t lead_inv = inv(m.back());
    while (a.size() >= m.size()) {
      const std::uint32_t f = static_cast<std::uint32_t>((std::uint64_t{a.back()} * lead_inv) % p);
      const std::size_t shift = a.size() - 1 - dm;
      for (std::size_t i = 0; i <= dm; ++i) {
        a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + std::uint64_t{p - f} * m[i]) % p);
      }
      a = trim(std::move(a));
    }
    return a;
  }

  std::uint32_t inv(std::uint32_t a) const {
    std::uint64_t r = 1, b = a, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
  }
};

}  // namespace detail

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// An immutable finite field context.  Shared by every matrix and element
/// built over it; field identity is pointer identity.
class Field {
 public:
  static constexpr std::uint64_t kMaxSize = std::uint64_t{1} << 20;
  static constexpr std::uint64_t kTableSize = std::uint64_t{1} << 16;

  static FieldPtr make(std::uint32_t p, std::uint32_t k) {
    require(detail::is_prime(p), ErrorKind::NonPrime, std::to_string(p) + " is not prime");
    require(k >= 1, ErrorKind::InvalidArgument, "extension degree must be positive");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
      q *= p;
      require(q <= kMaxSize, ErrorKind::SizeCapExceeded,
              "field size " + std::to_string(p) + "^" + std::to_string(k) + " exceeds 2^20");
    }
    return std::shared_ptr<const Field>(new Field(p, k, static_cast<std::uint32_t>(q)));
  }

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t k() const noexcept { return k_; }
  std::uint32_t q() const noexcept { return q_; }
  bool is_prime_field() const noexcept { return k_ == 1; }

  /// Monic defining polynomial, coefficients c_0..c_k.
  const std::vector<std::uint32_t>& defining_poly() const noexcept { return poly_; }
  Elt generator() const noexcept { return generator_; }

  std::string spec() const { return "gf(" + std::to_string(p_) + "," + std::to_string(k_) + ")"; }

  Elt zero() const noexcept { return 0; }
  Elt one() const noexcept { return 1; }
  Elt from_int(std::int64_t n) const noexcept {
    const std::int64_t r = n % static_cast<std::int64_t>(p_);
    return static_cast<Elt>(r < 0 ? r + p_ : r);
  }

  Elt add(Elt a, Elt b) const noexcept {
    if (k_ == 1) {
      const Elt s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    if (p_ == 2) return a ^ b;
    if (!add_table_.empty()) return add_table_[std::size_t{a} * q_ + b];
    return add_digits(a, b);
  }

  Elt neg(Elt a) const noexcept {
    if (k_ == 1) return a == 0 ? 0 : p_ - a;
    if (p_ == 2) return a;
    if (!neg_table_.empty()) return neg_table_[a];
    Elt out = 0, place = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
      const Elt d = a % p_;
      a /= p_;
      out += (d == 0 ? 0 : p_ - d) * place;
      place *= p_;
    }
    return out;
  }

  Elt sub(Elt a, Elt b) const noexcept { return add(a, neg(b)); }

  Elt mul(Elt a, Elt b) const noexcept {
    if (a == 0 || b == 0) return 0;
    if (k_ == 1) return static_cast<Elt>((std::uint64_t{a} * b) % p_);
    if (!log_.empty()) return exp_[log_[a] + log_[b]];
    return mul_poly(a, b);
  }

  Elt inv(Elt a) const {
    if (a == 0) fail(ErrorKind::DivisionByZero, "inverse of zero in " + spec());
    if (!inv_.empty()) return inv_[a];
    if (!log_.empty()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    return pow(a, q_ - 2);
  }

  Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }

  Elt pow(Elt a, std::uint64_t e) const noexcept {
    Elt r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  /// Multiplicative order of a nonzero element.
  std::uint64_t order(Elt a) const {
    require(a != 0, ErrorKind::DivisionByZero, "order of zero");
    std::uint64_t n = q_ - 1;
    for (std::uint64_t r : detail::prime_divisors(q_ - 1)) {
      while (n % r == 0 && pow(a, n / r) == 1) n /= r;
    }
    return n;
  }

  /// a + a^p + ... + a^{p^{k-1}}; lands in the prime subfield.
  Elt trace_to_prime(Elt a) const noexcept {
    Elt acc = 0, cur = a;
    for (std::uint32_t i = 0; i < k_; ++i) {
      acc = add(acc, cur);
      cur = pow(cur, p_);
    }
    return acc;
  }

  /// Element of exact multiplicative order n.
  Elt root_of_unity(std::uint64_t n) const {
    require(n >= 1 && (q_ - 1) % n == 0, ErrorKind::NoSuchRoot,
            spec() + " has no element of order " + std::to_string(n) + "; enlarge the extension degree");
    return pow(generator_, (q_ - 1) / n);
  }

  std::vector<std::uint32_t> digits(Elt a) const {
    std::vector<std::uint32_t> out(k_);
    for (std::uint32_t i = 0; i < k_; ++i) {
      out[i] = a % p_;
      a /= p_;
    }
    return out;
  }

  Elt from_digits(const std::vector<std::uint32_t>& d) const {
    Elt out = 0, place = 1;
    for (std::size_t i = 0; i < d.size() && i < k_; ++i) {
      out += (d[i] % p_) * place;
      place *= p_;
    }
    return out;
  }

  /// Human-readable form: integers for prime fields, polynomials in x otherwise.
  std::string format(Elt a) const {
    if (k_ == 1) return std::to_string(a);
    if (a == 0) return "0";
    const auto d = digits(a);
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = d.size(); i-- > 0;) {
      if (d[i] == 0) continue;
      if (!first) os << "+";
      first = false;
      if (i == 0 || d[i] != 1) os << d[i];
      if (i >= 1) os << "x";
      if (i >= 2) os << "^" << i;
    }
    return os.str();
  }

 private:
  Field(std::uint32_t p, std::uint32_t k, std::uint32_t q) : p_(p), k_(k), q_(q) {
    choose_defining_poly();
    if (k_ > 1 && p_ != 2 && std::uint64_t{q_} <= 1024) {
      add_table_.resize(std::size_t{q_} * q_);
      neg_table_.resize(q_);
      for (Elt a = 0; a < q_; ++a) {
        for (Elt b = 0; b < q_; ++b) add_table_[std::size_t{a} * q_ + b] = static_cast<std::uint16_t>(add_digits(a, b));
      }
      for (Elt a = 0; a < q_; ++a) {
        for (Elt b = 0; b < q_; ++b)
          if (add_digits(a, b) == 0) neg_table_[a] = static_cast<std::uint16_t>(b);
      }
    }
    find_generator();
    if (k_ > 1 && q_ <= kTableSize) {
      exp_.assign(2 * std::size_t{q_}, 0);
      log_.assign(q_, 0);
      Elt cur = 1;
      for (std::uint32_t i = 0; i + 1 < q_; ++i) {
        exp_[i] = cur;
        log_[cur] = i;
        cur = mul_poly(cur, generator_);
      }
      for (std::uint32_t i = q_ - 1; i < 2 * q_; ++i) exp_[i] = exp_[i - (q_ - 1)];
    }
    if (k_ == 1 && q_ <= kTableSize) {
      inv_.assign(q_, 0);
      for (Elt a = 1; a < q_; ++a) inv_[a] = pow(a, q_ - 2);
    }
  }

  Elt add_digits(Elt a, Elt b) const noexcept {
    Elt out = 0, place = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
      out += ((a % p_ + b % p_) % p_) * place;
      a /= p_;
      b /= p_;
      place *= p_;
    }
    return out;
  }

  Elt mul_poly(Elt a, Elt b) const noexcept {
    const auto da = digits(a), db = digits(b);
    std::vector<std::uint32_t> prod(2 * k_ - 1, 0);
    for (std::uint32_t i = 0; i < k_; ++i) {
      if (da[i] == 0) continue;
      for (std::uint32_t j = 0; j < k_; ++j)
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{da[i]} * db[j]) % p_);
    }
    const detail::PrimePoly pp{p_};
    auto r = pp.mod(std::move(prod), poly_);
    r.resize(k_, 0);
    return from_digits(r);
  }

  // Lowest monic irreducible of degree k, ordering candidates by their
  // coefficient vectors read from x^{k-1} down to x^0.
  void choose_defining_poly() {
    if (k_ == 1) {
      poly_ = {0, 1};
      return;
    }
    const detail::PrimePoly pp{p_};
    for (std::uint64_t n = 0; n < q_; ++n) {
      std::vector<std::uint32_t> cand(k_ + 1, 0);
      cand[k_] = 1;
      std::uint64_t m = n;
      for (std::uint32_t i = k_; i-- > 0;) {
        cand[i] = static_cast<std::uint32_t>(m % p_);
        m /= p_;
      }
      if (is_irreducible(cand, pp)) {
        poly_ = cand;
        return;
      }
    }
    fail(ErrorKind::InvalidArgument, "no irreducible polynomial found");
  }

  // Trial division by every monic polynomial of degree 1..k/2.
  bool is_irreducible(const std::vector<std::uint32_t>& f, const detail::PrimePoly& pp) const {
    for (std::uint32_t d = 1; d <= k_ / 2; ++d) {
      std::uint64_t count = 1;
      for (std::uint32_t i = 0; i < d; ++i) count *= p_;
      for (std::uint64_t n = 0; n < count; ++n) {
        std::vector<std::uint32_t> g(d + 1, 0);
        g[d] = 1;
        std::uint64_t m = n;
        for (std::uint32_t i = 0; i < d; ++i) {
          g[i] = static_cast<std::uint32_t>(m % p_);
          m /= p_;
        }
        if (pp.mod(f, g).empty()) return false;
      }
    }
    return true;
  }

  void find_generator() {
    if (q_ == 2) {
      generator_ = 1;
      return;
    }
    const auto primes = detail::prime_divisors(q_ - 1);
    for (Elt g = 1; g < q_; ++g) {
      bool ok = true;
      for (std::uint64_t r : primes) {
        if (pow_slow(g, (q_ - 1) / r) == 1) {
          ok = false;
          break;
        }
      }
      if (ok) {
        generator_ = g;
        return;
      }
    }
    fail(ErrorKind::InvalidArgument, "no multiplicative generator found");
  }

  Elt pow_slow(Elt a, std::uint64_t e) const noexcept {
    Elt r = 1;
    while (e) {
      if (e & 1) r = k_ == 1 ? static_cast<Elt>(std::uint64_t{r} * a % p_) : mul_poly(r, a);
      a = k_ == 1 ? static_cast<Elt>(std::uint64_t{a} * a % p_) : mul_poly(a, a);
      e >>= 1;
    }
    return r;
  }

  std::uint32_t p_, k_, q_;
  std::vector<std::uint32_t> poly_;
  Elt generator_ = 1;
  std::vector<std::uint16_t> add_table_;
  std::vector<std::uint16_t> neg_table_;
  std::vector<Elt> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<Elt> inv_;  // prime fields below the table size
};

/// Interned: equal (p, k) give the same context, so spec strings naming the
/// same field build interoperable objects.  Field::make always builds a fresh one.
inline FieldPtr make_field(std::uint32_t p, std::uint32_t k) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, FieldPtr> interned;
  std::lock_guard<std::mutex> lock(mu);
  auto it = interned.find({p, k});
  if (it != interned.end()) return it->second;
  auto f = Field::make(p, k);
  interned.emplace(std::make_pair(p, k), f);
  return f;
}

/// A scalar paired with its field.  Matrices store raw codes; this type is
/// the checked, operator-friendly surface.
class FieldElement {
 public:
  FieldElement(FieldPtr ctx, Elt code) : ctx_(std::move(ctx)), code_(code) {
    require(code_ < ctx_->q(), ErrorKind::InvalidArgument, "element code out of range");
  }

  const FieldPtr& ctx() const noexcept { return ctx_; }
  Elt code() const noexcept { return code_; }
  bool is_zero() const noexcept { return code_ == 0; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    check(a, b);
    return {a.ctx_, a.ctx_->add(a.code_, b.code_)};
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    check(a, b);
    return {a.ctx_, a.ctx_->sub(a.code_, b.code_)};
  }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    check(a, b);
    return {a.ctx_, a.ctx_->mul(a.code_, b.code_)};
  }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    check(a, b);
    return {a.ctx_, a.ctx_->div(a.code_, b.code_)};
  }
  FieldElement operator-() const { return {ctx_, ctx_->neg(code_)}; }
  FieldElement inv() const { return {ctx_, ctx_->inv(code_)}; }
  FieldElement pow(std::uint64_t e) const { return {ctx_, ctx_->pow(code_, e)}; }
  FieldElement trace_to_prime() const { return {ctx_, ctx_->trace_to_prime(code_)}; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.ctx_ == b.ctx_ && a.code_ == b.code_;
  }

  std::string str() const { return ctx_->format(code_); }

 private:
  static void check(const FieldElement& a, const FieldElement& b) {
    if (a.ctx_ != b.ctx_) fail(ErrorKind::CtxMismatch, "elements of " + a.ctx_->spec() + " and " + b.ctx_->spec());
  }

  FieldPtr ctx_;
  Elt code_;
};

inline FieldElement root_of_unity(const FieldPtr& ctx, std::uint64_t n) { return {ctx, ctx->root_of_unity(n)}; }

}  // namespace mfree
