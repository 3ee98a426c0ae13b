#pragma once

// GF(q) and GF(q^v) arithmetic in the discrete-log view. Elements of the
// extension live as exponents of a fixed primitive root g (a root of the
// chosen modulus); addition goes through a precomputed Zech table, so that
// g^i + g^j = g^(i + zech(j-i)). Coefficient vectors exist only transiently,
// for modulus verification and for subspace span evaluation.

#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "qdesign/errors.hpp"

namespace qdesign {

inline constexpr uint64_t kMaxOrder = uint64_t(1) << 26;  // exponent-count guard
inline constexpr uint32_t kZechZero = UINT32_MAX;         // g^i + 1 == 0
inline constexpr int64_t kZeroRep = -1;                   // FieldElement ZERO

// Arithmetic on the coefficient field GF(q), q = p^e. Element "codes" are
// 0 for zero and 1+i for g_base^i, backed by dense q x q tables.
struct BaseField {
  uint64_t p = 0;
  int e = 1;
  uint64_t q = 0;
  std::vector<uint32_t> add_t, mul_t;  // q*q, row-major
  std::vector<uint32_t> neg_t;
  std::vector<uint32_t> exp_to_code;  // exponent i -> code of g_base^i

  uint32_t add(uint32_t a, uint32_t b) const { return add_t[a * q + b]; }
  uint32_t mul(uint32_t a, uint32_t b) const { return mul_t[a * q + b]; }
  uint32_t neg(uint32_t a) const { return neg_t[a]; }
  uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }
  uint32_t one() const { return exp_to_code[0]; }

  uint32_t code_from_exponent_or_zero(int64_t x) const {
    if (x == kZeroRep) return 0;
    if (x < 0) throw error(errc::bad_params, "coefficient exponent out of range");
    return exp_to_code[uint64_t(x) % (q - 1)];
  }
};

struct FieldContext;
using FieldPtr = std::shared_ptr<const FieldContext>;

struct FieldContext {
  uint64_t p = 0;  // characteristic
  int e = 1;       // q = p^e
  uint64_t q = 0;
  int v = 0;  // extension degree over GF(q)
  std::vector<uint32_t> modulus;       // v+1 base codes, monic
  std::vector<int64_t> modulus_input;  // as given (exponent-or-zero)
  uint64_t order = 0;                  // q^v - 1
  int64_t generator_exponent = 1;      // canonical root-of-modulus generator
  BaseField base;
  FieldPtr base_ctx;  // the GF(p^e) context when e > 1

  // exp_[i] = packed coefficient vector of g^i (base-q digits, little-endian);
  // log_[packed] = exponent, or UINT32_MAX off the group.
  std::vector<uint64_t> exp_;
  std::vector<uint32_t> log_;
  std::vector<uint32_t> zech;  // zech[i]: g^zech(i) = g^i + 1; kZechZero sentinel

  uint64_t singer_order() const { return order / (q - 1); }  // [v]_q

  uint64_t vec_add(uint64_t a, uint64_t b) const {
    uint64_t out = 0, mult = 1;
    for (int j = 0; j < v; ++j) {
      out += uint64_t(base.add(a % q, b % q)) * mult;
      a /= q;
      b /= q;
      mult *= q;
    }
    return out;
  }
  uint64_t vec_scale(uint32_t c, uint64_t a) const {
    uint64_t out = 0, mult = 1;
    for (int j = 0; j < v; ++j) {
      out += uint64_t(base.mul(c, a % q)) * mult;
      a /= q;
      mult *= q;
    }
    return out;
  }
};

struct FieldElement {
  int64_t rep = kZeroRep;  // exponent, or kZeroRep
  const FieldContext* ctx = nullptr;

  bool is_zero() const { return rep == kZeroRep; }
  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.ctx == b.ctx && a.rep == b.rep;
  }
};

namespace detail {

// Dense polynomial arithmetic over a BaseField (code vectors, little-endian).
using Poly = std::vector<uint32_t>;

inline Poly poly_trim(Poly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

inline Poly poly_mod(const BaseField& F, Poly a, const Poly& m) {
  // m monic
  int dm = int(m.size()) - 1;
  a = poly_trim(std::move(a));
  while (int(a.size()) - 1 >= dm) {
    uint32_t lead = a.back();
    int shift = int(a.size()) - 1 - dm;
    if (lead != 0)
      for (int j = 0; j <= dm; ++j) a[j + shift] = F.sub(a[j + shift], F.mul(lead, m[j]));
    a.pop_back();
    a = poly_trim(std::move(a));
  }
  return a;
}

inline Poly poly_mulmod(const BaseField& F, const Poly& a, const Poly& b, const Poly& m) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
  }
  return poly_mod(F, std::move(c), m);
}

inline Poly poly_powmod(const BaseField& F, Poly base, uint64_t n, const Poly& m) {
  Poly r = {F.one()};
  base = poly_mod(F, std::move(base), m);
  while (n) {
    if (n & 1) r = poly_mulmod(F, r, base, m);
    base = poly_mulmod(F, base, base, m);
    n >>= 1;
  }
  return r;
}

inline Poly poly_diff(const BaseField& F, Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] = F.sub(a[i], b[i]);
  return poly_trim(std::move(a));
}

inline uint32_t code_inv(const BaseField& F, uint32_t a) {
  for (uint64_t c = 1; c < F.q; ++c)
    if (F.mul(a, uint32_t(c)) == F.one()) return uint32_t(c);
  throw error(errc::divide_by_zero, "no inverse");
}

inline Poly poly_gcd(const BaseField& F, Poly a, Poly b) {
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  while (!b.empty()) {
    Poly bm = b;  // make monic for poly_mod
    if (bm.back() != F.one()) {
      uint32_t inv = code_inv(F, bm.back());
      for (auto& c : bm) c = F.mul(c, inv);
    }
    Poly r = poly_mod(F, a, bm);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline bool is_irreducible(const BaseField& F, const Poly& m) {
  int v = int(m.size()) - 1;
  if (v <= 0) return false;
  if (v == 1) return true;
  // Rabin: x^{q^v} == x (mod m), and gcd(x^{q^{v/r}} - x, m) constant for prime r | v.
  Poly x = {0, F.one()};
  auto frob_iter = [&](int k) {  // x^{q^k} mod m
    Poly t = x;
    for (int i = 0; i < k; ++i) t = poly_powmod(F, t, F.q, m);
    return t;
  };
  if (!poly_diff(F, frob_iter(v), x).empty()) return false;
  int n = v;
  std::vector<int> primes;
  for (int r = 2; r * r <= n; ++r)
    if (n % r == 0) {
      primes.push_back(r);
      while (n % r == 0) n /= r;
    }
  if (n > 1) primes.push_back(n);
  for (int r : primes) {
    Poly g = poly_gcd(F, poly_diff(F, frob_iter(v / r), x), m);
    if (poly_trim(std::move(g)).size() > 1) return false;
  }
  return true;
}

inline BaseField prime_base(uint64_t p) {
  BaseField F;
  F.p = p;
  F.e = 1;
  F.q = p;
  F.add_t.resize(p * p);
  F.mul_t.resize(p * p);
  F.neg_t.resize(p);
  // codes are plain residues mod p
  for (uint64_t a = 0; a < p; ++a) {
    F.neg_t[a] = uint32_t((p - a) % p);
    for (uint64_t b = 0; b < p; ++b) {
      F.add_t[a * p + b] = uint32_t((a + b) % p);
      F.mul_t[a * p + b] = uint32_t(a * b % p);
    }
  }
  // smallest primitive root
  uint64_t g = 0;
  for (uint64_t c = 1; c < p && !g; ++c) {
    uint64_t x = 1;
    bool prim = true;
    for (uint64_t i = 1; i < p - 1; ++i) {
      x = x * c % p;
      if (x == 1) {
        prim = false;
        break;
      }
    }
    if (prim && p > 2) g = c;
    if (p == 2) g = 1;
  }
  F.exp_to_code.resize(p > 1 ? p - 1 : 0);
  uint64_t x = 1;
  for (uint64_t i = 0; i + 1 < p; ++i) {
    F.exp_to_code[i] = uint32_t(x);
    x = x * g % p;
  }
  return F;
}

inline BaseField base_from_context(const FieldPtr& ctx) {
  BaseField F;
  F.p = ctx->p;
  F.e = ctx->v;  // ctx is GF(p^e) built over GF(p)
  F.q = ctx->order + 1;
  uint64_t q = F.q;
  F.add_t.resize(q * q);
  F.mul_t.resize(q * q);
  F.neg_t.resize(q);
  // code 0 = zero, code 1+i = g^i; arithmetic via the context's exp/log tables
  auto code_vec = [&](uint32_t c) -> uint64_t { return c == 0 ? 0 : ctx->exp_[c - 1]; };
  auto vec_code = [&](uint64_t vec) -> uint32_t {
    if (vec == 0) return 0;
    return ctx->log_[vec] + 1;
  };
  for (uint64_t a = 0; a < q; ++a) {
    for (uint64_t b = 0; b < q; ++b) {
      F.add_t[a * q + b] = vec_code(ctx->vec_add(code_vec(uint32_t(a)), code_vec(uint32_t(b))));
      if (a == 0 || b == 0)
        F.mul_t[a * q + b] = 0;
      else
        F.mul_t[a * q + b] = uint32_t((a - 1 + b - 1) % (q - 1)) + 1;
    }
  }
  for (uint64_t a = 0; a < q; ++a)
    for (uint64_t b = 0; b < q; ++b)
      if (F.add_t[a * q + b] == 0) F.neg_t[a] = uint32_t(b);
  F.exp_to_code.resize(q - 1);
  for (uint64_t i = 0; i + 1 < q; ++i) F.exp_to_code[i] = uint32_t(i) + 1;
  return F;
}

}  // namespace detail

// Builds GF((p^e)^v) from a monic modulus of degree v over GF(p^e). Modulus
// coefficients are little-endian exponent-or-zero values in the coefficient
// field (-1 = zero; for a prime base the exponents refer to the smallest
// primitive root mod p). Throws NotIrreducible / NotPrimitive / TooLarge.
inline FieldPtr build_field(uint64_t p, int e, int v, const std::vector<int64_t>& modulus);

namespace detail {

inline std::vector<int64_t> default_base_modulus(uint64_t p, int e) {
  // first (lexicographic in value coefficients) monic primitive polynomial
  std::vector<uint64_t> c(e, 0);
  BaseField F = prime_base(p);
  auto value_to_expz = [&](uint64_t val) -> int64_t {
    if (val == 0) return kZeroRep;
    for (uint64_t i = 0; i + 1 < p; ++i)
      if (F.exp_to_code[i] == val) return int64_t(i);
    throw error(errc::bad_params, "value out of range");
  };
  while (true) {
    std::vector<int64_t> m(e + 1);
    for (int i = 0; i < e; ++i) m[i] = value_to_expz(c[i]);
    m[e] = 0;  // leading 1
    try {
      build_field(p, 1, e, m);
      return m;
    } catch (const error&) {
    }
    int i = 0;
    while (i < e && ++c[i] == p) c[i++] = 0;
    if (i == e) throw error(errc::bad_params, "no primitive polynomial found");
  }
}

}  // namespace detail

inline FieldPtr build_field(uint64_t p, int e, int v, const std::vector<int64_t>& modulus) {
  if (e < 1 || v < 1 || p < 2) throw error(errc::bad_params, "bad field parameters");
  auto ctx = std::make_shared<FieldContext>();
  ctx->p = p;
  ctx->e = e;
  ctx->v = v;
  ctx->modulus_input = modulus;
  if (e == 1) {
    ctx->base = detail::prime_base(p);
  } else {
    ctx->base_ctx = build_field(p, 1, e, detail::default_base_modulus(p, e));
    ctx->base = detail::base_from_context(ctx->base_ctx);
  }
  const BaseField& F = ctx->base;
  ctx->q = F.q;
  if (int(modulus.size()) != v + 1) throw error(errc::bad_params, "modulus degree mismatch");
  ctx->modulus.resize(v + 1);
  for (int i = 0; i <= v; ++i) ctx->modulus[i] = F.code_from_exponent_or_zero(modulus[i]);
  if (ctx->modulus[v] != F.one()) throw error(errc::bad_params, "modulus not monic");

  // size guard
  unsigned __int128 size128 = 1;
  for (int i = 0; i < v; ++i) {
    size128 *= ctx->q;
    if (size128 - 1 > kMaxOrder) throw error(errc::too_large, "field exceeds table guard");
  }
  uint64_t size = uint64_t(size128);
  ctx->order = size - 1;

  detail::Poly m(ctx->modulus.begin(), ctx->modulus.end());
  if (!detail::is_irreducible(F, m))
    throw error(errc::not_irreducible, "modulus is reducible");

  // walk powers of the root x; any early repeat means x is not primitive
  ctx->exp_.assign(ctx->order, 0);
  ctx->log_.assign(size, UINT32_MAX);
  std::vector<uint32_t> cur(v, 0);
  cur[0] = F.one();
  std::vector<uint32_t> negm(v);
  for (int j = 0; j < v; ++j) negm[j] = F.neg(ctx->modulus[j]);
  for (uint64_t i = 0; i < ctx->order; ++i) {
    uint64_t packed = 0, mult = 1;
    for (int j = 0; j < v; ++j) {
      packed += uint64_t(cur[j]) * mult;
      mult *= ctx->q;
    }
    if (ctx->log_[packed] != UINT32_MAX)
      throw error(errc::not_primitive, "root of modulus is not primitive");
    ctx->log_[packed] = uint32_t(i);
    ctx->exp_[i] = packed;
    uint32_t carry = cur[v - 1];
    for (int j = v - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    if (carry != 0)
      for (int j = 0; j < v; ++j) cur[j] = F.add(cur[j], F.mul(carry, negm[j]));
  }
  {  // the walk must close: x^order == 1
    uint64_t packed = 0, mult = 1;
    for (int j = 0; j < v; ++j) {
      packed += uint64_t(cur[j]) * mult;
      mult *= ctx->q;
    }
    if (ctx->order > 0 && packed != ctx->exp_[0])
      throw error(errc::not_primitive, "root order does not divide group order");
  }

  ctx->zech.assign(ctx->order, kZechZero);
  uint64_t one_packed = F.one();
  for (uint64_t i = 0; i < ctx->order; ++i) {
    uint64_t s = ctx->vec_add(ctx->exp_[i], one_packed);
    ctx->zech[i] = (s == 0) ? kZechZero : ctx->log_[s];
  }
  return ctx;
}

// Convenience for prime coefficient fields: turn natural coefficient values
// (mod p) into the exponent-or-zero interchange form.
inline std::vector<int64_t> modulus_from_values(uint64_t p, const std::vector<uint64_t>& values) {
  BaseField F = detail::prime_base(p);
  std::vector<int64_t> out(values.size());
  for (size_t i = 0; i < values.size(); ++i) {
    uint64_t val = values[i] % p;
    if (val == 0) {
      out[i] = kZeroRep;
      continue;
    }
    int64_t exp = -1;
    for (uint64_t j = 0; j + 1 < p; ++j)
      if (F.exp_to_code[j] == val) {
        exp = int64_t(j);
        break;
      }
    out[i] = exp;
  }
  return out;
}

inline FieldElement zero(const FieldContext& ctx) { return {kZeroRep, &ctx}; }
inline FieldElement one(const FieldContext& ctx) { return {0, &ctx}; }
inline FieldElement element(const FieldContext& ctx, int64_t exponent) {
  if (exponent == kZeroRep) return zero(ctx);
  int64_t ord = int64_t(ctx.order);
  return {((exponent % ord) + ord) % ord, &ctx};
}

inline void check_ctx(const FieldElement& a, const FieldElement& b) {
  if (a.ctx != b.ctx) throw error(errc::context_mismatch, "elements from different fields");
}

inline FieldElement add(const FieldElement& a, const FieldElement& b) {
  check_ctx(a, b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const FieldContext& c = *a.ctx;
  // g^i + g^j = g^i (1 + g^{j-i})
  uint64_t d = (uint64_t(b.rep) + c.order - uint64_t(a.rep)) % c.order;
  uint32_t z = c.zech[d];
  if (z == kZechZero) return zero(c);
  return {int64_t((uint64_t(a.rep) + z) % c.order), &c};
}

inline FieldElement neg(const FieldElement& a) {
  if (a.is_zero() || a.ctx->p == 2) return a;
  const FieldContext& c = *a.ctx;
  uint64_t half = (c.order) / 2;  // -1 = g^{(q^v-1)/2} in odd characteristic
  return {int64_t((uint64_t(a.rep) + half) % c.order), &c};
}

inline FieldElement sub(const FieldElement& a, const FieldElement& b) { return add(a, neg(b)); }

inline FieldElement mul(const FieldElement& a, const FieldElement& b) {
  check_ctx(a, b);
  if (a.is_zero() || b.is_zero()) return zero(*a.ctx);
  return {int64_t((uint64_t(a.rep) + uint64_t(b.rep)) % a.ctx->order), a.ctx};
}

inline FieldElement inv(const FieldElement& a) {
  if (a.is_zero()) throw error(errc::divide_by_zero, "inverse of zero");
  const FieldContext& c = *a.ctx;
  return {int64_t((c.order - uint64_t(a.rep)) % c.order), &c};
}

inline FieldElement pow_elt(const FieldElement& a, uint64_t n) {
  if (a.is_zero()) return n == 0 ? one(*a.ctx) : a;
  const FieldContext& c = *a.ctx;
  // exponent arithmetic: (a.rep * n) mod order, with 128-bit safety
  unsigned __int128 t = (unsigned __int128)uint64_t(a.rep) * n;
  return {int64_t(uint64_t(t % c.order)), &c};
}

}  // namespace qdesign
