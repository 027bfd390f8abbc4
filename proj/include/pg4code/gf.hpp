#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// Exact arithmetic in GF(p^h) for small fields (q = p^h <= 16).
//
// Elements are encoded as the integers 0..q-1 whose base-p digits, constant
// term least significant, are the coefficients of the residue polynomial
// modulo the field's irreducible modulus; 0 and 1 encode the field's zero
// and one.  The encoding gives a total order on elements, and that order is
// the tie-break used by every deterministic choice downstream.

namespace pg4code {

inline constexpr int kMaxQ = 16;

// A construction failed one of its build-time self checks.  The message
// names the violated invariant.
class invariant_violation : public std::runtime_error {
 public:
  explicit invariant_violation(const std::string& what) : std::runtime_error(what) {}
};

struct Field {
  int p = 0;
  int h = 0;
  int q = 0;
  std::vector<int> modulus;  // monic, degree h, coefficients low -> high
  int omega = 0;             // smallest primitive element

  int add(int x, int y) const { return add_tab[x * kMaxQ + y]; }
  int sub(int x, int y) const { return add_tab[x * kMaxQ + neg_tab[y]]; }
  int neg(int x) const { return neg_tab[x]; }
  int mul(int x, int y) const { return mul_tab[x * kMaxQ + y]; }
  int inv(int x) const {
    if (x == 0) throw std::domain_error("GF(" + std::to_string(q) + "): inverse of zero");
    return inv_tab[x];
  }
  int pow(int x, long long e) const {
    if (e < 0) return pow(inv(x), -e);
    int acc = 1, base = x;
    while (e > 0) {
      if (e & 1) acc = mul(acc, base);
      base = mul(base, base);
      e >>= 1;
    }
    return acc;
  }
  int two() const { return add(1, 1); }

  std::array<std::uint8_t, kMaxQ * kMaxQ> add_tab{};
  std::array<std::uint8_t, kMaxQ * kMaxQ> mul_tab{};
  std::array<std::uint8_t, kMaxQ> neg_tab{};
  std::array<std::uint8_t, kMaxQ> inv_tab{};
};

namespace detail {

inline bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Dense polynomials over GF(p), coefficients low -> high, no implied
// normalization.  Enough for modulus search and table construction.
inline int poly_deg(const std::vector<int>& a) {
  int d = static_cast<int>(a.size()) - 1;
  while (d >= 0 && a[d] == 0) --d;
  return d;
}

inline std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b, int p) {
  if (a.empty() || b.empty()) return {};
  std::vector<int> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return c;
}

// a mod m, m monic.
inline std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m, int p) {
  const int dm = poly_deg(m);
  for (int da = poly_deg(a); da >= dm; da = poly_deg(a)) {
    const int lead = a[da];
    for (int i = 0; i <= dm; ++i) {
      const int k = da - dm + i;
      a[k] = ((a[k] - lead * m[i]) % p + p) % p;
    }
  }
  a.resize(dm > 0 ? dm : 1, 0);
  return a;
}

inline bool poly_is_zero(const std::vector<int>& a) { return poly_deg(a) < 0; }

// Irreducibility over GF(p) by trial division against every monic divisor
// of degree 1..deg/2.  Fine at this scale (p^h <= 16).
inline bool poly_irreducible(const std::vector<int>& f, int p) {
  const int d = poly_deg(f);
  if (d < 1) return false;
  for (int dg = 1; 2 * dg <= d; ++dg) {
    int count = 1;
    for (int i = 0; i < dg; ++i) count *= p;
    for (int v = 0; v < count; ++v) {
      std::vector<int> g(dg + 1, 0);
      int t = v;
      for (int i = 0; i < dg; ++i) {
        g[i] = t % p;
        t /= p;
      }
      g[dg] = 1;
      if (poly_is_zero(poly_mod(f, g, p))) return false;
    }
  }
  return true;
}

inline std::vector<int> decode_elem(int x, int p, int h) {
  std::vector<int> c(h, 0);
  for (int i = 0; i < h; ++i) {
    c[i] = x % p;
    x /= p;
  }
  return c;
}

inline int encode_elem(const std::vector<int>& c, int p, int h) {
  int x = 0;
  for (int i = h - 1; i >= 0; --i) x = x * p + (i < static_cast<int>(c.size()) ? c[i] : 0);
  return x;
}

inline Field build_field(int p, int h, std::vector<int> modulus) {
  Field f;
  f.p = p;
  f.h = h;
  f.q = 1;
  for (int i = 0; i < h; ++i) f.q *= p;
  f.modulus = std::move(modulus);

  for (int x = 0; x < f.q; ++x) {
    const auto cx = decode_elem(x, p, h);
    for (int y = 0; y < f.q; ++y) {
      const auto cy = decode_elem(y, p, h);
      std::vector<int> s(h);
      for (int i = 0; i < h; ++i) s[i] = (cx[i] + cy[i]) % p;
      f.add_tab[x * kMaxQ + y] = static_cast<std::uint8_t>(encode_elem(s, p, h));
      auto prod = poly_mod(poly_mul(cx, cy, p), f.modulus, p);
      f.mul_tab[x * kMaxQ + y] = static_cast<std::uint8_t>(encode_elem(prod, p, h));
    }
    std::vector<int> n(h);
    for (int i = 0; i < h; ++i) n[i] = (p - cx[i]) % p;
    f.neg_tab[x] = static_cast<std::uint8_t>(encode_elem(n, p, h));
  }
  for (int x = 1; x < f.q; ++x)
    for (int y = 1; y < f.q; ++y)
      if (f.mul(x, y) == 1) {
        f.inv_tab[x] = static_cast<std::uint8_t>(y);
        break;
      }

  for (int e = 1; e < f.q; ++e) {
    int acc = e, order = 1;
    while (acc != 1) {
      acc = f.mul(acc, e);
      ++order;
    }
    if (order == f.q - 1) {
      f.omega = e;
      break;
    }
  }
  return f;
}

}  // namespace detail

/// Field from an explicit monic irreducible modulus (coefficients low ->
/// high, length h+1); used when reading self-describing code files.
inline Field make_field_with_modulus(int p, int h, const std::vector<int>& modulus) {
  if (!detail::is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  if (h < 1) throw std::invalid_argument("h must be >= 1");
  long long q = 1;
  for (int i = 0; i < h; ++i) {
    q *= p;
    if (q > kMaxQ)
      throw std::invalid_argument("q = p^h exceeds the supported bound q <= " + std::to_string(kMaxQ));
  }
  if (static_cast<int>(modulus.size()) != h + 1 || modulus[h] != 1)
    throw std::invalid_argument("modulus must be monic of degree h");
  for (int c : modulus)
    if (c < 0 || c >= p) throw std::invalid_argument("modulus coefficient out of range");
  if (h == 1) {
    if (modulus != std::vector<int>{0, 1}) throw std::invalid_argument("degree-1 modulus must be X");
  } else if (!detail::poly_irreducible(modulus, p)) {
    throw std::invalid_argument("modulus is reducible over GF(p)");
  }
  return detail::build_field(p, h, modulus);
}

/// GF(p^h) with the lexicographically smallest monic irreducible modulus
/// (coefficient tuple compared high degree first) and the smallest
/// primitive element under the integer encoding.
inline Field make_field(int p, int h) {
  if (!detail::is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  if (h < 1) throw std::invalid_argument("h must be >= 1");
  long long q = 1;
  for (int i = 0; i < h; ++i) {
    q *= p;
    if (q > kMaxQ)
      throw std::invalid_argument("q = p^h exceeds the supported bound q <= " + std::to_string(kMaxQ));
  }
  if (h == 1) return detail::build_field(p, 1, {0, 1});

  // Scan X^h + c_{h-1} X^{h-1} + ... + c_0; the loop value v spells the
  // coefficient tuple (c_{h-1},...,c_0) most significant digit first, so
  // increasing v is exactly the required lex order.
  for (long long v = 0; v < q; ++v) {
    std::vector<int> coeffs(h + 1, 0);
    coeffs[h] = 1;
    long long t = v;
    for (int i = 0; i < h; ++i) {
      coeffs[i] = static_cast<int>(t % p);
      t /= p;
    }
    if (detail::poly_irreducible(coeffs, p)) return detail::build_field(p, h, coeffs);
  }
  throw std::logic_error("no irreducible modulus found");  // unreachable
}

/// Lex-least (a,b,c) in encoding order with X^3 + aX^2 + bX + c root-free
/// over GF(q).  For degree 3 root-freeness is equivalent to irreducibility.
inline std::array<int, 3> find_irreducible_cubic(const Field& f) {
  if (f.p == 2) throw std::invalid_argument("find_irreducible_cubic requires odd characteristic");
  for (int a = 0; a < f.q; ++a)
    for (int b = 0; b < f.q; ++b)
      for (int c = 0; c < f.q; ++c) {
        bool root_free = true;
        for (int x = 0; x < f.q && root_free; ++x) {
          const int v = f.add(f.mul(f.add(f.mul(f.add(x, a), x), b), x), c);  // ((x+a)x+b)x+c
          if (v == 0) root_free = false;
        }
        if (root_free) return {a, b, c};
      }
  throw std::logic_error("no irreducible cubic found");  // unreachable
}

/// Smallest alpha with X^2 + X + alpha root-free over GF(q), q even.
inline int find_quadratic_alpha(const Field& f) {
  if (f.p != 2) throw std::invalid_argument("find_quadratic_alpha requires characteristic 2");
  for (int alpha = 0; alpha < f.q; ++alpha) {
    bool root_free = true;
    for (int x = 0; x < f.q && root_free; ++x)
      if (f.add(f.add(f.mul(x, x), x), alpha) == 0) root_free = false;
    if (root_free) return alpha;
  }
  throw std::logic_error("no root-free quadratic found");  // unreachable
}

}  // namespace pg4code
