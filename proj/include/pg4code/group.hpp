#pragma once

#include <string>
#include <vector>

#include "subspace.hpp"

// The two automorphism groups of the constructions, as explicit 5x5
// matrices over GF(q) acting on points (column vectors) from the left.
//
// Odd q: G = { M_{r,s,t} | r,s,t in GF(q) }, a p-group of order q^3 built
// from a cubic X^3 + aX^2 + bX + c with no root in GF(q).
//
// Even q: G = { M_{a,b,c,d} | a != 0, c^2 + cd + alpha d^2 = 1 } of order
// q^3 - q, where X^2 + X + alpha has no root in GF(q).  It contains the
// subgroups G1 (a=1, b=0; order q+1), G2 (a=1, c=1, d=0; order q) and
// G3 (b=0, c=1, d=0; order q-1).

namespace pg4code {

enum class Parity { odd, even };

inline const char* to_string(Parity p) { return p == Parity::odd ? "odd" : "even"; }

struct GroupElement {
  Mat m;                     // 5x5
  std::array<int, 4> label;  // odd: (r,s,t,0); even: (a,b,c,d)
};

struct Group {
  const Field* field = nullptr;
  Parity parity = Parity::odd;
  std::vector<GroupElement> elems;
  // even branch only: element indices of the subgroups G1, G2, G3
  std::vector<std::size_t> g1, g2, g3;

  std::size_t size() const { return elems.size(); }
};

namespace detail {

inline std::array<std::uint8_t, 25> mat5_bytes(const Mat& m) {
  std::array<std::uint8_t, 25> b{};
  for (int r = 0; r < 5; ++r)
    for (int c = 0; c < 5; ++c) b[r * 5 + c] = m.a[r][c];
  return b;
}

inline void require(bool cond, const std::string& name) {
  if (!cond) throw invariant_violation(name);
}

}  // namespace detail

inline Group build_group_odd(const Field& f, const std::array<int, 3>& cubic) {
  if (f.p == 2) throw std::invalid_argument("build_group_odd requires odd characteristic");
  const int a = cubic[0], b = cubic[1], c = cubic[2];
  for (int x = 0; x < f.q; ++x)
    detail::require(f.add(f.mul(f.add(f.mul(f.add(x, a), x), b), x), c) != 0,
                    "group_odd: cubic has a root in GF(q)");
  const int two = f.two();

  Group g;
  g.field = &f;
  g.parity = Parity::odd;
  g.elems.reserve(static_cast<std::size_t>(f.q) * f.q * f.q);
  for (int r = 0; r < f.q; ++r)
    for (int s = 0; s < f.q; ++s)
      for (int t = 0; t < f.q; ++t) {
        Mat m;
        m.rows = m.cols = 5;
        for (int i = 0; i < 5; ++i) m.set(i, i, 1);
        m.set(0, 2, r);
        m.set(0, 3, f.add(f.sub(f.mul(r, r), f.mul(a, r)), s));  // r^2 - ar + s
        m.set(0, 4, t);
        m.set(1, 2, s);
        m.set(1, 3, f.sub(f.mul(two, f.mul(r, s)), t));  // 2rs - t
        m.set(1, 4, f.sub(f.add(f.mul(s, s), f.mul(b, s)), f.mul(c, r)));  // s^2 + bs - cr
        m.set(2, 3, f.mul(two, r));
        m.set(2, 4, f.mul(two, s));
        g.elems.push_back(GroupElement{m, {r, s, t, 0}});
      }

  // distinctness
  std::vector<std::array<std::uint8_t, 25>> keys;
  keys.reserve(g.elems.size());
  for (const auto& e : g.elems) keys.push_back(detail::mat5_bytes(e.m));
  std::sort(keys.begin(), keys.end());
  detail::require(std::adjacent_find(keys.begin(), keys.end()) == keys.end(),
                  "group_odd: elements not distinct");

  // M_{r,s,t} M_{r',s',t'}^{-1} = M_{r-r', s-s', t-t'-2s'(r-r')}; checked
  // exhaustively for q <= 5, on a deterministic sample above.
  const auto idx = [&](int r, int s, int t) { return (static_cast<std::size_t>(r) * f.q + s) * f.q + t; };
  const std::size_t n = g.elems.size();
  const std::size_t stride = f.q <= 5 ? 1 : (n * n) / 4096 + 1;
  std::size_t pair = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (pair++ % stride != 0) continue;
      const auto& li = g.elems[i].label;
      const auto& lj = g.elems[j].label;
      // inverse of M_{r',s',t'} is M_{-r', -s', 2r's' - t'}
      const Mat& inv_j =
          g.elems[idx(f.neg(lj[0]), f.neg(lj[1]), f.sub(f.mul(two, f.mul(lj[0], lj[1])), lj[2]))].m;
      const int dr = f.sub(li[0], lj[0]);
      const int ds = f.sub(li[1], lj[1]);
      const int dt = f.sub(f.sub(li[2], lj[2]), f.mul(two, f.mul(lj[1], dr)));
      detail::require(mat_equal(mat_mul(g.elems[i].m, inv_j, f), g.elems[idx(dr, ds, dt)].m),
                      "group_odd: product law violated");
    }
  return g;
}

inline Group build_group_even(const Field& f, int alpha) {
  if (f.p != 2) throw std::invalid_argument("build_group_even requires characteristic 2");
  for (int x = 0; x < f.q; ++x)
    detail::require(f.add(f.add(f.mul(x, x), x), alpha) != 0,
                    "group_even: X^2 + X + alpha has a root in GF(q)");

  // the q+1 solutions of c^2 + cd + alpha d^2 = 1
  std::vector<std::pair<int, int>> norm_one;
  for (int c = 0; c < f.q; ++c)
    for (int d = 0; d < f.q; ++d)
      if (f.add(f.add(f.mul(c, c), f.mul(c, d)), f.mul(alpha, f.mul(d, d))) == 1)
        norm_one.emplace_back(c, d);
  detail::require(static_cast<int>(norm_one.size()) == f.q + 1,
                  "group_even: norm-one pair count != q+1");

  Group g;
  g.field = &f;
  g.parity = Parity::even;
  g.elems.reserve(static_cast<std::size_t>(f.q) * (f.q * f.q - 1));
  for (int a = 1; a < f.q; ++a) {
    const int ai = f.inv(a);
    for (int b = 0; b < f.q; ++b)
      for (const auto& [c, d] : norm_one) {
        const int cd = f.add(c, d);
        Mat m;
        m.rows = m.cols = 5;
        m.set(0, 0, 1);
        m.set(1, 1, f.mul(a, c));
        m.set(1, 2, f.mul(alpha, f.mul(a, d)));
        m.set(1, 3, f.mul(b, c));
        m.set(1, 4, f.mul(alpha, f.mul(b, d)));
        m.set(2, 1, f.mul(a, d));
        m.set(2, 2, f.mul(a, cd));
        m.set(2, 3, f.mul(b, d));
        m.set(2, 4, f.mul(b, cd));
        m.set(3, 3, f.mul(ai, c));
        m.set(3, 4, f.mul(alpha, f.mul(ai, d)));
        m.set(4, 3, f.mul(ai, d));
        m.set(4, 4, f.mul(ai, cd));
        const std::size_t i = g.elems.size();
        g.elems.push_back(GroupElement{m, {a, b, c, d}});
        if (a == 1 && b == 0) g.g1.push_back(i);
        if (a == 1 && c == 1 && d == 0) g.g2.push_back(i);
        if (b == 0 && c == 1 && d == 0) g.g3.push_back(i);
      }
  }

  const std::size_t order = static_cast<std::size_t>(f.q) * (f.q - 1) * (f.q + 1);
  detail::require(g.elems.size() == order, "group_even: order != q^3 - q");
  detail::require(g.g1.size() == static_cast<std::size_t>(f.q + 1), "group_even: |G1| != q+1");
  detail::require(g.g2.size() == static_cast<std::size_t>(f.q), "group_even: |G2| != q");
  detail::require(g.g3.size() == static_cast<std::size_t>(f.q - 1), "group_even: |G3| != q-1");

  std::vector<std::array<std::uint8_t, 25>> keys;
  keys.reserve(g.elems.size());
  for (const auto& e : g.elems) keys.push_back(detail::mat5_bytes(e.m));
  std::sort(keys.begin(), keys.end());
  detail::require(std::adjacent_find(keys.begin(), keys.end()) == keys.end(),
                  "group_even: elements not distinct");
  return g;
}

/// Orbit under an explicit matrix list; sorted lex, deduplicated.
inline std::vector<Subspace> orbit(const Subspace& u, const std::vector<Mat>& gs) {
  std::vector<Subspace> out;
  out.reserve(gs.size());
  for (const Mat& g : gs) out.push_back(apply(g, u));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::vector<Subspace> orbit(const Subspace& u, const Group& g) {
  std::vector<Subspace> out;
  out.reserve(g.size());
  for (const auto& e : g.elems) out.push_back(apply(e.m, u));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  detail::require(g.size() % out.size() == 0, "orbit: size does not divide group order");
  return out;
}

/// Orbit under the subgroup given by element indices.
inline std::vector<Subspace> orbit_under(const Subspace& u, const Group& g,
                                         const std::vector<std::size_t>& members) {
  std::vector<Subspace> out;
  out.reserve(members.size());
  for (std::size_t i : members) out.push_back(apply(g.elems[i].m, u));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Lex-least orbit member: the orbit's canonical id.
inline Subspace orbit_id(const Subspace& u, const Group& g) { return orbit(u, g).front(); }

struct OrbitCensusEntry {
  Subspace rep;  // lex-least member
  std::uint64_t size = 0;
};

/// Complete partition of the k-subspaces into G-orbits, reps in lex order.
inline std::vector<OrbitCensusEntry> orbit_census(const Field& f, const Group& g, int k) {
  const std::vector<Subspace> all = enumerate_subspaces(f, k);
  std::vector<bool> visited(all.size(), false);
  std::vector<OrbitCensusEntry> census;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (visited[i]) continue;
    const std::vector<Subspace> orb = orbit(all[i], g);
    for (const Subspace& s : orb) {
      const auto it = std::lower_bound(all.begin(), all.end(), s);
      assert(it != all.end() && *it == s);
      visited[static_cast<std::size_t>(it - all.begin())] = true;
    }
    census.push_back(OrbitCensusEntry{orb.front(), orb.size()});
  }
  return census;
}

}  // namespace pg4code
