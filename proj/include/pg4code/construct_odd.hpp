#pragma once

#include <unordered_set>

#include "verify.hpp"

// Odd-characteristic construction.  The group orbit P' = alpha^G of a plane
// alpha meeting pi in a single point off ell gives q^3 planes pairwise
// meeting in a point; one line orbit disjoint from pi whose lines avoid
// alpha (a partial spread of q^3 lines) gives L'.  Together with the side
// choices r, xi, X and two solids through pi these assemble into the four
// code compositions of size 2(q^3+1) at minimum distance 3.

namespace pg4code {

struct OddScaffold {
  const Field* field = nullptr;
  OddFrame frame;
  std::array<int, 3> cubic{};
  Group group;
  Subspace alpha_plane;               // spans (0,0,1,0,0),(0,0,0,1,0),(0,0,0,0,1)
  std::vector<Subspace> plane_orbit;  // P' = alpha^G, q^3 planes
  std::vector<Subspace> line_spread;  // L', the chosen disjoint line orbit
  Subspace line_spread_id;            // its lex-least member
  Subspace r_line;                    // line of pi distinct from ell
  Subspace xi_plane;                  // plane through ell distinct from pi
  Subspace x_point;                   // point of ell off r_line
  Subspace xi_solid;                  // <pi, xi> = {X5 = 0}
  Subspace extra_solid;               // {X4 = 0}, distinct solid through pi
};

namespace detail {

// Lines disjoint from pi = {X4 = X5 = 0} have a unique basis of the form
// (a,b,c,1,0),(d,e,f,0,1); canonical keys of all q^6 of them, sorted.
inline std::vector<std::uint64_t> disjoint_line_keys(const Field& f) {
  std::vector<std::uint64_t> keys;
  const std::size_t q = static_cast<std::size_t>(f.q);
  keys.reserve(q * q * q * q * q * q);
  Mat m;
  m.rows = 2;
  m.cols = kAmbient;
  m.set(0, 3, 1);
  m.set(1, 4, 1);
  for (int a = 0; a < f.q; ++a)
    for (int b = 0; b < f.q; ++b)
      for (int c = 0; c < f.q; ++c)
        for (int d = 0; d < f.q; ++d)
          for (int e = 0; e < f.q; ++e)
            for (int g = 0; g < f.q; ++g) {
              m.set(0, 0, a);
              m.set(0, 1, b);
              m.set(0, 2, c);
              m.set(1, 0, d);
              m.set(1, 1, e);
              m.set(1, 2, g);
              Mat canon = m;
              rref_in_place(canon, f);
              keys.push_back(pack_key(Subspace{&f, canon}));
            }
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace detail

inline OddScaffold build_scaffold_odd(const Field& f) {
  using detail::require;
  if (f.p == 2) throw std::invalid_argument("build_scaffold_odd requires odd q");
  const std::uint64_t q3 = static_cast<std::uint64_t>(f.q) * f.q * f.q;

  OddScaffold s;
  s.field = &f;
  s.frame = frame_odd(f);
  s.cubic = find_irreducible_cubic(f);
  s.group = build_group_odd(f, s.cubic);
  require(s.group.size() == q3, "scaffold_odd: group order != q^3");

  s.alpha_plane =
      canonicalize(f, make_mat5({{0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}}));
  const auto a_meet = meet(s.alpha_plane, s.frame.pi);
  require(a_meet && a_meet->k() == 1 && !is_subspace_of(*a_meet, s.frame.ell),
          "scaffold_odd: alpha does not meet pi in a point off ell");

  s.plane_orbit = orbit(s.alpha_plane, s.group);
  require(s.plane_orbit.size() == q3, "scaffold_odd: |alpha^G| != q^3");
  for (std::size_t i = 0; i + 1 < s.plane_orbit.size(); ++i)
    for (std::size_t j = i + 1; j < s.plane_orbit.size(); ++j)
      require(meet_dim(s.plane_orbit[i], s.plane_orbit[j]) == 1,
              "scaffold_odd: two planes of alpha^G do not meet in a point");

  // the q^2 lines of alpha disjoint from pi, each in its own orbit
  std::unordered_set<std::uint64_t> forbidden;
  for (const Subspace& line : subspaces_within(s.alpha_plane, 2)) {
    if (meet_dim(line, s.frame.pi) != 0) continue;
    forbidden.insert(pack_key(orbit_id(line, s.group)));
  }
  require(forbidden.size() == static_cast<std::size_t>(f.q) * f.q,
          "scaffold_odd: alpha's disjoint lines do not hit q^2 distinct orbits");

  // first orbit id (lex) of a line disjoint from pi that avoids alpha's orbits
  {
    const std::vector<std::uint64_t> keys = detail::disjoint_line_keys(f);
    std::unordered_set<std::uint64_t> visited;
    bool found = false;
    for (const std::uint64_t key : keys) {
      if (visited.count(key)) continue;
      const Subspace line = unpack_line_key(f, key);
      const std::vector<Subspace> orb = orbit(line, s.group);
      require(pack_key(orb.front()) == key, "scaffold_odd: orbit walk out of order");
      if (!forbidden.count(key)) {
        s.line_spread = orb;
        s.line_spread_id = orb.front();
        found = true;
        break;
      }
      for (const Subspace& member : orb) visited.insert(pack_key(member));
    }
    require(found, "scaffold_odd: no admissible disjoint line orbit");
  }
  require(s.line_spread.size() == q3, "scaffold_odd: |L'| != q^3");
  for (std::size_t i = 0; i + 1 < s.line_spread.size(); ++i)
    for (std::size_t j = i + 1; j < s.line_spread.size(); ++j)
      require(meet_dim(s.line_spread[i], s.line_spread[j]) == 0,
              "scaffold_odd: L' is not a partial spread");
  for (const Subspace& line : s.line_spread) {
    require(!is_subspace_of(line, s.alpha_plane), "scaffold_odd: L' line inside alpha");
    for (const Subspace& plane : s.plane_orbit)
      require(!is_subspace_of(line, plane), "scaffold_odd: L' line inside a plane of P'");
  }

  s.r_line = canonicalize(f, make_mat5({{1, 0, 0, 0, 0}, {0, 0, 1, 0, 0}}));
  s.xi_plane = canonicalize(f, make_mat5({{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 0, 1, 0}}));
  s.x_point = canonicalize(f, make_mat5({{0, 1, 0, 0, 0}}));
  s.xi_solid = s.frame.solids[f.q];        // {X5 = 0}
  s.extra_solid = s.frame.solids[f.q - 1]; // {X4 = 0}

  require(is_subspace_of(s.r_line, s.frame.pi) && s.r_line != s.frame.ell,
          "scaffold_odd: r is not a line of pi distinct from ell");
  require(is_subspace_of(s.frame.ell, s.xi_plane) && s.xi_plane != s.frame.pi,
          "scaffold_odd: xi is not a plane through ell distinct from pi");
  require(is_subspace_of(s.x_point, s.frame.ell) && !is_subspace_of(s.x_point, s.r_line),
          "scaffold_odd: X is not a point of ell off r");
  require(join(s.frame.pi, s.xi_plane) == s.xi_solid, "scaffold_odd: <pi, xi> != {X5=0}");
  require(s.extra_solid != s.xi_solid, "scaffold_odd: the two solids coincide");
  for (const Subspace& plane : s.plane_orbit)
    require(meet_dim(plane, s.xi_plane) == 1, "scaffold_odd: a plane of P' does not meet xi in a point");
  return s;
}

inline SubspaceCode assemble_code_odd(const OddScaffold& s, CodeType type) {
  using detail::require;
  if (!type_valid_for(type, Parity::odd))
    throw std::invalid_argument(std::string("type ") + to_string(type) + " is even-only");
  const Field& f = *s.field;
  const std::uint64_t q3 = static_cast<std::uint64_t>(f.q) * f.q * f.q;

  SubspaceCode code;
  code.field = &f;
  code.parity = Parity::odd;
  code.type = type;
  auto& w = code.words;
  w.insert(w.end(), s.plane_orbit.begin(), s.plane_orbit.end());
  w.insert(w.end(), s.line_spread.begin(), s.line_spread.end());
  Histogram expected;
  switch (type) {
    case CodeType::IV:  // (P' u {xi}) u (L' u {r})
      w.push_back(s.xi_plane);
      w.push_back(s.r_line);
      expected = {0, q3 + 1, q3 + 1, 0};
      break;
    case CodeType::I:  // P' u (L' u {r}) u {X}
      w.push_back(s.r_line);
      w.push_back(s.x_point);
      expected = {1, q3 + 1, q3, 0};
      break;
    case CodeType::II:  // (P' u {xi}) u L' u {Pi_k}
      w.push_back(s.xi_plane);
      w.push_back(s.extra_solid);
      expected = {0, q3, q3 + 1, 1};
      break;
    case CodeType::III:  // P' u L' u {X, Pi_k}
      w.push_back(s.x_point);
      w.push_back(s.extra_solid);
      expected = {1, q3, q3, 1};
      break;
    default:
      throw std::invalid_argument("unreachable");
  }
  std::sort(w.begin(), w.end());
  require(std::adjacent_find(w.begin(), w.end()) == w.end(), "assemble_odd: duplicate codeword");
  require(w.size() == 2 * (q3 + 1), "assemble_odd: |C| != 2(q^3+1)");
  require(histogram_of(w) == expected, "assemble_odd: composition does not match the type table");
  require(min_distance(code).min_dist == 3, "assemble_odd: minimum distance != 3");

  code.choices = {{"alpha_plane", s.alpha_plane}, {"line_orbit_id", s.line_spread_id},
                  {"r_line", s.r_line},           {"xi_plane", s.xi_plane},
                  {"x_point", s.x_point},         {"xi_solid", s.xi_solid},
                  {"extra_solid", s.extra_solid}};
  code.scalars = {{"cubic_a", s.cubic[0]}, {"cubic_b", s.cubic[1]}, {"cubic_c", s.cubic[2]}};
  return code;
}

}  // namespace pg4code
