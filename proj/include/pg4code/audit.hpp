#pragma once

#include <map>
#include <sstream>

#include "construct_even.hpp"
#include "construct_odd.hpp"

// Structural audits.  One named check per claimed property so a failure
// localizes immediately; all checks run full orbit enumerations and are
// therefore limited to q in {2,3,4,5}.

namespace pg4code {

inline bool audit_supported(int q) { return q == 2 || q == 3 || q == 4 || q == 5; }

namespace detail {

inline std::vector<std::uint64_t> point_keys(const std::vector<Subspace>& pts) {
  std::vector<std::uint64_t> keys;
  keys.reserve(pts.size());
  for (const Subspace& p : pts) keys.push_back(pack_key(p));
  std::sort(keys.begin(), keys.end());
  return keys;
}

inline std::string size_multiset(const std::vector<OrbitCensusEntry>& census) {
  std::map<std::uint64_t, int> hist;
  for (const auto& e : census) ++hist[e.size];
  std::ostringstream os;
  for (const auto& [size, n] : hist) os << n << "x" << size << " ";
  return os.str();
}

}  // namespace detail

inline std::vector<CheckResult> audit_odd(const Field& f) {
  const int q = f.q;
  const std::uint64_t q3 = static_cast<std::uint64_t>(q) * q * q;
  std::vector<CheckResult> out;
  const auto push = [&out](const std::string& name, bool pass, const std::string& detail = "") {
    out.push_back(CheckResult{name, pass, detail});
  };

  const OddFrame fr = frame_odd(f);
  const auto cubic = find_irreducible_cubic(f);
  Group g;
  try {
    g = build_group_odd(f, cubic);
  } catch (const std::exception& e) {
    push("odd.group", false, e.what());
    return out;
  }
  push("odd.group", g.size() == q3, "order " + std::to_string(g.size()));

  // point orbits: q+1 fixed points (ell), one orbit pi \ ell, q+1 orbits
  // of size q^3 (the affine parts of the solids through pi)
  {
    const auto census = orbit_census(f, g, 1);
    bool ok = census.size() == 2 * static_cast<std::size_t>(q) + 3;
    std::vector<std::uint64_t> fixed;
    std::vector<std::vector<std::uint64_t>> big;
    std::uint64_t mid = 0;
    for (const auto& e : census) {
      if (e.size == 1)
        fixed.push_back(pack_key(e.rep));
      else if (e.size == static_cast<std::uint64_t>(q) * q)
        ++mid;
      else if (e.size == q3)
        big.push_back(detail::point_keys(orbit(e.rep, g)));
      else
        ok = false;
    }
    std::sort(fixed.begin(), fixed.end());
    ok = ok && fixed == detail::point_keys(points_of(fr.ell)) && mid == 1 &&
         big.size() == static_cast<std::size_t>(q) + 1;
    // each big orbit is Pi_i minus pi, for exactly one solid
    std::vector<std::vector<std::uint64_t>> affine;
    for (const Subspace& solid : fr.solids) {
      std::vector<std::uint64_t> keys;
      const auto pi_keys = detail::point_keys(points_of(fr.pi));
      for (const Subspace& p : points_of(solid))
        if (!std::binary_search(pi_keys.begin(), pi_keys.end(), pack_key(p)))
          keys.push_back(pack_key(p));
      std::sort(keys.begin(), keys.end());
      affine.push_back(std::move(keys));
    }
    std::sort(big.begin(), big.end());
    std::sort(affine.begin(), affine.end());
    ok = ok && big == affine;
    push("odd.point_census", ok, detail::size_multiset(census));
  }

  // line orbits: {ell}; q+1 of size q in pi; (q+1)^2 of size q^2 through a
  // point of ell; q(q+1) of size q^3 meeting pi off ell; q^3 of size q^3
  // disjoint from pi, each a partial spread
  {
    const auto census = orbit_census(f, g, 2);
    std::uint64_t in_pi = 0, through_ell = 0, meet_pi = 0, disjoint = 0;
    bool ok = true, spreads = true, fixed_is_ell = false;
    for (const auto& e : census) {
      const int dim_pi = meet_dim(e.rep, fr.pi);
      const int dim_ell = meet_dim(e.rep, fr.ell);
      if (e.size == 1) {
        fixed_is_ell = e.rep == fr.ell;
      } else if (e.size == static_cast<std::uint64_t>(q) && dim_pi == 2 && dim_ell == 1) {
        ++in_pi;
      } else if (e.size == static_cast<std::uint64_t>(q) * q && dim_pi == 1 && dim_ell == 1) {
        ++through_ell;
      } else if (e.size == q3 && dim_pi == 1 && dim_ell == 0) {
        ++meet_pi;
      } else if (e.size == q3 && dim_pi == 0) {
        ++disjoint;
        const auto orb = orbit(e.rep, g);
        for (std::size_t i = 0; i + 1 < orb.size() && spreads; ++i)
          for (std::size_t j = i + 1; j < orb.size(); ++j)
            if (meet_dim(orb[i], orb[j]) != 0) {
              spreads = false;
              break;
            }
      } else {
        ok = false;
      }
    }
    ok = ok && fixed_is_ell && in_pi == static_cast<std::uint64_t>(q) + 1 &&
         through_ell == static_cast<std::uint64_t>(q + 1) * (q + 1) &&
         meet_pi == static_cast<std::uint64_t>(q) * (q + 1) && disjoint == q3;
    push("odd.line_census", ok, detail::size_multiset(census));
    push("odd.line_orbits_disjoint_are_spreads", spreads);
  }
  return out;
}

inline std::vector<CheckResult> audit_even(const Field& f) {
  const int q = f.q;
  const std::uint64_t q3 = static_cast<std::uint64_t>(q) * q * q;
  std::vector<CheckResult> out;
  const auto push = [&out](const std::string& name, bool pass, const std::string& detail = "") {
    out.push_back(CheckResult{name, pass, detail});
  };

  EvenScaffold s;
  try {
    s = build_even_scaffold(f);
  } catch (const std::exception& e) {
    push("even.scaffold", false, e.what());
    return out;
  }
  push("even.scaffold", true);
  push("even.group", s.group.size() == q3 - static_cast<std::uint64_t>(q),
       "order " + std::to_string(s.group.size()));

  // point orbits: N; ell; pi off (ell u N); H off ell; Sigma off H;
  // cone off (pi u H); each parabolic quadric off H
  {
    const auto census = orbit_census(f, s.group, 1);
    bool ok = census.size() == static_cast<std::size_t>(q) + 5;
    std::vector<std::vector<std::uint64_t>> orbits;
    for (const auto& e : census) orbits.push_back(detail::point_keys(orbit(e.rep, s.group)));
    std::sort(orbits.begin(), orbits.end());

    std::vector<std::vector<std::uint64_t>> expected;
    const auto minus = [](const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
      std::vector<std::uint64_t> d;
      std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(d));
      return d;
    };
    const std::vector<std::uint64_t> nkey{pack_key(s.frame.nucleus)};
    expected.push_back(nkey);
    expected.push_back(s.ell_pts.keys);
    auto pi_rest = minus(s.pi_pts.keys, s.ell_pts.keys);
    expected.push_back(minus(pi_rest, nkey));
    expected.push_back(minus(s.quadric_pts.keys, s.ell_pts.keys));
    expected.push_back(minus(s.sigma_pts.keys, s.quadric_pts.keys));
    auto cone_off = minus(s.cone_pts.keys, s.pi_pts.keys);
    expected.push_back(minus(cone_off, s.quadric_pts.keys));
    for (int i = 0; i < q - 1; ++i)
      expected.push_back(minus(s.parabolic_pts[i].keys, s.quadric_pts.keys));
    std::sort(expected.begin(), expected.end());
    ok = ok && orbits == expected;
    push("even.point_census", ok, detail::size_multiset(census));
  }

  // regulus and tangent-line transitivity
  {
    bool ok = true;
    std::string why;
    try {
      regulus_check(s, s.t0);
    } catch (const std::exception& e) {
      ok = false;
      why = e.what();
    }
    push("even.regulus", ok, why);
    const auto orb = orbit(s.t0, s.group);
    push("even.tangent_single_orbit",
         orb == s.tangent_lines && orb.size() == q3 - static_cast<std::uint64_t>(q));
  }

  // good line orbits: exactly q^2-q of them, each a partial spread of
  // q^3-q mutually disjoint lines; the recipe ids are exactly those orbits
  {
    bool ok = true, spreads = true;
    std::vector<Subspace> good_ids;
    for (const auto& e : orbit_census(f, s.group, 2)) {
      if (!is_good_line(s, e.rep)) continue;
      good_ids.push_back(e.rep);
      ok = ok && e.size == q3 - static_cast<std::uint64_t>(q);
      const auto orb = orbit(e.rep, s.group);
      for (std::size_t i = 0; i + 1 < orb.size() && spreads; ++i)
        for (std::size_t j = i + 1; j < orb.size(); ++j)
          if (meet_dim(orb[i], orb[j]) != 0) {
            spreads = false;
            break;
          }
    }
    std::sort(good_ids.begin(), good_ids.end());
    ok = ok && good_ids == s.good_line_ids &&
         good_ids.size() == static_cast<std::size_t>(q) * q - q;
    push("even.good_line_orbits", ok, std::to_string(good_ids.size()) + " orbits");
    push("even.good_line_orbits_are_spreads", spreads);
  }

  // good plane orbit and pencil coverage
  {
    bool ok = true;
    std::string why;
    try {
      const auto orb = good_plane_orbit(s, s.t0, s.u_prime);
      ok = orb == s.P1 && orb.size() == q3 - static_cast<std::uint64_t>(q);
      // every member meets Sigma in a tangent line
      for (const Subspace& pl : orb) {
        const auto t = meet(pl, s.frame.sigma);
        if (!(t && t->k() == 2 &&
              std::binary_search(s.tangent_lines.begin(), s.tangent_lines.end(), *t))) {
          ok = false;
          break;
        }
      }
    } catch (const std::exception& e) {
      ok = false;
      why = e.what();
    }
    push("even.good_plane_orbit", ok, why);
    try {
      const auto covered = pencil_coverage(s, s.good_plane);
      push("even.pencil_coverage", covered.size() == static_cast<std::size_t>(q) - 1,
           std::to_string(covered.size()) + " covered");
    } catch (const std::exception& e) {
      push("even.pencil_coverage", false, e.what());
    }
  }

  // Klein polarity diagnostic
  {
    const KleinReport k = klein_cross_check(s);
    for (const CheckResult& c : k.checks) out.push_back(c);
  }
  return out;
}

/// Every structural check of the branch that applies to f; all must pass.
inline std::vector<CheckResult> audit_structure(const Field& f) {
  if (!audit_supported(f.q))
    throw std::invalid_argument("audit supports q in {2,3,4,5}, got q = " + std::to_string(f.q));
  return f.p == 2 ? audit_even(f) : audit_odd(f);
}

}  // namespace pg4code
