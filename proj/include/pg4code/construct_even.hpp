#pragma once

#include <unordered_set>

#include "verify.hpp"

// Even-characteristic construction.  The group fixes the pencil of quadrics
// generated by X1^2 = 0 and X2 X5 + X3 X4 = 0: the solid Sigma (doubled),
// the cone over the hyperbolic quadric H with vertex N, and q-1 parabolic
// quadrics.  Lines meeting Sigma\H, cone\(pi u H) and every parabolic
// member in exactly one point sweep out "good" line orbits (partial spreads
// of q^3-q lines); planes spanned by a tangent line of H and an admissible
// point of pi sweep out "good" plane orbits (q^3-q planes pairwise meeting
// in a point).  Good orbits, the reguli of H and the planes joining a
// regulus line to N assemble into the six code variants.
//
// All quadric membership is decided on explicit point sets; tangency is
// intersection cardinality with H.  No bilinear-form computation is used on
// the construction path (characteristic 2), only the Klein-quadric
// diagnostic below works with a polar form.

namespace pg4code {

struct PointSet {
  std::vector<std::uint64_t> keys;  // sorted pack_key values of points

  bool contains(std::uint64_t k) const {
    return std::binary_search(keys.begin(), keys.end(), k);
  }
  bool contains(const Subspace& pt) const { return contains(pack_key(pt)); }
  std::size_t size() const { return keys.size(); }
};

struct EvenScaffold {
  const Field* field = nullptr;
  EvenFrame frame;
  int alpha = 0;  // X^2 + X + alpha root-free
  Group group;

  PointSet pi_pts, ell_pts, sigma_pts;
  PointSet quadric_pts;                  // H, the hyperbolic quadric of Sigma
  PointSet cone_pts;                     // cone over H with vertex N
  std::vector<PointSet> parabolic_pts;   // Q_1..Q_{q-1}

  std::vector<Subspace> quadric_lines;   // the 2(q+1) lines inside H
  std::vector<Subspace> R1, R2;          // the two reguli; R1 contains ell
  std::vector<Subspace> w_lines;         // the (q+1)(q^2+1) lines of W(3,q)
  std::vector<Subspace> tangent_lines;   // Tset: tangent to H at a point off ell
  std::vector<Subspace> good_line_ids;   // the q^2-q good line-orbit ids, lex sorted

  // completed part (build_even_scaffold)
  Subspace t0;                        // lex-least tangent line
  Subspace u_prime;                   // lex-least admissible point of pi
  Subspace good_plane;                // gamma = <t0, u_prime>
  std::vector<Subspace> P1;           // gamma^G
  std::vector<Subspace> P2;           // <m, N> for m in R1 (contains pi)
  std::vector<Subspace> L1;           // chosen uncovered good line orbit
  Subspace good_line_orbit_id;
};

namespace detail {

inline int quad_sigma(const Field& f, const Subspace& pt) {
  const auto& v = pt.m.a[0];
  return f.add(f.mul(v[1], v[4]), f.mul(v[2], v[3]));  // X2 X5 + X3 X4
}

inline Subspace tangency_point(const EvenScaffold& s, const Subspace& t) {
  Subspace hit;
  int n = 0;
  for (const Subspace& p : points_of(t))
    if (s.quadric_pts.contains(p) && !s.ell_pts.contains(p)) {
      hit = p;
      ++n;
    }
  require(n == 1, "even: line has no unique contact point in H off ell");
  return hit;
}

}  // namespace detail

/// Line meeting Sigma\H, cone\(pi u H) and each parabolic quadric minus H
/// in exactly one point; membership is orbit-invariant.
inline bool is_good_line(const EvenScaffold& s, const Subspace& line) {
  const int q = s.field->q;
  int in_sigma_off = 0, in_cone_off = 0;
  std::vector<int> in_par(q - 1, 0);
  for (const Subspace& p : points_of(line)) {
    const std::uint64_t key = pack_key(p);
    const bool in_h = s.quadric_pts.contains(key);
    if (s.sigma_pts.contains(key) && !in_h) ++in_sigma_off;
    if (s.cone_pts.contains(key) && !s.pi_pts.contains(key) && !in_h) ++in_cone_off;
    for (int i = 0; i < q - 1; ++i)
      if (s.parabolic_pts[i].contains(key) && !in_h) ++in_par[i];
  }
  if (in_sigma_off != 1 || in_cone_off != 1) return false;
  for (int i = 0; i < q - 1; ++i)
    if (in_par[i] != 1) return false;
  return true;
}

inline EvenScaffold build_even_geometry(const Field& f) {
  using detail::require;
  if (f.p != 2) throw std::invalid_argument("build_even_geometry requires even q");
  const int q = f.q;
  const std::uint64_t q3 = static_cast<std::uint64_t>(q) * q * q;

  EvenScaffold s;
  s.field = &f;
  s.frame = frame_even(f);
  s.alpha = find_quadratic_alpha(f);
  s.group = build_group_even(f, s.alpha);
  require(s.group.size() == q3 - q, "even: group order != q^3 - q");

  // point sets of the pencil members
  const std::vector<Subspace> all_points = enumerate_subspaces(f, 1);
  s.parabolic_pts.resize(q - 1);
  std::vector<int> lambda(q - 1);
  for (int i = 0; i < q - 1; ++i) lambda[i] = f.pow(f.omega, i);
  for (const Subspace& p : all_points) {
    const std::uint64_t key = pack_key(p);
    const auto& v = p.m.a[0];
    const int qs = detail::quad_sigma(f, p);
    if (v[3] == 0 && v[4] == 0) s.pi_pts.keys.push_back(key);
    if (v[0] == 0 && v[3] == 0 && v[4] == 0) s.ell_pts.keys.push_back(key);
    if (v[0] == 0) s.sigma_pts.keys.push_back(key);
    if (v[0] == 0 && qs == 0) s.quadric_pts.keys.push_back(key);
    if (qs == 0) s.cone_pts.keys.push_back(key);
    for (int i = 0; i < q - 1; ++i)
      if (f.add(f.mul(lambda[i], f.mul(v[0], v[0])), qs) == 0) s.parabolic_pts[i].keys.push_back(key);
  }
  const std::uint64_t qq = static_cast<std::uint64_t>(q);
  require(s.quadric_pts.size() == (qq + 1) * (qq + 1), "even: |H| != (q+1)^2");
  require(s.cone_pts.size() == 1 + qq * (qq + 1) * (qq + 1), "even: cone point count");
  for (int i = 0; i < q - 1; ++i)
    require(s.parabolic_pts[i].size() == (qq * qq + 1) * (qq + 1),
            "even: parabolic quadric point count");

  // the pencil partitions the points as the point-orbit unions do
  {
    const std::uint64_t nkey = pack_key(s.frame.nucleus);
    std::uint64_t b_n = 0, b_ell = 0, b_pi = 0, b_h = 0, b_sigma = 0, b_cone = 0, b_par = 0;
    for (const Subspace& p : all_points) {
      const std::uint64_t key = pack_key(p);
      int buckets = 0;
      if (key == nkey) ++b_n, ++buckets;
      else if (s.ell_pts.contains(key)) ++b_ell, ++buckets;
      else if (s.pi_pts.contains(key)) ++b_pi, ++buckets;
      else if (s.quadric_pts.contains(key)) ++b_h, ++buckets;
      if (buckets) continue;
      if (s.sigma_pts.contains(key)) ++b_sigma, ++buckets;
      if (s.cone_pts.contains(key)) ++b_cone, ++buckets;
      for (int i = 0; i < q - 1; ++i)
        if (s.parabolic_pts[i].contains(key)) ++b_par, ++buckets;
      require(buckets == 1, "even: pencil does not partition the points");
    }
    require(b_n == 1 && b_ell == qq + 1 && b_pi == qq * qq - 1 && b_h == qq * qq + qq &&
                b_sigma == q3 - qq && b_cone == q3 - qq && b_par == (qq - 1) * (q3 - qq),
            "even: pencil bucket counts");
  }

  // lines of Sigma: inside H, tangent, W(3,q), Tset
  const std::vector<Subspace> sigma_lines = subspaces_within(s.frame.sigma, 2);
  for (const Subspace& m : sigma_lines) {
    int on_h = 0, on_h_off_ell = 0;
    for (const Subspace& p : points_of(m)) {
      if (s.quadric_pts.contains(p)) {
        ++on_h;
        if (!s.ell_pts.contains(p)) ++on_h_off_ell;
      }
    }
    if (on_h == q + 1) s.quadric_lines.push_back(m);
    if (on_h == 1 || on_h == q + 1) {
      s.w_lines.push_back(m);
      if (on_h_off_ell == 1) s.tangent_lines.push_back(m);
    }
  }
  require(s.quadric_lines.size() == 2 * (qq + 1), "even: lines inside H != 2(q+1)");
  require(s.w_lines.size() == (qq + 1) * (qq * qq + 1), "even: |W(3,q) lines| != (q+1)(q^2+1)");
  require(s.tangent_lines.size() == q3 - qq, "even: |Tset| != q^3 - q");

  // reguli: connected components of the disjointness graph on the H-lines
  {
    const std::size_t n = s.quadric_lines.size();
    std::vector<int> comp(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
      if (comp[i] >= 0) continue;
      comp[i] = static_cast<int>(i);
      std::vector<std::size_t> stack{i};
      while (!stack.empty()) {
        const std::size_t u = stack.back();
        stack.pop_back();
        for (std::size_t v = 0; v < n; ++v)
          if (comp[v] < 0 && meet_dim(s.quadric_lines[u], s.quadric_lines[v]) == 0) {
            comp[v] = comp[i];
            stack.push_back(v);
          }
      }
    }
    int c_ell = -1;
    for (std::size_t i = 0; i < n; ++i)
      if (s.quadric_lines[i] == s.frame.ell) c_ell = comp[i];
    require(c_ell >= 0, "even: ell is not a line of H");
    for (std::size_t i = 0; i < n; ++i)
      (comp[i] == c_ell ? s.R1 : s.R2).push_back(s.quadric_lines[i]);
    require(s.R1.size() == qq + 1 && s.R2.size() == qq + 1, "even: regulus sizes != q+1");
    for (const auto* reg : {&s.R1, &s.R2})
      for (std::size_t i = 0; i + 1 < reg->size(); ++i)
        for (std::size_t j = i + 1; j < reg->size(); ++j)
          require(meet_dim((*reg)[i], (*reg)[j]) == 0, "even: regulus lines not disjoint");
    for (const Subspace& m1 : s.R1)
      for (const Subspace& m2 : s.R2)
        require(meet_dim(m1, m2) == 1, "even: opposite regulus lines do not meet");
  }

  // Tset is one G-orbit (transitivity on the tangent lines)
  {
    const std::vector<Subspace> orb = orbit(s.tangent_lines.front(), s.group);
    require(orb == s.tangent_lines, "even: Tset is not a single orbit");
  }

  // good line-orbit ids from the plane <N, t0>: its lines through neither
  // the contact point nor N are good, one per orbit
  s.t0 = s.tangent_lines.front();
  const Subspace contact = detail::tangency_point(s, s.t0);
  const Subspace plane_nt = join(s.frame.nucleus, s.t0);
  for (const Subspace& line : subspaces_within(plane_nt, 2)) {
    if (is_subspace_of(contact, line) || is_subspace_of(s.frame.nucleus, line)) continue;
    require(is_good_line(s, line), "even: <N,t> line fails the good-line property");
    s.good_line_ids.push_back(orbit_id(line, s.group));
  }
  std::sort(s.good_line_ids.begin(), s.good_line_ids.end());
  require(std::adjacent_find(s.good_line_ids.begin(), s.good_line_ids.end()) ==
              s.good_line_ids.end(),
          "even: good line-orbit ids not distinct");
  require(s.good_line_ids.size() == qq * qq - qq, "even: good line-orbit count != q^2 - q");
  return s;
}

/// Checks that t^{G2} u {ell} is a regulus of Sigma and returns it.
inline std::vector<Subspace> regulus_check(const EvenScaffold& s, const Subspace& t) {
  using detail::require;
  const Field& f = *s.field;
  const int q = f.q;
  require(std::binary_search(s.tangent_lines.begin(), s.tangent_lines.end(), t),
          "regulus: t not in Tset");
  std::vector<Subspace> reg = orbit_under(t, s.group, s.group.g2);
  reg.push_back(s.frame.ell);
  std::sort(reg.begin(), reg.end());
  reg.erase(std::unique(reg.begin(), reg.end()), reg.end());
  require(reg.size() == static_cast<std::size_t>(q) + 1, "regulus: size != q+1");

  std::vector<std::uint64_t> covered;
  for (std::size_t i = 0; i + 1 < reg.size(); ++i)
    for (std::size_t j = i + 1; j < reg.size(); ++j)
      require(meet_dim(reg[i], reg[j]) == 0, "regulus: lines not disjoint");
  for (const Subspace& m : reg)
    for (const Subspace& p : points_of(m)) covered.push_back(pack_key(p));
  std::sort(covered.begin(), covered.end());
  covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
  require(covered.size() == static_cast<std::size_t>(q + 1) * (q + 1),
          "regulus: covered points != (q+1)^2");

  // three pairwise disjoint transversals
  std::vector<Subspace> transversals;
  for (const Subspace& m : subspaces_within(s.frame.sigma, 2)) {
    bool all = true;
    for (const Subspace& r : reg)
      if (meet_dim(m, r) != 1) {
        all = false;
        break;
      }
    if (all) transversals.push_back(m);
  }
  bool found = false;
  for (std::size_t i = 0; !found && i + 2 < transversals.size(); ++i)
    for (std::size_t j = i + 1; !found && j + 1 < transversals.size(); ++j)
      for (std::size_t k = j + 1; !found && k < transversals.size(); ++k)
        if (meet_dim(transversals[i], transversals[j]) == 0 &&
            meet_dim(transversals[i], transversals[k]) == 0 &&
            meet_dim(transversals[j], transversals[k]) == 0)
          found = true;
  require(found, "regulus: no three pairwise disjoint transversals");
  return reg;
}

/// Orbit of the plane <t, u_prime>: q^3-q planes pairwise meeting in a point.
inline std::vector<Subspace> good_plane_orbit(const EvenScaffold& s, const Subspace& t,
                                              const Subspace& u_prime) {
  using detail::require;
  const Field& f = *s.field;
  const int q = f.q;
  const std::uint64_t q3 = static_cast<std::uint64_t>(q) * q * q;
  require(std::binary_search(s.tangent_lines.begin(), s.tangent_lines.end(), t),
          "good_plane: t not in Tset");
  const Subspace contact = detail::tangency_point(s, t);

  // R: where the R2-line through the contact point meets ell
  const Subspace* through = nullptr;
  for (const Subspace& m : s.R2)
    if (is_subspace_of(contact, m)) {
      require(!through, "good_plane: contact point on two R2 lines");
      through = &m;
    }
  require(through != nullptr, "good_plane: contact point on no R2 line");
  const auto r_pt = meet(*through, s.frame.ell);
  require(r_pt && r_pt->k() == 1, "good_plane: R2 line misses ell");
  const Subspace rn_line = join(*r_pt, s.frame.nucleus);

  if (!(u_prime.k() == 1 && is_subspace_of(u_prime, s.frame.pi) &&
        !is_subspace_of(u_prime, s.frame.ell) && !is_subspace_of(u_prime, rn_line)))
    throw std::invalid_argument("good_plane_orbit: U' outside pi \\ (ell u RN)");

  const Subspace gamma = join(t, u_prime);
  require(gamma.k() == 3, "good_plane: <t, U'> is not a plane");
  std::vector<Subspace> orb = orbit(gamma, s.group);
  require(orb.size() == q3 - static_cast<std::uint64_t>(q), "good_plane: orbit size != q^3 - q");
  for (std::size_t i = 0; i + 1 < orb.size(); ++i)
    for (std::size_t j = i + 1; j < orb.size(); ++j)
      require(meet_dim(orb[i], orb[j]) == 1, "good_plane: two planes do not meet in a point");

  // the representative meets Sigma in t and the cone in a conic
  const auto g_sigma = meet(gamma, s.frame.sigma);
  require(g_sigma && *g_sigma == t, "good_plane: gamma does not meet Sigma in t");
  int on_cone = 0;
  for (const Subspace& p : points_of(gamma))
    if (s.cone_pts.contains(p)) ++on_cone;
  require(on_cone == q + 1, "good_plane: gamma meets the cone in != q+1 points");
  for (const Subspace& line : subspaces_within(gamma, 2)) {
    bool inside = true;
    for (const Subspace& p : points_of(line))
      if (!s.cone_pts.contains(p)) {
        inside = false;
        break;
      }
    require(!inside, "good_plane: gamma meets the cone in a line");
  }
  return orb;
}

/// Ids of the good line-orbits with a member inside gamma: exactly q-1,
/// concurrent at one point of gamma's tangent line.
inline std::vector<Subspace> pencil_coverage(const EvenScaffold& s, const Subspace& gamma) {
  using detail::require;
  const int q = s.field->q;
  const auto t = meet(gamma, s.frame.sigma);
  require(t && t->k() == 2, "coverage: gamma does not meet Sigma in a line");
  const Subspace contact = detail::tangency_point(s, *t);
  const auto u_prime = meet(gamma, s.frame.pi);
  require(u_prime && u_prime->k() == 1, "coverage: gamma does not meet pi in a point");

  std::vector<Subspace> good;
  for (const Subspace& line : subspaces_within(gamma, 2))
    if (is_good_line(s, line)) good.push_back(line);
  require(good.size() == static_cast<std::size_t>(q - 1), "coverage: good lines in gamma != q-1");
  for (const Subspace& line : good) {
    require(!is_subspace_of(contact, line), "coverage: good line through the contact point");
    require(!is_subspace_of(*u_prime, line), "coverage: good line through U'");
  }
  if (good.size() >= 2) {
    const auto common = meet(good[0], good[1]);
    require(common && common->k() == 1, "coverage: good lines not concurrent");
    for (std::size_t i = 0; i + 1 < good.size(); ++i)
      for (std::size_t j = i + 1; j < good.size(); ++j) {
        const auto m = meet(good[i], good[j]);
        require(m && *m == *common, "coverage: good lines not concurrent");
      }
    require(is_subspace_of(*common, *t) && *common != contact,
            "coverage: nucleus not on the tangent line off the contact point");
  }

  std::vector<Subspace> ids;
  for (const Subspace& line : good) ids.push_back(orbit_id(line, s.group));
  std::sort(ids.begin(), ids.end());
  require(std::adjacent_find(ids.begin(), ids.end()) == ids.end(),
          "coverage: covered orbits not distinct");
  for (const Subspace& id : ids)
    require(std::binary_search(s.good_line_ids.begin(), s.good_line_ids.end(), id),
            "coverage: covered orbit is not a good orbit");
  return ids;
}

inline EvenScaffold build_even_scaffold(const Field& f) {
  using detail::require;
  EvenScaffold s = build_even_geometry(f);
  const int q = f.q;

  // lex-least admissible U': re-derive the exclusion line RN for t0
  const Subspace contact = detail::tangency_point(s, s.t0);
  const Subspace* through = nullptr;
  for (const Subspace& m : s.R2)
    if (is_subspace_of(contact, m)) through = &m;
  require(through != nullptr, "even: contact point on no R2 line");
  const auto r_pt = meet(*through, s.frame.ell);
  require(r_pt && r_pt->k() == 1, "even: R2 line misses ell");
  const Subspace rn_line = join(*r_pt, s.frame.nucleus);
  bool found = false;
  for (const Subspace& p : points_of(s.frame.pi)) {
    if (is_subspace_of(p, s.frame.ell) || is_subspace_of(p, rn_line)) continue;
    s.u_prime = p;
    found = true;
    break;
  }
  require(found, "even: no admissible U'");

  s.good_plane = join(s.t0, s.u_prime);
  s.P1 = good_plane_orbit(s, s.t0, s.u_prime);

  const std::vector<Subspace> covered = pencil_coverage(s, s.good_plane);
  found = false;
  for (const Subspace& id : s.good_line_ids) {
    if (std::binary_search(covered.begin(), covered.end(), id)) continue;
    s.good_line_orbit_id = id;
    found = true;
    break;
  }
  require(found, "even: every good line orbit is covered by P1");
  s.L1 = orbit(s.good_line_orbit_id, s.group);
  require(s.L1.size() == static_cast<std::size_t>(q) * q * q - q, "even: |L1| != q^3 - q");

  // L1 u R2 is a partial spread of q^3 + 1 lines
  std::vector<Subspace> spread = s.L1;
  spread.insert(spread.end(), s.R2.begin(), s.R2.end());
  std::sort(spread.begin(), spread.end());
  require(std::adjacent_find(spread.begin(), spread.end()) == spread.end(),
          "even: L1 and R2 overlap");
  for (std::size_t i = 0; i + 1 < spread.size(); ++i)
    for (std::size_t j = i + 1; j < spread.size(); ++j)
      require(meet_dim(spread[i], spread[j]) == 0, "even: L1 u R2 is not a partial spread");

  for (const Subspace& m : s.R1) s.P2.push_back(join(m, s.frame.nucleus));
  std::sort(s.P2.begin(), s.P2.end());
  require(s.P2.size() == static_cast<std::size_t>(q) + 1, "even: |P2| != q+1");
  require(std::binary_search(s.P2.begin(), s.P2.end(), s.frame.pi), "even: pi not in P2");
  return s;
}

namespace detail {

inline std::vector<Subspace> without(std::vector<Subspace> v, const Subspace& x) {
  const auto it = std::find(v.begin(), v.end(), x);
  require(it != v.end(), "assemble_even: expected member missing");
  v.erase(it);
  return v;
}

}  // namespace detail

inline SubspaceCode assemble_code_even(const EvenScaffold& s, CodeType type) {
  using detail::require;
  const Field& f = *s.field;
  const int q = f.q;
  const std::uint64_t q3 = static_cast<std::uint64_t>(q) * q * q;

  // canonical side choices shared by the code variants
  const Subspace pi_prime = join(s.frame.ell, canonicalize(f, make_mat5({{1, 0, 0, 1, 0}})));
  require(pi_prime != s.frame.pi && !is_subspace_of(pi_prime, s.frame.sigma),
          "assemble_even: pi' invalid");
  const Subspace s1_solid = join(s.frame.pi, pi_prime);
  require(s1_solid.k() == 4, "assemble_even: <pi, pi'> is not a solid");
  // lex-least solid through pi distinct from S1
  Subspace s2_solid;
  {
    std::vector<Subspace> cands;
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        if (a == 0 && b == 0) continue;
        Mat m = s.frame.pi.m;
        m.rows = 4;
        m.set(3, 3, a);
        m.set(3, 4, b);
        cands.push_back(canonicalize(f, m));
      }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    require(cands.size() == static_cast<std::size_t>(q) + 1,
            "assemble_even: solids through pi != q+1");
    bool ok = false;
    for (const Subspace& c : cands)
      if (c != s1_solid) {
        s2_solid = c;
        ok = true;
        break;
      }
    require(ok, "assemble_even: no S2");
  }
  const Subspace* r2 = nullptr;
  for (const Subspace& m : s.R2)
    if (is_subspace_of(m, s2_solid)) {
      require(!r2, "assemble_even: two R2 lines inside S2");
      r2 = &m;
    }
  require(r2 != nullptr, "assemble_even: no R2 line inside S2");

  SubspaceCode code;
  code.field = &f;
  code.parity = Parity::even;
  code.type = type;
  auto& w = code.words;
  w.insert(w.end(), s.P1.begin(), s.P1.end());
  w.insert(w.end(), s.L1.begin(), s.L1.end());
  code.choices = {{"tangent_line", s.t0},
                  {"u_prime", s.u_prime},
                  {"good_plane", s.good_plane},
                  {"good_line_orbit_id", s.good_line_orbit_id}};
  code.scalars = {{"alpha", s.alpha}};

  Histogram expected;
  switch (type) {
    case CodeType::IV: {  // P1 u P2 u L1 u R2
      w.insert(w.end(), s.P2.begin(), s.P2.end());
      w.insert(w.end(), s.R2.begin(), s.R2.end());
      expected = {0, q3 + 1, q3 + 1, 0};
      break;
    }
    case CodeType::IVp: {  // pi replaced by pi'
      const auto p2 = detail::without(s.P2, s.frame.pi);
      w.insert(w.end(), p2.begin(), p2.end());
      w.push_back(pi_prime);
      w.insert(w.end(), s.R2.begin(), s.R2.end());
      code.choices.push_back({"pi_prime", pi_prime});
      expected = {0, q3 + 1, q3 + 1, 0};
      break;
    }
    case CodeType::IVpp: {  // P3 = <m, N> for m in R2, with the regulus R1
      for (const Subspace& m : s.R2) w.push_back(join(m, s.frame.nucleus));
      w.insert(w.end(), s.R1.begin(), s.R1.end());
      expected = {0, q3 + 1, q3 + 1, 0};
      break;
    }
    case CodeType::II: {  // solid S2 replaces its R2 line
      const auto p2 = detail::without(s.P2, s.frame.pi);
      w.insert(w.end(), p2.begin(), p2.end());
      w.push_back(pi_prime);
      const auto lines = detail::without(s.R2, *r2);
      w.insert(w.end(), lines.begin(), lines.end());
      w.push_back(s2_solid);
      code.choices.push_back({"pi_prime", pi_prime});
      code.choices.push_back({"s2_solid", s2_solid});
      code.choices.push_back({"r2_line", *r2});
      expected = {0, q3, q3 + 1, 1};
      break;
    }
    case CodeType::III: {  // additionally the point r2 n ell, and no pi'
      const auto p2 = detail::without(s.P2, s.frame.pi);
      w.insert(w.end(), p2.begin(), p2.end());
      const auto lines = detail::without(s.R2, *r2);
      w.insert(w.end(), lines.begin(), lines.end());
      w.push_back(s2_solid);
      const auto v2 = meet(*r2, s.frame.ell);
      require(v2 && v2->k() == 1, "assemble_even: r2 misses ell");
      w.push_back(*v2);
      code.choices.push_back({"s2_solid", s2_solid});
      code.choices.push_back({"r2_line", *r2});
      expected = {1, q3, q3, 1};
      break;
    }
    case CodeType::I: {  // P3 minus a plane, R1 minus ell, plus r and a point
      Subspace r_line;
      bool ok = false;
      for (const Subspace& line : subspaces_within(s.frame.pi, 2))
        if (line != s.frame.ell && !is_subspace_of(s.frame.nucleus, line)) {
          r_line = line;
          ok = true;
          break;
        }
      require(ok, "assemble_even: no line of pi avoiding N");
      const auto v_pt = meet(s.frame.ell, r_line);
      require(v_pt && v_pt->k() == 1, "assemble_even: r misses ell");
      std::vector<Subspace> p3;
      for (const Subspace& m : s.R2) p3.push_back(join(m, s.frame.nucleus));
      std::sort(p3.begin(), p3.end());
      const Subspace* tau = nullptr;
      for (const Subspace& pl : p3)
        if (!is_subspace_of(*v_pt, pl)) {
          tau = &pl;
          break;
        }
      require(tau != nullptr, "assemble_even: no plane of P3 avoiding V");
      const auto v_prime = meet(*tau, s.frame.ell);
      require(v_prime && v_prime->k() == 1, "assemble_even: tau misses ell");
      for (const Subspace& pl : p3)
        if (pl != *tau) w.push_back(pl);
      const auto lines = detail::without(s.R1, s.frame.ell);
      w.insert(w.end(), lines.begin(), lines.end());
      w.push_back(r_line);
      w.push_back(*v_prime);
      code.choices.push_back({"r_line", r_line});
      code.choices.push_back({"tau_plane", *tau});
      code.choices.push_back({"v_prime", *v_prime});
      expected = {1, q3 + 1, q3, 0};
      break;
    }
  }

  std::sort(w.begin(), w.end());
  require(std::adjacent_find(w.begin(), w.end()) == w.end(), "assemble_even: duplicate codeword");
  require(w.size() == 2 * (q3 + 1), "assemble_even: |C| != 2(q^3+1)");
  require(histogram_of(w) == expected, "assemble_even: composition does not match the type table");
  require(min_distance(code).min_dist == 3, "assemble_even: minimum distance != 3");
  return code;
}

// ---------------------------------------------------------------------------
// Klein-quadric diagnostic: transports a good line orbit of the hyperplane
// S' = {X1 = 0} of PG(5,q) through the polarity of X1 X6 + X2 X5 + X3 X4 = 0
// and checks that the images form a good plane orbit of S = {X6 = 0}.

struct KleinReport {
  std::vector<CheckResult> checks;
  bool ok = true;
};

namespace detail {

inline Mat klein_gram() {
  Mat j;
  j.rows = j.cols = 6;
  j.set(0, 5, 1);
  j.set(5, 0, 1);
  j.set(1, 4, 1);
  j.set(4, 1, 1);
  j.set(2, 3, 1);
  j.set(3, 2, 1);
  return j;
}

inline Subspace klein_perp(const Subspace& u, const Mat& gram) {
  Mat polar = mat_mul(u.m, gram, *u.field);
  return Subspace{u.field, kernel_basis(polar, *u.field)};
}

inline int klein_value(const Field& f, const Subspace& pt) {
  const auto& v = pt.m.a[0];
  return f.add(f.add(f.mul(v[0], v[5]), f.mul(v[1], v[4])), f.mul(v[2], v[3]));
}

}  // namespace detail

inline KleinReport klein_cross_check(const EvenScaffold& s) {
  const Field& f = *s.field;
  const int q = f.q;
  if (q != 2 && q != 4)
    throw std::invalid_argument("klein_cross_check supports q in {2,4}");
  const std::uint64_t expect = static_cast<std::uint64_t>(q) * q * q - q;

  KleinReport rep;
  const auto check = [&rep](const std::string& name, bool pass, const std::string& detail = "") {
    rep.checks.push_back(CheckResult{name, pass, detail});
    rep.ok = rep.ok && pass;
  };

  // lex-least good line of S, re-coordinatized into S' (X1 -> X6)
  Subspace good5;
  bool found = false;
  for (const Subspace& line : enumerate_subspaces(f, 2))
    if (is_good_line(s, line)) {
      good5 = line;
      found = true;
      break;
    }
  check("klein.good_line_found", found);
  if (!found) return rep;

  Mat primed;
  primed.rows = 2;
  primed.cols = 6;
  for (int r = 0; r < 2; ++r) {
    for (int c = 1; c < 5; ++c) primed.set(r, c, good5.m.at(r, c));
    primed.set(r, 5, good5.m.at(r, 0));
  }
  const Subspace r_line = canonicalize(f, primed);
  Mat n6m;
  n6m.rows = 1;
  n6m.cols = 6;
  n6m.set(0, 0, 1);
  const Subspace n6 = canonicalize(f, n6m);
  const Subspace sigma_plane = join(n6, r_line);
  check("klein.sigma_is_plane", sigma_plane.k() == 3);

  std::vector<Mat> gbar;
  gbar.reserve(s.group.size());
  for (const auto& e : s.group.elems) {
    Mat m = e.m;
    m.rows = m.cols = 6;
    m.set(5, 5, 1);
    gbar.push_back(m);
  }
  const std::vector<Subspace> sigma_orbit = orbit(sigma_plane, gbar);
  check("klein.sigma_orbit_size", sigma_orbit.size() == expect,
        std::to_string(sigma_orbit.size()));
  bool meets_in_n = true;
  for (std::size_t i = 0; i + 1 < sigma_orbit.size() && meets_in_n; ++i)
    for (std::size_t j = i + 1; j < sigma_orbit.size(); ++j) {
      const auto m = meet(sigma_orbit[i], sigma_orbit[j]);
      if (!(m && *m == n6)) {
        meets_in_n = false;
        break;
      }
    }
  check("klein.sigma_planes_meet_in_n", meets_in_n);

  // sigma n K is a conic: q+1 points, no line
  const Mat gram = detail::klein_gram();
  {
    int on_k = 0;
    for (const Subspace& p : points_of(sigma_plane))
      if (detail::klein_value(f, p) == 0) ++on_k;
    bool line_inside = false;
    for (const Subspace& line : subspaces_within(sigma_plane, 2)) {
      bool inside = true;
      for (const Subspace& p : points_of(line))
        if (detail::klein_value(f, p) != 0) {
          inside = false;
          break;
        }
      if (inside) line_inside = true;
    }
    check("klein.conic_points", on_k == q + 1, std::to_string(on_k));
    check("klein.conic_no_line", !line_inside);
  }

  // polarity images: planes of S, pairwise meeting in a point
  std::vector<Subspace> images;
  bool involution = true, in_s = true;
  for (const Subspace& x : sigma_orbit) {
    const Subspace px = detail::klein_perp(x, gram);
    if (!(detail::klein_perp(px, gram) == x)) involution = false;
    for (int r = 0; r < px.m.rows; ++r)
      if (px.m.at(r, 5) != 0) in_s = false;
    Mat five = px.m;
    five.cols = 5;
    images.push_back(canonicalize(f, five));
  }
  check("klein.polarity_involution", involution);
  check("klein.images_in_s", in_s);
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  check("klein.image_count", images.size() == expect, std::to_string(images.size()));
  bool pairwise_point = true;
  for (std::size_t i = 0; i + 1 < images.size() && pairwise_point; ++i)
    for (std::size_t j = i + 1; j < images.size(); ++j)
      if (meet_dim(images[i], images[j]) != 1) {
        pairwise_point = false;
        break;
      }
  check("klein.images_pairwise_point", pairwise_point);

  // the image set is exactly a directly constructed good plane orbit
  try {
    const Subspace& gamma0 = images.front();
    const auto t = meet(gamma0, s.frame.sigma);
    const auto up = meet(gamma0, s.frame.pi);
    bool match = false;
    if (t && t->k() == 2 && up && up->k() == 1) {
      const std::vector<Subspace> direct = good_plane_orbit(s, *t, *up);
      match = direct == images;
    }
    check("klein.matches_direct_orbit", match);
  } catch (const std::exception& e) {
    check("klein.matches_direct_orbit", false, e.what());
  }
  return rep;
}

}  // namespace pg4code
