#include <catch2/catch.hpp>

#include <set>

#include <pg4code/group.hpp>

using namespace pg4code;

namespace {

Mat identity5() {
  Mat m;
  m.rows = m.cols = 5;
  for (int i = 0; i < 5; ++i) m.set(i, i, 1);
  return m;
}

std::set<std::array<std::uint8_t, 25>> element_keys(const Group& g) {
  std::set<std::array<std::uint8_t, 25>> keys;
  for (const auto& e : g.elems) keys.insert(detail::mat5_bytes(e.m));
  return keys;
}

void check_closure(const Field& f, const Group& g) {
  const auto keys = element_keys(g);
  REQUIRE(keys.size() == g.size());
  for (const auto& a : g.elems)
    for (const auto& b : g.elems)
      REQUIRE(keys.count(detail::mat5_bytes(mat_mul(a.m, b.m, f))) == 1);
}

const GroupElement& element_with_label(const Group& g, std::array<int, 4> label) {
  for (const auto& e : g.elems)
    if (e.label == label) return e;
  throw std::logic_error("label not found");
}

}  // namespace

TEST_CASE("odd group structure at q=3") {
  const Field f = make_field(3, 1);
  const Group g = build_group_odd(f, find_irreducible_cubic(f));
  REQUIRE(g.size() == 27);
  CHECK(mat_equal(element_with_label(g, {0, 0, 0, 0}).m, identity5()));

  // every non-identity element has order p
  for (const auto& e : g.elems) {
    Mat cube = mat_mul(mat_mul(e.m, e.m, f), e.m, f);
    CHECK(mat_equal(cube, identity5()));
    if (!(e.label == std::array<int, 4>{0, 0, 0, 0}))
      CHECK(!mat_equal(mat_mul(e.m, e.m, f), identity5()));
  }

  // the n-th power law at n=2: M_{1,1,0}^2 = M_{2,2,2}
  const Mat& m110 = element_with_label(g, {1, 1, 0, 0}).m;
  CHECK(mat_equal(mat_mul(m110, m110, f), element_with_label(g, {2, 2, 2, 0}).m));

  check_closure(f, g);
}

TEST_CASE("odd group closure at q=5") {
  const Field f = make_field(5, 1);
  const Group g = build_group_odd(f, find_irreducible_cubic(f));
  REQUIRE(g.size() == 125);
  check_closure(f, g);
}

TEST_CASE("odd group rejects even characteristic and reducible cubics") {
  const Field f = make_field(2, 1);
  CHECK_THROWS_AS(build_group_odd(f, {0, 1, 1}), std::invalid_argument);
  // X^3 has the root 0, so the named invariant trips
  const Field f3 = make_field(3, 1);
  CHECK_THROWS_AS(build_group_odd(f3, {0, 0, 0}), invariant_violation);
}

TEST_CASE("even group structure at q=2 and q=4") {
  for (int h : {1, 2}) {
    const Field f = make_field(2, h);
    const int q = f.q;
    INFO("q = " << q);
    const int alpha = find_quadratic_alpha(f);

    // q+1 solutions of the norm condition
    int norm_one = 0;
    for (int c = 0; c < q; ++c)
      for (int d = 0; d < q; ++d)
        if (f.add(f.add(f.mul(c, c), f.mul(c, d)), f.mul(alpha, f.mul(d, d))) == 1) ++norm_one;
    CHECK(norm_one == q + 1);

    const Group g = build_group_even(f, alpha);
    REQUIRE(g.size() == static_cast<std::size_t>(q) * q * q - q);
    CHECK(mat_equal(element_with_label(g, {1, 0, 1, 0}).m, identity5()));
    CHECK(g.g1.size() == static_cast<std::size_t>(q) + 1);
    CHECK(g.g2.size() == static_cast<std::size_t>(q));
    CHECK(g.g3.size() == static_cast<std::size_t>(q) - 1);
    check_closure(f, g);
  }
  CHECK_THROWS_AS(build_group_even(make_field(3, 1), 1), std::invalid_argument);
}

TEST_CASE("orbits of the named subspaces") {
  const Field f = make_field(3, 1);
  const Group g = build_group_odd(f, find_irreducible_cubic(f));
  const OddFrame fr = frame_odd(f);

  // ell is fixed linewise
  CHECK(orbit(fr.ell, g) == std::vector<Subspace>{fr.ell});

  // a point off pi in a solid through pi has a regular orbit
  const Subspace p = canonicalize(f, make_mat5({{0, 0, 0, 1, 1}}));
  CHECK(orbit(p, g).size() == 27);

  // orbit-stabilizer on a few representatives
  for (const Subspace& u :
       {fr.pi, p, canonicalize(f, make_mat5({{0, 0, 1, 0, 0}})),
        canonicalize(f, make_mat5({{1, 0, 0, 1, 0}, {0, 1, 0, 0, 1}}))}) {
    std::size_t stab = 0;
    for (const auto& e : g.elems)
      if (apply(e.m, u) == u) ++stab;
    CHECK(orbit(u, g).size() * stab == g.size());
  }

  const Field f2 = make_field(2, 1);
  const Group ge = build_group_even(f2, find_quadratic_alpha(f2));
  const EvenFrame fe = frame_even(f2);
  CHECK(orbit(fe.nucleus, ge) == std::vector<Subspace>{fe.nucleus});
}

TEST_CASE("point and line orbit censuses") {
  const Field f3 = make_field(3, 1);
  const Group g3 = build_group_odd(f3, find_irreducible_cubic(f3));

  auto sizes = [](const std::vector<OrbitCensusEntry>& census) {
    std::vector<std::uint64_t> v;
    for (const auto& e : census) v.push_back(e.size);
    std::sort(v.begin(), v.end());
    return v;
  };

  CHECK(sizes(orbit_census(f3, g3, 1)) ==
        std::vector<std::uint64_t>{1, 1, 1, 1, 9, 27, 27, 27, 27});

  // q^3 orbits of size q^3 consisting of lines disjoint from pi
  const OddFrame fr = frame_odd(f3);
  std::uint64_t disjoint = 0;
  for (const auto& e : orbit_census(f3, g3, 2))
    if (e.size == 27 && meet_dim(e.rep, fr.pi) == 0) ++disjoint;
  CHECK(disjoint == 27);

  const Field f2 = make_field(2, 1);
  const Group g2 = build_group_even(f2, find_quadratic_alpha(f2));
  CHECK(sizes(orbit_census(f2, g2, 1)) == std::vector<std::uint64_t>{1, 3, 3, 6, 6, 6, 6});
}
