#include <catch2/catch.hpp>

#include <pg4code/construct_even.hpp>

using namespace pg4code;

TEST_CASE("even geometry at q=2") {
  const Field f = make_field(2, 1);
  const EvenScaffold s = build_even_scaffold(f);

  CHECK(s.quadric_pts.size() == 9);     // (q+1)^2
  CHECK(s.cone_pts.size() == 19);       // 1 + q(q+1)^2
  CHECK(s.parabolic_pts.size() == 1);
  CHECK(s.parabolic_pts[0].size() == 15);  // (q^2+1)(q+1)
  CHECK(s.w_lines.size() == 15);           // (q+1)(q^2+1)
  CHECK(s.tangent_lines.size() == 6);      // q^3 - q
  CHECK(s.quadric_lines.size() == 6);
  CHECK(s.R1.size() == 3);
  CHECK(s.R2.size() == 3);
  CHECK(std::find(s.R1.begin(), s.R1.end(), s.frame.ell) != s.R1.end());
  CHECK(s.good_line_ids.size() == 2);  // q^2 - q

  // the lex-least tangent line and its orbit
  CHECK(s.t0 == s.tangent_lines.front());
  CHECK(orbit(s.t0, s.group) == s.tangent_lines);

  CHECK(s.P1.size() == 6);
  CHECK(s.P2.size() == 3);
  CHECK(s.L1.size() == 6);
}

TEST_CASE("regulus from the tangent-line orbit under G2") {
  for (int h : {1, 2}) {
    const Field f = make_field(2, h);
    const EvenScaffold s = build_even_scaffold(f);
    INFO("q = " << f.q);
    const std::vector<Subspace> reg = regulus_check(s, s.t0);
    CHECK(reg.size() == static_cast<std::size_t>(f.q) + 1);
    CHECK(std::find(reg.begin(), reg.end(), s.frame.ell) != reg.end());
    for (const Subspace& m : reg) CHECK(is_subspace_of(m, s.frame.sigma));
    // a non-tangent line is rejected by name
    CHECK_THROWS_AS(regulus_check(s, s.frame.ell), invariant_violation);
  }
}

TEST_CASE("good plane orbit and pencil coverage at q=2") {
  const Field f = make_field(2, 1);
  const EvenScaffold s = build_even_scaffold(f);

  const std::vector<Subspace> orb = good_plane_orbit(s, s.t0, s.u_prime);
  CHECK(orb.size() == 6);
  CHECK(orb == s.P1);
  for (std::size_t i = 0; i + 1 < orb.size(); ++i)
    for (std::size_t j = i + 1; j < orb.size(); ++j)
      CHECK(meet_dim(orb[i], orb[j]) == 1);

  // every plane of the orbit meets Sigma in a tangent line and the cone in
  // a conic (q+1 points, no line)
  for (const Subspace& plane : orb) {
    const auto t = meet(plane, s.frame.sigma);
    REQUIRE(t);
    CHECK(std::binary_search(s.tangent_lines.begin(), s.tangent_lines.end(), *t));
    int on_cone = 0;
    for (const Subspace& p : points_of(plane))
      if (s.cone_pts.contains(p)) ++on_cone;
    CHECK(on_cone == f.q + 1);
  }

  const std::vector<Subspace> covered = pencil_coverage(s, s.good_plane);
  CHECK(covered.size() == 1);  // q - 1
  CHECK(std::binary_search(s.good_line_ids.begin(), s.good_line_ids.end(), covered.front()));
  CHECK(covered.front() != s.good_line_orbit_id);

  // a U' on ell violates the exclusion set
  CHECK_THROWS_AS(good_plane_orbit(s, s.t0, points_of(s.frame.ell).front()),
                  std::invalid_argument);
}

TEST_CASE("even geometry at q=4") {
  const Field f = make_field(2, 2);
  const EvenScaffold s = build_even_scaffold(f);
  CHECK(s.quadric_pts.size() == 25);
  CHECK(s.w_lines.size() == 85);
  CHECK(s.tangent_lines.size() == 60);
  CHECK(s.good_line_ids.size() == 12);
  CHECK(s.P1.size() == 60);
  CHECK(pencil_coverage(s, s.good_plane).size() == 3);  // q - 1
}

TEST_CASE("even assembly: all six variants at q=2") {
  const Field f = make_field(2, 1);
  const EvenScaffold s = build_even_scaffold(f);

  const struct {
    CodeType type;
    Histogram hist;
  } expected[] = {
      {CodeType::I, {1, 9, 8, 0}},    {CodeType::II, {0, 8, 9, 1}},
      {CodeType::III, {1, 8, 8, 1}},  {CodeType::IV, {0, 9, 9, 0}},
      {CodeType::IVp, {0, 9, 9, 0}},  {CodeType::IVpp, {0, 9, 9, 0}},
  };
  for (const auto& e : expected) {
    const SubspaceCode code = assemble_code_even(s, e.type);
    INFO("type " << to_string(e.type));
    CHECK(code.words.size() == 18);
    CHECK(histogram_of(code.words) == e.hist);
    CHECK(min_distance(code).min_dist == 3);
  }

  // the three IV variants are genuinely different codes
  const auto w1 = assemble_code_even(s, CodeType::IV).words;
  const auto w2 = assemble_code_even(s, CodeType::IVp).words;
  const auto w3 = assemble_code_even(s, CodeType::IVpp).words;
  CHECK(w1 != w2);
  CHECK(w1 != w3);
  CHECK(w2 != w3);
}

TEST_CASE("even assembly at q=4") {
  const Field f = make_field(2, 2);
  const EvenScaffold s = build_even_scaffold(f);
  for (CodeType t : {CodeType::IV, CodeType::II}) {
    const SubspaceCode code = assemble_code_even(s, t);
    CHECK(code.words.size() == 130);
    CHECK(min_distance(code).min_dist == 3);
  }
}

TEST_CASE("Klein polarity cross check") {
  for (int h : {1, 2}) {
    const Field f = make_field(2, h);
    const EvenScaffold s = build_even_scaffold(f);
    const KleinReport rep = klein_cross_check(s);
    INFO("q = " << f.q);
    for (const CheckResult& c : rep.checks) {
      INFO(c.name << " " << c.detail);
      CHECK(c.pass);
    }
    CHECK(rep.ok);
  }
  CHECK_THROWS_AS(klein_cross_check(build_even_scaffold(make_field(2, 3))),
                  std::invalid_argument);
}

TEST_CASE("even geometry rejects odd q") {
  CHECK_THROWS_AS(build_even_geometry(make_field(3, 1)), std::invalid_argument);
}
