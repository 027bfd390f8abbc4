// Acceptance suite: one pass/fail line per criterion.  Criteria 1-9 drive
// the library directly; criterion 10 drives the real CLI binary, whose path
// comes from the PG4CODE_CLI environment variable (ctest sets it).

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include <pg4code/pg4code.hpp>

using namespace pg4code;
using Clock = std::chrono::steady_clock;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool cond, const std::string& what) {
  if (!cond) throw Failure(what);
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// shared state so later criteria reuse earlier constructions
std::map<int, Field> g_fields;
std::map<int, OddScaffold> g_odd;
std::map<int, EvenScaffold> g_even;
std::map<std::pair<int, std::string>, SubspaceCode> g_codes;

const Field& field_for(int q) {
  if (!g_fields.count(q)) {
    int p = 2;
    while (q % p != 0) ++p;
    int h = 0, v = q;
    while (v % p == 0) {
      v /= p;
      ++h;
    }
    g_fields.emplace(q, make_field(p, h));
  }
  return g_fields.at(q);
}

std::vector<std::string> types_for(int q) {
  if (q % 2 == 1) return {"I", "II", "III", "IV"};
  return {"I", "II", "III", "IV", "IV'", "IV''"};
}

const SubspaceCode& code_for(int q, const std::string& type) {
  const auto key = std::make_pair(q, type);
  if (!g_codes.count(key)) {
    const Field& f = field_for(q);
    if (q % 2 == 1) {
      if (!g_odd.count(q)) g_odd.emplace(q, build_scaffold_odd(f));
      g_codes.emplace(key, assemble_code_odd(g_odd.at(q), code_type_from_string(type)));
    } else {
      if (!g_even.count(q)) g_even.emplace(q, build_even_scaffold(f));
      g_codes.emplace(key, assemble_code_even(g_even.at(q), code_type_from_string(type)));
    }
  }
  return g_codes.at(key);
}

std::multiset<std::uint64_t> census_sizes(const std::vector<OrbitCensusEntry>& census) {
  std::multiset<std::uint64_t> s;
  for (const auto& e : census) s.insert(e.size);
  return s;
}

// ---------------------------------------------------------------------- 1
void crit_sizes() {
  const std::map<int, std::size_t> expected = {{2, 18}, {3, 56}, {4, 130}, {5, 252}};
  for (const auto& [q, size] : expected)
    for (const std::string& type : types_for(q)) {
      const auto start = Clock::now();
      const SubspaceCode& code = code_for(q, type);
      expect(code.words.size() == size,
             "q=" + std::to_string(q) + " type " + type + ": size " +
                 std::to_string(code.words.size()) + " != " + std::to_string(size));
      expect(seconds_since(start) < 10.0,
             "q=" + std::to_string(q) + " type " + type + " exceeded 10 s");
    }
}

// ---------------------------------------------------------------------- 2
void crit_min_distance() {
  const auto start = Clock::now();
  for (int q : {2, 3, 4, 5})
    for (const std::string& type : types_for(q)) {
      const SubspaceCode& code = code_for(q, type);
      const DistanceScan scan = min_distance(code);
      expect(scan.min_dist == 3, "q=" + std::to_string(q) + " type " + type + ": d != 3");
      expect(subspace_distance(code.words[scan.wa], code.words[scan.wb]) == 3,
             "witness pair is not at distance 3");
      for (std::size_t i = 0; i + 1 < code.words.size(); ++i)
        for (std::size_t j = i + 1; j < code.words.size(); ++j) {
          const int ki = code.words[i].k(), kj = code.words[j].k();
          if ((ki == 2 && kj == 2) || (ki == 3 && kj == 3))
            expect(subspace_distance(code.words[i], code.words[j]) >= 4,
                   "same-dimension pair below distance 4");
        }
    }
  expect(seconds_since(start) < 30.0, "distance scans exceeded 30 s");
}

// ---------------------------------------------------------------------- 3
void crit_odd_point_census() {
  const auto start = Clock::now();
  for (int q : {3, 5}) {
    const Field& f = field_for(q);
    if (!g_odd.count(q)) g_odd.emplace(q, build_scaffold_odd(f));
    const auto census = orbit_census(f, g_odd.at(q).group, 1);
    std::multiset<std::uint64_t> want;
    for (int i = 0; i < q + 1; ++i) want.insert(1);
    want.insert(static_cast<std::uint64_t>(q) * q);
    for (int i = 0; i < q + 1; ++i) want.insert(static_cast<std::uint64_t>(q) * q * q);
    expect(census_sizes(census) == want, "q=" + std::to_string(q) + ": point census mismatch");
  }
  expect(seconds_since(start) < 10.0, "odd point censuses exceeded 10 s");
}

// ---------------------------------------------------------------------- 4
void crit_odd_line_census() {
  const auto start = Clock::now();
  const int q = 3;
  const Field& f = field_for(q);
  if (!g_odd.count(q)) g_odd.emplace(q, build_scaffold_odd(f));
  const Group& g = g_odd.at(q).group;
  const OddFrame frame = frame_odd(f);
  const std::uint64_t q3 = 27;

  std::uint64_t fixed = 0, in_pi = 0, through_ell = 0, meets_pi = 0, disjoint = 0;
  for (const auto& e : orbit_census(f, g, 2)) {
    const int dp = meet_dim(e.rep, frame.pi);
    if (e.size == 1) {
      expect(e.rep == frame.ell, "unexpected fixed line");
      ++fixed;
    } else if (e.size == 3) {
      expect(dp == 2, "size-q orbit not inside pi");
      ++in_pi;
    } else if (e.size == 9) {
      expect(meet_dim(e.rep, frame.ell) == 1, "size-q^2 orbit not through ell");
      ++through_ell;
    } else if (e.size == q3 && dp == 1) {
      expect(meet_dim(e.rep, frame.ell) == 0, "size-q^3 orbit through ell");
      ++meets_pi;
    } else if (e.size == q3 && dp == 0) {
      ++disjoint;
      const auto orb = orbit(e.rep, g);
      for (std::size_t i = 0; i + 1 < orb.size(); ++i)
        for (std::size_t j = i + 1; j < orb.size(); ++j)
          expect(meet_dim(orb[i], orb[j]) == 0, "disjoint-from-pi orbit is not a spread");
    } else {
      throw Failure("unexpected line orbit of size " + std::to_string(e.size));
    }
  }
  expect(fixed == 1 && in_pi == 4 && through_ell == 16 && meets_pi == 12 && disjoint == 27,
         "line census counts mismatch");
  expect(seconds_since(start) < 60.0, "odd line census exceeded 60 s");
}

// ---------------------------------------------------------------------- 5
void crit_even_point_census() {
  const auto start = Clock::now();
  for (int q : {2, 4}) {
    const Field& f = field_for(q);
    if (!g_even.count(q)) g_even.emplace(q, build_even_scaffold(f));
    const auto census = orbit_census(f, g_even.at(q).group, 1);
    std::multiset<std::uint64_t> want{1, static_cast<std::uint64_t>(q) + 1,
                                      static_cast<std::uint64_t>(q) * q - 1,
                                      static_cast<std::uint64_t>(q) * q + q};
    for (int i = 0; i < q + 1; ++i) want.insert(static_cast<std::uint64_t>(q) * q * q - q);
    expect(census_sizes(census) == want, "q=" + std::to_string(q) + ": point census mismatch");
  }
  expect(seconds_since(start) < 30.0, "even point censuses exceeded 30 s");
}

// ---------------------------------------------------------------------- 6
void crit_good_structures() {
  const auto start = Clock::now();
  for (int q : {2, 4}) {
    const Field& f = field_for(q);
    if (!g_even.count(q)) g_even.emplace(q, build_even_scaffold(f));
    const EvenScaffold& s = g_even.at(q);
    const std::uint64_t good_count = static_cast<std::uint64_t>(q) * q - q;
    const std::uint64_t good_size = static_cast<std::uint64_t>(q) * q * q - q;

    // exactly q^2-q good line orbits, each q^3-q mutually disjoint lines
    std::vector<Subspace> ids;
    for (const auto& e : orbit_census(f, s.group, 2)) {
      if (!is_good_line(s, e.rep)) continue;
      expect(e.size == good_size, "good orbit of wrong size");
      ids.push_back(e.rep);
      const auto orb = orbit(e.rep, s.group);
      for (std::size_t i = 0; i + 1 < orb.size(); ++i)
        for (std::size_t j = i + 1; j < orb.size(); ++j)
          expect(meet_dim(orb[i], orb[j]) == 0, "good orbit is not a partial spread");
    }
    std::sort(ids.begin(), ids.end());
    expect(ids.size() == good_count, "good line-orbit count != q^2-q");
    expect(ids == s.good_line_ids, "good orbits differ from the recipe ids");

    // the constructed good plane orbit
    expect(s.P1.size() == good_size, "|P1| != q^3-q");
    for (std::size_t i = 0; i + 1 < s.P1.size(); ++i)
      for (std::size_t j = i + 1; j < s.P1.size(); ++j)
        expect(meet_dim(s.P1[i], s.P1[j]) == 1, "P1 planes do not meet in a point");

    // each good plane covers exactly q-1 good line orbits, the same set
    // for every member of the orbit
    const std::vector<Subspace> covered = pencil_coverage(s, s.good_plane);
    expect(covered.size() == static_cast<std::size_t>(q) - 1, "pencil coverage != q-1");
    for (const Subspace& plane : s.P1)
      expect(pencil_coverage(s, plane) == covered, "coverage differs across the orbit");
  }
  expect(seconds_since(start) < 60.0, "good structures exceeded 60 s");
}

// ---------------------------------------------------------------------- 7
void crit_regulus_and_tangents() {
  const auto start = Clock::now();
  for (int q : {2, 4}) {
    const Field& f = field_for(q);
    if (!g_even.count(q)) g_even.emplace(q, build_even_scaffold(f));
    const EvenScaffold& s = g_even.at(q);
    const std::vector<Subspace> reg = regulus_check(s, s.t0);
    expect(reg.size() == static_cast<std::size_t>(q) + 1, "regulus size != q+1");
    expect(orbit(s.t0, s.group) == s.tangent_lines, "Tset is not a single G-orbit");
    expect(s.tangent_lines.size() == static_cast<std::size_t>(q) * q * q - q,
           "|Tset| != q^3-q");
  }
  expect(seconds_since(start) < 30.0, "regulus/tangent checks exceeded 30 s");
}

// ---------------------------------------------------------------------- 8
void crit_klein() {
  const auto start = Clock::now();
  const Field& f = field_for(2);
  if (!g_even.count(2)) g_even.emplace(2, build_even_scaffold(f));
  const KleinReport rep = klein_cross_check(g_even.at(2));
  for (const CheckResult& c : rep.checks)
    expect(c.pass, "klein check failed: " + c.name + " " + c.detail);
  expect(seconds_since(start) < 10.0, "klein cross check exceeded 10 s");
}

// ---------------------------------------------------------------------- 9
void crit_scale() {
  {
    const auto start = Clock::now();
    const Field& f = field_for(7);
    const SubspaceCode code = assemble_code_odd(build_scaffold_odd(f), CodeType::IV);
    expect(code.words.size() == 2 * (343 + 1), "q=7: wrong size");
    expect(min_distance(code).min_dist == 3, "q=7: d != 3");
    expect(seconds_since(start) < 300.0, "q=7 exceeded 5 minutes");
  }
  {
    const auto start = Clock::now();
    const Field& f = field_for(8);
    const SubspaceCode code = assemble_code_even(build_even_scaffold(f), CodeType::IV);
    expect(code.words.size() == 2 * (512 + 1), "q=8: wrong size");
    expect(min_distance(code).min_dist == 3, "q=8: d != 3");
    expect(seconds_since(start) < 300.0, "q=8 exceeded 5 minutes");
  }
}

// --------------------------------------------------------------------- 10
int run_cli(const std::string& cmd) {
  const int rc = std::system(cmd.c_str());
  if (rc == -1) throw Failure("system() failed");
  return WEXITSTATUS(rc);
}

void crit_round_trip() {
  const auto start = Clock::now();
  const char* cli_env = std::getenv("PG4CODE_CLI");
  expect(cli_env != nullptr, "PG4CODE_CLI not set (point it at the CLI binary)");
  const std::string cli = std::string("\"") + cli_env + "\"";

  for (int q : {2, 3, 4, 5})
    for (const std::string& type : types_for(q)) {
      const std::string path = "acc_q" + std::to_string(q) + ".json";
      expect(run_cli(cli + " generate --q " + std::to_string(q) + " --type \"" + type +
                     "\" --out " + path + " > /dev/null") == 0,
             "generate exit != 0 for q=" + std::to_string(q) + " " + type);
      expect(run_cli(cli + " verify --in " + path + " > /dev/null") == 0,
             "verify exit != 0 for q=" + std::to_string(q) + " " + type);
      std::remove(path.c_str());
    }

  // usage errors: not a prime power -> 2; a valid code fails --expect-d 4
  expect(run_cli(cli + " generate --q 6 --out acc_bad.json 2> /dev/null") == 2,
         "generate --q 6 did not exit 2");

  // corrupt one codeword of a q=2 file to a sub-line of a code plane;
  // verification must fail with a witness at distance 1
  const std::string path = "acc_corrupt.json";
  expect(run_cli(cli + " generate --q 2 --type IV --out " + path + " > /dev/null") == 0,
         "generate for corruption test failed");
  expect(run_cli(cli + " verify --in " + path + " --expect-d 4 > /dev/null") == 1,
         "verify --expect-d 4 on a d=3 code did not exit 1");
  {
    const LoadedCode loaded = load_codefile(path);
    SubspaceCode bad = loaded.code;
    const auto plane = std::find_if(bad.words.begin(), bad.words.end(),
                                    [](const Subspace& w) { return w.k() == 3; });
    const Subspace sub_line = subspaces_within(*plane, 2).front();
    const auto line = std::find_if(bad.words.begin(), bad.words.end(),
                                   [](const Subspace& w) { return w.k() == 2; });
    *line = sub_line;
    std::sort(bad.words.begin(), bad.words.end());
    write_codefile(bad, path);
  }
  expect(run_cli(cli + " verify --in " + path + " > acc_report.json") == 1,
         "verify of a corrupted file did not exit 1");
  {
    std::ifstream in("acc_report.json");
    nlohmann::json rep;
    in >> rep;
    expect(rep.at("min_distance").get<int>() == 1, "report does not show d = 1");
    expect(rep.at("witness").at("distance").get<int>() == 1, "witness is not at distance 1");
    expect(rep.at("ok").get<bool>() == false, "report claims ok");
  }
  std::remove(path.c_str());
  std::remove("acc_report.json");
  expect(seconds_since(start) < 10.0, "round trips exceeded 10 s");
}

struct Criterion {
  std::string name;
  std::function<void()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"code sizes 2(q^3+1) for q in {2,3,4,5}, every type", crit_sizes},
      {"minimum distance exactly 3 with witness; line and plane pairs at >= 4",
       crit_min_distance},
      {"odd point orbit census at q in {3,5}", crit_odd_point_census},
      {"odd line orbit census at q=3 with partial-spread orbits", crit_odd_line_census},
      {"even point orbit census at q in {2,4}", crit_even_point_census},
      {"good line/plane orbits and pencil coverage at q in {2,4}", crit_good_structures},
      {"regulus and tangent-line transitivity at q in {2,4}", crit_regulus_and_tangents},
      {"Klein polarity cross check at q=2", crit_klein},
      {"scale: q=7 and q=8 type IV generate and verify at d=3", crit_scale},
      {"CLI round trip and corruption detection", crit_round_trip},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    try {
      criteria[i].run();
      std::cout << "[PASS] " << i + 1 << ". " << criteria[i].name << "\n";
    } catch (const std::exception& e) {
      ++failures;
      std::cout << "[FAIL] " << i + 1 << ". " << criteria[i].name << ": " << e.what() << "\n";
    }
  }
  std::cout << (failures == 0 ? "acceptance: all criteria passed"
                              : "acceptance: " + std::to_string(failures) + " criteria FAILED")
            << "\n";
  return failures == 0 ? 0 : 1;
}
