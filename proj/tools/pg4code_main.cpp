// Command-line front end: generate optimal (5, 2(q^3+1), 3)_q subspace
// codes, verify stored codes, audit the orbit structure at small q.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error,
// 3 internal invariant violation.

#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include <pg4code/pg4code.hpp>

namespace {

using namespace pg4code;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInvariant = 3;

std::optional<std::pair<int, int>> prime_power(int q) {
  for (int p = 2; p <= q; ++p) {
    if (!detail::is_prime(p) || q % p != 0) continue;
    int h = 0, v = q;
    while (v % p == 0) {
      v /= p;
      ++h;
    }
    if (v == 1) return std::make_pair(p, h);
  }
  return std::nullopt;
}

nlohmann::json hist_json(const Histogram& h) {
  return {{"points", h.points}, {"lines", h.lines}, {"planes", h.planes}, {"solids", h.solids}};
}

int cmd_generate(int q, const std::string& type_str, std::string out_path) {
  const auto pp = prime_power(q);
  if (!pp) {
    std::cerr << "error: q = " << q << " is not a prime power\n";
    return kExitUsage;
  }
  CodeType type;
  try {
    type = code_type_from_string(type_str);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  const Parity parity = pp->first == 2 ? Parity::even : Parity::odd;
  if (!type_valid_for(type, parity)) {
    std::cerr << "error: type " << type_str << " exists only for even q\n";
    return kExitUsage;
  }

  Field f;
  try {
    f = make_field(pp->first, pp->second);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  SubspaceCode code;
  try {
    if (parity == Parity::odd) {
      const OddScaffold s = build_scaffold_odd(f);
      code = assemble_code_odd(s, type);
    } else {
      const EvenScaffold s = build_even_scaffold(f);
      code = assemble_code_even(s, type);
    }
  } catch (const invariant_violation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  }

  const VerificationReport r = classify(code);
  if (out_path.empty())
    out_path = "code_q" + std::to_string(q) + "_" + type_str + ".json";
  write_codefile(code, out_path);
  std::cout << "q=" << q << " type=" << type_str << " size=" << r.size
            << " points=" << r.hist.points << " lines=" << r.hist.lines
            << " planes=" << r.hist.planes << " solids=" << r.hist.solids << "\n";
  std::cout << "d=" << r.min_dist << "\n";
  std::cout << "wrote: " << out_path << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& in_path, int expect_d) {
  LoadedCode loaded;
  try {
    loaded = load_codefile(in_path);
  } catch (const codefile_error& e) {
    std::cerr << "malformed code file: " << e.what() << "\n";
    return kExitUsage;
  }
  const SubspaceCode& code = loaded.code;
  const int q = code.field->q;
  const std::uint64_t q3 = static_cast<std::uint64_t>(q) * q * q;

  nlohmann::json rep;
  rep["file"] = in_path;
  rep["q"] = q;
  rep["declared_type"] = to_string(code.type);
  rep["expected_min_distance"] = expect_d;

  const VerificationReport r = classify(code);
  rep["size"] = r.size;
  rep["histogram"] = hist_json(r.hist);
  rep["detected_type"] = r.detected_type;
  if (code.words.size() >= 2) {
    rep["min_distance"] = r.min_dist;
    rep["witness"] = {{"a", detail::mat_to_json(code.words[r.wa].m)},
                      {"b", detail::mat_to_json(code.words[r.wb].m)},
                      {"distance", r.min_dist}};
  }

  // IV' and IV'' share composition IV
  const std::string declared =
      code.type == CodeType::IVp || code.type == CodeType::IVpp ? "IV" : to_string(code.type);
  const bool unique =
      std::adjacent_find(code.words.begin(), code.words.end()) == code.words.end();
  std::vector<CheckResult> checks = {
      {"codewords_unique", unique, ""},
      {"size_is_2q3_plus_2", r.size == 2 * (q3 + 1), std::to_string(r.size)},
      {"composition_matches_type", r.detected_type == declared, r.detected_type},
      {"min_distance_at_least_expected", code.words.size() >= 2 && r.min_dist >= expect_d,
       code.words.size() >= 2 ? std::to_string(r.min_dist) : "undefined"},
  };
  bool ok = true;
  nlohmann::json jchecks = nlohmann::json::array();
  for (const CheckResult& c : checks) {
    jchecks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    ok = ok && c.pass;
  }
  rep["checks"] = std::move(jchecks);
  rep["ok"] = ok;
  std::cout << rep.dump(2) << "\n";
  return ok ? kExitOk : kExitVerifyFail;
}

int cmd_audit(int q) {
  if (!audit_supported(q)) {
    std::cerr << "error: audit supports q in {2,3,4,5}, got q = " << q << "\n";
    return kExitUsage;
  }
  const auto pp = prime_power(q);
  const Field f = make_field(pp->first, pp->second);
  const std::vector<CheckResult> checks = audit_structure(f);
  bool all = true;
  for (const CheckResult& c : checks) {
    std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
    if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
    std::cout << "\n";
    all = all && c.pass;
  }
  std::cout << (all ? "audit: all checks passed" : "audit: FAILURES") << "\n";
  return all ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"optimal mixed-dimension subspace codes in PG(4,q)"};
  app.require_subcommand(1);

  int q = 0;
  std::string type_str = "IV";
  std::string out_path, in_path;
  int expect_d = 3;

  CLI::App* gen = app.add_subcommand("generate", "construct a code and write it as JSON");
  gen->add_option("--q", q, "field size (prime power, 2..16)")->required();
  gen->add_option("--type", type_str, "code type: I, II, III, IV, IV', IV'' (default IV)");
  gen->add_option("--out", out_path, "output path (default code_q<q>_<type>.json)");

  CLI::App* ver = app.add_subcommand("verify", "re-verify a stored code file");
  ver->add_option("--in", in_path, "code file to verify")->required();
  ver->add_option("--expect-d", expect_d, "required minimum distance (default 3)");

  CLI::App* aud = app.add_subcommand("audit", "run the structural audits for small q");
  aud->add_option("--q", q, "field size in {2,3,4,5}")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_generate(q, type_str, out_path);
    if (ver->parsed()) return cmd_verify(in_path, expect_d);
    if (aud->parsed()) return cmd_audit(q);
  } catch (const pg4code::invariant_violation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
