#pragma once

#include <fstream>
#include <memory>

#include <json.hpp>

#include "verify.hpp"

// Self-describing on-disk format: the field (p, h, modulus) is embedded so
// a file can be verified without regenerating anything.  Codewords are
// stored as canonical k x 5 basis matrices in the base-p integer encoding;
// for fixed inputs the bytes are reproducible.

namespace pg4code {

inline constexpr int kCodeFileVersion = 1;

class codefile_error : public std::runtime_error {
 public:
  explicit codefile_error(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline nlohmann::json mat_to_json(const Mat& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < m.rows; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < m.cols; ++c) row.push_back(m.at(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace detail

inline std::string codefile_to_string(const SubspaceCode& code) {
  const Field& f = *code.field;
  nlohmann::json j;
  j["format_version"] = kCodeFileVersion;
  j["field"] = {{"p", f.p}, {"h", f.h}, {"q", f.q}, {"modulus", f.modulus}};
  j["parity"] = to_string(code.parity);
  j["type"] = to_string(code.type);
  nlohmann::json cons;
  for (const auto& [name, value] : code.scalars) cons[name] = value;
  for (const auto& ch : code.choices) cons[ch.name] = detail::mat_to_json(ch.space.m);
  j["construction"] = std::move(cons);
  nlohmann::json words = nlohmann::json::array();
  for (const Subspace& w : code.words)
    words.push_back({{"k", w.k()}, {"basis", detail::mat_to_json(w.m)}});
  j["codewords"] = std::move(words);
  return j.dump(2) + "\n";
}

inline void write_codefile(const SubspaceCode& code, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw codefile_error("cannot open '" + path + "' for writing");
  out << codefile_to_string(code);
}

struct LoadedCode {
  std::unique_ptr<Field> field;
  SubspaceCode code;
};

inline LoadedCode load_codefile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw codefile_error("cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw codefile_error(std::string("invalid JSON: ") + e.what());
  }

  try {
    if (j.at("format_version").get<int>() != kCodeFileVersion)
      throw codefile_error("unsupported format_version");
    const auto& jf = j.at("field");
    LoadedCode loaded;
    loaded.field = std::make_unique<Field>(make_field_with_modulus(
        jf.at("p").get<int>(), jf.at("h").get<int>(), jf.at("modulus").get<std::vector<int>>()));
    const Field& f = *loaded.field;
    if (jf.at("q").get<int>() != f.q) throw codefile_error("declared q != p^h");

    const std::string parity = j.at("parity").get<std::string>();
    if (parity != "odd" && parity != "even") throw codefile_error("bad parity");
    if ((parity == "even") != (f.p == 2)) throw codefile_error("parity inconsistent with p");
    loaded.code.parity = f.p == 2 ? Parity::even : Parity::odd;
    loaded.code.type = code_type_from_string(j.at("type").get<std::string>());
    if (!type_valid_for(loaded.code.type, loaded.code.parity))
      throw codefile_error("type not valid for this parity");
    loaded.code.field = &f;

    for (const auto& jw : j.at("codewords")) {
      const int k = jw.at("k").get<int>();
      if (k < 1 || k > 4) throw codefile_error("codeword dimension out of range");
      const auto& rows = jw.at("basis");
      if (static_cast<int>(rows.size()) != k) throw codefile_error("basis row count != k");
      Mat m;
      m.rows = k;
      m.cols = kAmbient;
      for (int r = 0; r < k; ++r) {
        const auto& row = rows.at(r);
        if (static_cast<int>(row.size()) != kAmbient) throw codefile_error("basis row width != 5");
        for (int c = 0; c < kAmbient; ++c) {
          const int v = row.at(c).get<int>();
          if (v < 0 || v >= f.q) throw codefile_error("entry not a GF(q) encoding");
          m.set(r, c, v);
        }
      }
      Subspace w;
      try {
        w = canonicalize(f, m);
      } catch (const std::invalid_argument&) {
        throw codefile_error("codeword basis spans nothing");
      }
      if (!mat_equal(w.m, m)) throw codefile_error("codeword basis is not in canonical form");
      loaded.code.words.push_back(w);
    }
    if (loaded.code.words.empty()) throw codefile_error("no codewords");
    std::sort(loaded.code.words.begin(), loaded.code.words.end());
    return loaded;
  } catch (const nlohmann::json::exception& e) {
    throw codefile_error(std::string("missing or ill-typed field: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw codefile_error(e.what());
  }
}

}  // namespace pg4code
