#pragma once

#include <string>
#include <utility>
#include <vector>

#include "group.hpp"

// A mixed-dimension subspace code together with its construction metadata.
// The four admissible compositions of an optimal (5, 2(q^3+1), 3)_q code:
//   I    one point, q^3+1 lines, q^3 planes
//   II   q^3 lines, q^3+1 planes, one solid
//   III  one point, q^3 lines, q^3 planes, one solid
//   IV   q^3+1 lines, q^3+1 planes
// IV' and IV'' are the two even-characteristic variants with composition IV.

namespace pg4code {

enum class CodeType { I, II, III, IV, IVp, IVpp };

inline const char* to_string(CodeType t) {
  switch (t) {
    case CodeType::I: return "I";
    case CodeType::II: return "II";
    case CodeType::III: return "III";
    case CodeType::IV: return "IV";
    case CodeType::IVp: return "IV'";
    case CodeType::IVpp: return "IV''";
  }
  return "?";
}

inline CodeType code_type_from_string(const std::string& s) {
  if (s == "I") return CodeType::I;
  if (s == "II") return CodeType::II;
  if (s == "III") return CodeType::III;
  if (s == "IV") return CodeType::IV;
  if (s == "IV'") return CodeType::IVp;
  if (s == "IV''") return CodeType::IVpp;
  throw std::invalid_argument("unknown code type '" + s + "'");
}

inline bool type_valid_for(CodeType t, Parity p) {
  if (t == CodeType::IVp || t == CodeType::IVpp) return p == Parity::even;
  return true;
}

struct NamedChoice {
  std::string name;
  Subspace space;
};

struct SubspaceCode {
  const Field* field = nullptr;
  Parity parity = Parity::odd;
  CodeType type = CodeType::IV;
  std::vector<Subspace> words;  // sorted; unique for constructed codes
  // canonical choices the construction actually used
  std::vector<NamedChoice> choices;
  std::vector<std::pair<std::string, int>> scalars;
};

}  // namespace pg4code
