#pragma once

#include <string>
#include <vector>

#include "code.hpp"

// Independent verification: exact minimum-distance scan over all pairs and
// composition classification against the type I-IV tables.

namespace pg4code {

struct Histogram {
  std::uint64_t points = 0, lines = 0, planes = 0, solids = 0;
  bool operator==(const Histogram&) const = default;
};

inline Histogram histogram_of(const std::vector<Subspace>& words) {
  Histogram h;
  for (const Subspace& w : words) {
    switch (w.k()) {
      case 1: ++h.points; break;
      case 2: ++h.lines; break;
      case 3: ++h.planes; break;
      case 4: ++h.solids; break;
      default: throw std::invalid_argument("codeword of unexpected dimension");
    }
  }
  return h;
}

/// "I".."IV" if the histogram matches the composition table for this q,
/// otherwise "nonstandard".
inline std::string detect_type(const Histogram& h, int q) {
  const std::uint64_t q3 = static_cast<std::uint64_t>(q) * q * q;
  if (h == Histogram{1, q3 + 1, q3, 0}) return "I";
  if (h == Histogram{0, q3, q3 + 1, 1}) return "II";
  if (h == Histogram{1, q3, q3, 1}) return "III";
  if (h == Histogram{0, q3 + 1, q3 + 1, 0}) return "IV";
  return "nonstandard";
}

struct DistanceScan {
  int min_dist = 0;
  std::size_t wa = 0, wb = 0;  // lex-least pair attaining the minimum
};

/// Exact minimum over all unordered pairs; words are sorted, and the first
/// pair attaining the final minimum in scan order is the lex-least witness.
inline DistanceScan min_distance(const SubspaceCode& code) {
  const auto& w = code.words;
  if (w.size() < 2) throw std::invalid_argument("min_distance: need at least two codewords");
  DistanceScan best;
  best.min_dist = 100;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      const int d = subspace_distance(w[i], w[j]);
      if (d < best.min_dist) {
        best.min_dist = d;
        best.wa = i;
        best.wb = j;
      }
    }
  return best;
}

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerificationReport {
  std::size_t size = 0;
  Histogram hist;
  std::string detected_type;
  int min_dist = 0;
  std::size_t wa = 0, wb = 0;
};

inline VerificationReport classify(const SubspaceCode& code) {
  VerificationReport r;
  r.size = code.words.size();
  r.hist = histogram_of(code.words);
  r.detected_type = detect_type(r.hist, code.field->q);
  if (code.words.size() >= 2) {
    const DistanceScan d = min_distance(code);
    r.min_dist = d.min_dist;
    r.wa = d.wa;
    r.wb = d.wb;
  }
  return r;
}

}  // namespace pg4code
