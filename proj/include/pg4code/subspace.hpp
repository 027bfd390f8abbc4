#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <optional>
#include <vector>

#include "gf.hpp"

// Subspaces of PG(4,q) -- and, for the Klein-quadric cross check, of
// PG(5,q) -- as canonical reduced-row-echelon matrices over GF(q).
//
// A vector-dimension-k subspace of GF(q)^n is stored as the unique k x n
// RREF basis with no zero rows; two subspaces are equal iff these matrices
// are identical.  Homogeneous coordinates X1..X5 correspond to column
// indices 0..4.  Subspaces are ordered by vector dimension, then
// lexicographically on the matrix entries read row-major; "lex-least"
// always means this order.  Projective dimension is k-1: point k=1,
// line k=2, plane k=3, solid k=4.

namespace pg4code {

inline constexpr int kAmbient = 5;                      // columns of PG(4,q) matrices
inline constexpr std::uint64_t kEnumCap = 1'000'000;    // enumerate_subspaces size cap

struct Mat {
  int rows = 0;
  int cols = kAmbient;
  std::array<std::array<std::uint8_t, 6>, 10> a{};  // capacity 10 x 6

  int at(int r, int c) const { return a[r][c]; }
  void set(int r, int c, int v) { a[r][c] = static_cast<std::uint8_t>(v); }
};

inline Mat make_mat(int cols, std::initializer_list<std::initializer_list<int>> rows) {
  Mat m;
  m.cols = cols;
  m.rows = static_cast<int>(rows.size());
  int r = 0;
  for (const auto& row : rows) {
    assert(static_cast<int>(row.size()) == cols);
    int c = 0;
    for (int v : row) m.set(r, c++, v);
    ++r;
  }
  return m;
}

inline Mat make_mat5(std::initializer_list<std::initializer_list<int>> rows) {
  return make_mat(kAmbient, rows);
}

inline bool mat_entries_less(const Mat& x, const Mat& y) {
  assert(x.cols == y.cols);
  const int rows = std::min(x.rows, y.rows);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < x.cols; ++c)
      if (x.a[r][c] != y.a[r][c]) return x.a[r][c] < y.a[r][c];
  return x.rows < y.rows;
}

inline bool mat_equal(const Mat& x, const Mat& y) {
  if (x.rows != y.rows || x.cols != y.cols) return false;
  for (int r = 0; r < x.rows; ++r)
    for (int c = 0; c < x.cols; ++c)
      if (x.a[r][c] != y.a[r][c]) return false;
  return true;
}

inline Mat stack_mats(const Mat& x, const Mat& y) {
  assert(x.cols == y.cols);
  assert(x.rows + y.rows <= 10);
  Mat m = x;
  for (int r = 0; r < y.rows; ++r) m.a[x.rows + r] = y.a[r];
  m.rows = x.rows + y.rows;
  return m;
}

inline Mat transposed(const Mat& x) {
  Mat m;
  m.rows = x.cols;
  m.cols = x.rows;
  for (int r = 0; r < x.rows; ++r)
    for (int c = 0; c < x.cols; ++c) m.a[c][r] = x.a[r][c];
  return m;
}

inline Mat mat_mul(const Mat& x, const Mat& y, const Field& f) {
  assert(x.cols == y.rows);
  Mat m;
  m.rows = x.rows;
  m.cols = y.cols;
  for (int r = 0; r < x.rows; ++r)
    for (int c = 0; c < y.cols; ++c) {
      int acc = 0;
      for (int i = 0; i < x.cols; ++i) acc = f.add(acc, f.mul(x.a[r][i], y.a[i][c]));
      m.set(r, c, acc);
    }
  return m;
}

// Gauss-Jordan to reduced row echelon form; zero rows are dropped.
// Returns the rank.
inline int rref_in_place(Mat& m, const Field& f) {
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int piv = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.a[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m.a[piv], m.a[r]);
    const int s = f.inv(m.a[r][c]);
    for (int j = c; j < m.cols; ++j) m.a[r][j] = static_cast<std::uint8_t>(f.mul(s, m.a[r][j]));
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.a[i][c] == 0) continue;
      const int t = m.a[i][c];
      for (int j = c; j < m.cols; ++j)
        m.a[i][j] = static_cast<std::uint8_t>(f.sub(m.a[i][j], f.mul(t, m.a[r][j])));
    }
    ++r;
  }
  for (int i = r; i < m.rows; ++i) m.a[i].fill(0);
  m.rows = r;
  return r;
}

inline int rank_of(Mat m, const Field& f) { return rref_in_place(m, f); }

// Basis of the right kernel {y : M y = 0} as canonical rows.
inline Mat kernel_basis(Mat m, const Field& f) {
  const int k = rref_in_place(m, f);
  std::array<int, 6> pivot_row;
  pivot_row.fill(-1);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < m.cols; ++c)
      if (m.a[r][c] != 0) {  // leading 1 of row r
        pivot_row[c] = r;
        break;
      }
  Mat ker;
  ker.cols = m.cols;
  ker.rows = 0;
  for (int c = 0; c < m.cols; ++c) {
    if (pivot_row[c] >= 0) continue;
    const int r = ker.rows++;
    ker.set(r, c, 1);
    for (int pc = 0; pc < m.cols; ++pc)
      if (pivot_row[pc] >= 0) ker.set(r, pc, f.neg(m.a[pivot_row[pc]][c]));
  }
  rref_in_place(ker, f);
  return ker;
}

struct Subspace {
  const Field* field = nullptr;
  Mat m;  // canonical RREF, rows = k >= 1

  int k() const { return m.rows; }
  int cols() const { return m.cols; }
  int pdim() const { return m.rows - 1; }
};

inline bool operator==(const Subspace& x, const Subspace& y) {
  return x.field->q == y.field->q && mat_equal(x.m, y.m);
}
inline bool operator!=(const Subspace& x, const Subspace& y) { return !(x == y); }
inline bool operator<(const Subspace& x, const Subspace& y) {
  if (x.m.rows != y.m.rows) return x.m.rows < y.m.rows;
  return mat_entries_less(x.m, y.m);
}

// 64-bit key: k in the top nibble, entries row-major 4 bits each below.
// Same order as operator< for fixed column count; requires k*cols <= 15.
inline std::uint64_t pack_key(const Subspace& s) {
  assert(s.k() * s.cols() <= 15);
  std::uint64_t key = static_cast<std::uint64_t>(s.k()) << 60;
  int shift = 56;
  for (int r = 0; r < s.m.rows; ++r)
    for (int c = 0; c < s.m.cols; ++c) {
      key |= static_cast<std::uint64_t>(s.m.a[r][c]) << shift;
      shift -= 4;
    }
  return key;
}

inline Subspace unpack_line_key(const Field& f, std::uint64_t key, int cols = kAmbient) {
  Subspace s;
  s.field = &f;
  s.m.cols = cols;
  s.m.rows = static_cast<int>(key >> 60);
  int shift = 56;
  for (int r = 0; r < s.m.rows; ++r)
    for (int c = 0; c < cols; ++c) {
      s.m.a[r][c] = static_cast<std::uint8_t>((key >> shift) & 0xF);
      shift -= 4;
    }
  return s;
}

/// Canonical form of the row space; rejects a zero span.
inline Subspace canonicalize(const Field& f, Mat rows) {
  if (rref_in_place(rows, f) == 0) throw std::invalid_argument("canonicalize: zero span");
  return Subspace{&f, rows};
}

namespace detail {
inline void check_compatible(const Subspace& x, const Subspace& y) {
  if (x.field->q != y.field->q) throw std::invalid_argument("mismatched fields");
  if (x.cols() != y.cols()) throw std::invalid_argument("mismatched ambient spaces");
}
}  // namespace detail

inline int sum_dim(const Subspace& x, const Subspace& y) {
  detail::check_compatible(x, y);
  return rank_of(stack_mats(x.m, y.m), *x.field);
}

inline int meet_dim(const Subspace& x, const Subspace& y) { return x.k() + y.k() - sum_dim(x, y); }

/// d_s(U,V) = dim(U+V) - dim(U n V) = 2 dim(U+V) - dim U - dim V.
inline int subspace_distance(const Subspace& x, const Subspace& y) {
  return 2 * sum_dim(x, y) - x.k() - y.k();
}

inline Subspace join(const Subspace& x, const Subspace& y) {
  detail::check_compatible(x, y);
  return canonicalize(*x.field, stack_mats(x.m, y.m));
}

/// Intersection of row spaces via orthogonal complements; empty if trivial.
inline std::optional<Subspace> meet(const Subspace& x, const Subspace& y) {
  detail::check_compatible(x, y);
  const Field& f = *x.field;
  Mat duals = stack_mats(kernel_basis(x.m, f), kernel_basis(y.m, f));
  Mat inter = kernel_basis(duals, f);
  if (inter.rows == 0) return std::nullopt;
  return Subspace{&f, inter};
}

inline bool is_subspace_of(const Subspace& inner, const Subspace& outer) {
  return sum_dim(inner, outer) == outer.k();
}

/// Image of U under the left action of g on column vectors.
inline Subspace apply(const Mat& g, const Subspace& u) {
  assert(g.rows == g.cols && g.cols == u.cols());
  Mat image = mat_mul(u.m, transposed(g), *u.field);
  if (rref_in_place(image, *u.field) != u.k())
    throw std::invalid_argument("apply: singular group element");
  return Subspace{u.field, image};
}

inline std::uint64_t gaussian_binomial(int n, int k, int q) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) {
    std::uint64_t num = 1, den = 1;
    for (int j = 0; j < n - i; ++j) num *= q;
    for (int j = 0; j < i + 1; ++j) den *= q;
    r = r * (num - 1) / (den - 1);  // partial products are Gaussian binomials, division exact
  }
  return r;
}

/// All rank-k RREF matrices k x n over GF(q), sorted row-major lex.
inline std::vector<Mat> enumerate_rref(const Field& f, int k, int n) {
  assert(k >= 1 && k <= n && n <= 6);
  std::vector<Mat> out;
  out.reserve(gaussian_binomial(n, k, f.q));
  std::vector<int> piv(k);
  for (int i = 0; i < k; ++i) piv[i] = i;
  for (;;) {
    // free positions: right of the row's pivot, not in a pivot column
    std::vector<std::pair<int, int>> free_pos;
    for (int r = 0; r < k; ++r)
      for (int c = piv[r] + 1; c < n; ++c)
        if (std::find(piv.begin(), piv.end(), c) == piv.end()) free_pos.emplace_back(r, c);
    std::vector<int> val(free_pos.size(), 0);
    for (;;) {
      Mat m;
      m.cols = n;
      m.rows = k;
      for (int r = 0; r < k; ++r) m.set(r, piv[r], 1);
      for (std::size_t i = 0; i < free_pos.size(); ++i)
        m.set(free_pos[i].first, free_pos[i].second, val[i]);
      out.push_back(m);
      // odometer
      std::size_t i = 0;
      for (; i < val.size(); ++i) {
        if (++val[i] < f.q) break;
        val[i] = 0;
      }
      if (i == val.size()) break;
    }
    // next pivot combination
    int i = k - 1;
    while (i >= 0 && piv[i] == n - k + i) --i;
    if (i < 0) break;
    ++piv[i];
    for (int j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
  }
  std::sort(out.begin(), out.end(), mat_entries_less);
  assert(out.size() == gaussian_binomial(n, k, f.q));
  return out;
}

/// Every vector-dimension-k subspace of GF(q)^5, lex sorted.
inline std::vector<Subspace> enumerate_subspaces(const Field& f, int k) {
  if (k < 1 || k > 4) throw std::invalid_argument("enumerate_subspaces: k must be in 1..4");
  const std::uint64_t count = gaussian_binomial(kAmbient, k, f.q);
  if (count > kEnumCap)
    throw std::invalid_argument("enumerate_subspaces: " + std::to_string(count) +
                                " subspaces exceeds the cap of " + std::to_string(kEnumCap));
  std::vector<Subspace> out;
  out.reserve(count);
  for (const Mat& m : enumerate_rref(f, k, kAmbient)) out.push_back(Subspace{&f, m});
  return out;
}

/// The j-dimensional subspaces of U, lex sorted.
inline std::vector<Subspace> subspaces_within(const Subspace& u, int j) {
  assert(j >= 1 && j <= u.k());
  const Field& f = *u.field;
  std::vector<Subspace> out;
  out.reserve(gaussian_binomial(u.k(), j, f.q));
  for (Mat sel : enumerate_rref(f, j, u.k())) {
    Mat rows = mat_mul(sel, u.m, f);
    out.push_back(canonicalize(f, rows));
  }
  std::sort(out.begin(), out.end());
  assert(out.size() == gaussian_binomial(u.k(), j, f.q));
  return out;
}

inline std::vector<Subspace> points_of(const Subspace& u) { return subspaces_within(u, 1); }

// The fixed coordinate frames of the two constructions.

struct OddFrame {
  Subspace pi;                  // plane X4 = X5 = 0
  Subspace ell;                 // line X3 = X4 = X5 = 0
  std::vector<Subspace> solids; // the q+1 solids through pi, solids[i-1] = Pi_i
};

inline OddFrame frame_odd(const Field& f) {
  OddFrame fr;
  fr.pi = canonicalize(f, make_mat5({{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}}));
  fr.ell = canonicalize(f, make_mat5({{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}}));
  // X4 = omega^{i-1} X5 for i = 1..q-1, then X4 = 0, then X5 = 0
  for (int i = 1; i <= f.q - 1; ++i) {
    const int w = f.pow(f.omega, i - 1);
    fr.solids.push_back(canonicalize(
        f, make_mat5({{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, w, 1}})));
  }
  fr.solids.push_back(canonicalize(
      f, make_mat5({{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 0, 1}})));
  fr.solids.push_back(canonicalize(
      f, make_mat5({{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}})));
  return fr;
}

struct EvenFrame {
  Subspace pi;       // plane X4 = X5 = 0
  Subspace ell;      // line X1 = X4 = X5 = 0
  Subspace sigma;    // solid X1 = 0
  Subspace nucleus;  // the point N = (1,0,0,0,0)
};

inline EvenFrame frame_even(const Field& f) {
  EvenFrame fr;
  fr.pi = canonicalize(f, make_mat5({{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}}));
  fr.ell = canonicalize(f, make_mat5({{0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}}));
  fr.sigma = canonicalize(
      f, make_mat5({{0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}}));
  fr.nucleus = canonicalize(f, make_mat5({{1, 0, 0, 0, 0}}));
  return fr;
}

}  // namespace pg4code
