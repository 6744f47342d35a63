#pragma once

// Textbook Smith reduction by elementary row and column operations, kept apart
// from the library so the two can check each other.

#include <cstddef>
#include <utility>
#include <vector>

#include "ssg/bigint.hpp"

namespace ssg::oracle {

using Mat = std::vector<std::vector<BigInt>>;

struct Snf {
  Mat U, S, V;
};

inline Mat eye(std::size_t n) {
  Mat m(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline Mat mul(const Mat& a, const Mat& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  Mat c(n, std::vector<BigInt>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l)
      if (a[i][l] != 0)
        for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
  return c;
}

// cofactor expansion along the first row
inline BigInt det(const Mat& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  BigInt total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    Mat minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<BigInt> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    BigInt term = m[0][c] * det(minor);
    total += (c % 2 == 0) ? term : BigInt(-term);
  }
  return total;
}

inline Snf smith(const Mat& M) {
  const std::size_t rows = M.size(), cols = rows ? M[0].size() : 0;
  Snf r{eye(rows), M, eye(cols)};
  Mat& S = r.S;
  auto row_add = [&](std::size_t dst, std::size_t src, const BigInt& f) {  // row dst += f row src
    for (std::size_t j = 0; j < cols; ++j) S[dst][j] += f * S[src][j];
    for (std::size_t j = 0; j < rows; ++j) r.U[dst][j] += f * r.U[src][j];
  };
  auto col_add = [&](std::size_t dst, std::size_t src, const BigInt& f) {
    for (std::size_t i = 0; i < rows; ++i) S[i][dst] += f * S[i][src];
    for (std::size_t i = 0; i < cols; ++i) r.V[i][dst] += f * r.V[i][src];
  };
  auto row_swap = [&](std::size_t a, std::size_t b) {
    std::swap(S[a], S[b]);
    std::swap(r.U[a], r.U[b]);
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    for (auto& row : S) std::swap(row[a], row[b]);
    for (auto& row : r.V) std::swap(row[a], row[b]);
  };
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (S[i][j] != 0 && (pi == rows || abs(S[i][j]) < abs(S[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) return r;
      row_swap(t, pi);
      col_swap(t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        BigInt q = S[i][t] / S[t][t];
        if (q != 0) row_add(i, t, -q);
        if (S[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        BigInt q = S[t][j] / S[t][t];
        if (q != 0) col_add(j, t, -q);
        if (S[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (S[i][j] % S[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      row_add(t, bad, 1);
    }
    if (S[t][t] < 0) {
      for (auto& v : S[t]) v = -v;
      for (auto& v : r.U[t]) v = -v;
    }
  }
  return r;
}

}  // namespace ssg::oracle
