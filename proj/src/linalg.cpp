// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "constdepth/linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace constdepth {

namespace {
using BigInt = boost::multiprecision::cpp_int;
}

int rank_over_rationals(const IntMatrix& m) {
  if (m.empty() || m[0].empty()) return 0;
  size_t rows = m.size(), cols = m[0].size();
  std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) a[i][j] = m[i][j];

  int rank = 0;
  BigInt prev_pivot = 1;
  for (size_t col = 0; col < cols && static_cast<size_t>(rank) < rows; ++col) {
    size_t pivot_row = rank;
    while (pivot_row < rows && a[pivot_row][col] == 0) ++pivot_row;
    if (pivot_row == rows) continue;
    std::swap(a[rank], a[pivot_row]);
    const BigInt pivot = a[rank][col];
    for (size_t i = rank + 1; i < rows; ++i) {
      for (size_t j = col + 1; j < cols; ++j)
        a[i][j] = (pivot * a[i][j] - a[i][col] * a[rank][j]) / prev_pivot;
      a[i][col] = 0;
    }
    prev_pivot = pivot;
    ++rank;
  }
  return rank;
}

int rank_mod_p(const IntMatrix& m, long long p) {
  if (m.empty() || m[0].empty()) return 0;
  size_t rows = m.size(), cols = m[0].size();
  std::vector<std::vector<long long>> a(rows, std::vector<long long>(cols));
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) a[i][j] = ((m[i][j] % p) + p) % p;

  auto inv_mod = [p](long long x) {
    // Fermat; p is prime.
    long long result = 1, base = x % p, e = p - 2;
    while (e > 0) {
      if (e & 1) result = (__int128)result * base % p;
      base = (__int128)base * base % p;
      e >>= 1;
    }
    return result;
  };

  int rank = 0;
  for (size_t col = 0; col < cols && static_cast<size_t>(rank) < rows; ++col) {
    size_t pivot_row = rank;
    while (pivot_row < rows && a[pivot_row][col] == 0) ++pivot_row;
    if (pivot_row == rows) continue;
    std::swap(a[rank], a[pivot_row]);
    long long inv = inv_mod(a[rank][col]);
    for (size_t j = col; j < cols; ++j)
      a[rank][j] = (__int128)a[rank][j] * inv % p;
    for (size_t i = rank + 1; i < rows; ++i) {
      long long f = a[i][col];
      if (f == 0) continue;
      for (size_t j = col; j < cols; ++j)
        a[i][j] = ((a[i][j] - (__int128)f * a[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

int rank_over_field(const IntMatrix& m, const FieldSpec& field) {
  return field.kind == FieldSpec::Kind::rationals ? rank_over_rationals(m)
                                                  : rank_mod_p(m, field.p);
}

}  // namespace constdepth
