// Copyright 2026 The szx Authors
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

#pragma once

// Classical data carried by arrow generators: boolean functions, matrices over
// GF(2) and over the boolean semiring, and GF(2) elimination.
//
// Bit convention, used everywhere in the library: an n-bit word stores its
// element j (j = 0 is the first wire) at bit position n-1-j, which makes the
// word equal to the computational basis index |x_0 x_1 ... x_{n-1}>.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "szx/core.hpp"

namespace szx {

using Word = std::uint64_t;

inline int word_bit(Word x, int j, int n) { return static_cast<int>((x >> (n - 1 - j)) & 1U); }
inline Word word_with_bit(Word x, int j, int n, int b) {
  const Word mask = Word{1} << (n - 1 - j);
  return b ? (x | mask) : (x & ~mask);
}
int parity(Word x);
std::string word_to_string(Word x, int n);
Word word_from_string(const std::string& bits);

/// A total function 2^n -> 2^m given by its truth table.
class BooleanFunction {
 public:
  BooleanFunction() = default;
  BooleanFunction(int n, int m, std::vector<Word> table);

  static BooleanFunction identity(int n);
  static BooleanFunction constant(int n, int m, Word value);
  /// f(x) = [x == point]
  static BooleanFunction point(int n, Word point);

  int n() const { return n_; }
  int m() const { return m_; }
  const std::vector<Word>& table() const { return table_; }
  Word operator()(Word x) const { return table_[x]; }

  /// g after *this
  BooleanFunction then(const BooleanFunction& g) const;
  /// Copy-major k-fold product: block c of the input feeds block c of the output.
  BooleanFunction power(int k) const;

  bool operator==(const BooleanFunction&) const = default;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<Word> table_{0};
};

/// m x n matrix over GF(2). Row i is a word over n bits.
class F2Matrix {
 public:
  F2Matrix() = default;
  F2Matrix(int rows, int cols);
  F2Matrix(int rows, int cols, std::vector<Word> row_words);
  /// One string of '0'/'1' per row.
  static F2Matrix from_strings(const std::vector<std::string>& rows);
  static F2Matrix identity(int n);
  static F2Matrix ones(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::vector<Word>& row_words() const { return data_; }
  Word row(int i) const { return data_[i]; }
  int get(int i, int j) const { return word_bit(data_[i], j, cols_); }
  void set(int i, int j, int b) { data_[i] = word_with_bit(data_[i], j, cols_, b); }

  Word apply(Word x) const;
  F2Matrix transpose() const;
  F2Matrix multiply(const F2Matrix& rhs) const;
  /// (top; bottom)
  static F2Matrix vstack(const F2Matrix& top, const F2Matrix& bottom);
  /// (left right)
  static F2Matrix hstack(const F2Matrix& left, const F2Matrix& right);
  /// Copy-major block diagonal I_k (x) A.
  F2Matrix block_diagonal(int k) const;

  BooleanFunction to_function() const;
  std::vector<std::string> to_strings() const;

  bool operator==(const F2Matrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Word> data_;
};

/// m x n matrix over the boolean semiring ({0,1}, and, or). As a map it sends
/// x to y with y_i = AND over {j : A_ij = 1} of x_j (empty AND is 1).
class BoolMatrix {
 public:
  BoolMatrix() = default;
  BoolMatrix(int rows, int cols);
  BoolMatrix(int rows, int cols, std::vector<Word> row_words);
  static BoolMatrix from_strings(const std::vector<std::string>& rows);
  static BoolMatrix ones(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::vector<Word>& row_words() const { return data_; }
  int get(int i, int j) const { return word_bit(data_[i], j, cols_); }
  void set(int i, int j, int b) { data_[i] = word_with_bit(data_[i], j, cols_, b); }

  Word apply(Word x) const;
  BoolMatrix block_diagonal(int k) const;
  BooleanFunction to_function() const;
  std::vector<std::string> to_strings() const;

  bool operator==(const BoolMatrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Word> data_;
};

// GF(2) linear algebra. Elimination keeps column order, so bases come out in
// reduced row echelon form and are deterministic.

struct Echelon {
  F2Matrix reduced;
  std::vector<int> pivots;  // pivot column of each nonzero row
};

Echelon f2_rref(const F2Matrix& a);
int f2_rank(const F2Matrix& a);
/// Basis of the column space, as words over rows(a) bits.
std::vector<Word> f2_image(const F2Matrix& a);
/// Basis of {x : a x = 0}, as words over cols(a) bits.
std::vector<Word> f2_kernel(const F2Matrix& a);
/// Reduced echelon basis of the span of `vectors` (each `bits` wide).
std::vector<Word> f2_span_basis(const std::vector<Word>& vectors, int bits);
bool f2_same_span(const std::vector<Word>& a, const std::vector<Word>& b, int bits);

struct SolutionSet {
  Word particular = 0;
  std::vector<Word> kernel;  // x = particular + span(kernel)
  std::vector<Word> enumerate() const;
};

/// Solves a x = b; throws SzxError(Inconsistent) when there is no solution.
SolutionSet f2_solve(const F2Matrix& a, Word b);

}  // namespace szx
