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

#include "szx/classical.hpp"

#include <algorithm>
#include <bit>

#include "szx/core.hpp"

namespace szx {

int parity(Word x) { return std::popcount(x) & 1; }

std::string word_to_string(Word x, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int j = 0; j < n; ++j) s[j] = word_bit(x, j, n) ? '1' : '0';
  return s;
}

Word word_from_string(const std::string& bits) {
  Word x = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw SzxError(ErrorCode::ParseError, "bit string '" + bits + "'");
    x = (x << 1) | static_cast<Word>(c == '1');
  }
  return x;
}

namespace {

Word low_mask(int bits) { return bits >= 64 ? ~Word{0} : ((Word{1} << bits) - 1); }

}  // namespace

BooleanFunction::BooleanFunction(int n, int m, std::vector<Word> table)
    : n_(n), m_(m), table_(std::move(table)) {
  if (n < 0 || m < 0 || n > 24) throw SzxError(ErrorCode::InvalidArgument, "function arity");
  if (table_.size() != (std::size_t{1} << n))
    throw SzxError(ErrorCode::InvalidArgument, "truth table must cover all 2^n inputs");
  for (Word y : table_) {
    if (y & ~low_mask(m)) throw SzxError(ErrorCode::InvalidArgument, "table value exceeds 2^m");
  }
}

BooleanFunction BooleanFunction::identity(int n) {
  std::vector<Word> t(std::size_t{1} << n);
  for (std::size_t x = 0; x < t.size(); ++x) t[x] = x;
  return {n, n, std::move(t)};
}

BooleanFunction BooleanFunction::constant(int n, int m, Word value) {
  return {n, m, std::vector<Word>(std::size_t{1} << n, value)};
}

BooleanFunction BooleanFunction::point(int n, Word point) {
  std::vector<Word> t(std::size_t{1} << n, 0);
  t.at(point) = 1;
  return {n, 1, std::move(t)};
}

BooleanFunction BooleanFunction::then(const BooleanFunction& g) const {
  if (g.n() != m_) throw SzxError(ErrorCode::TypeMismatch, "function composition arity");
  std::vector<Word> t(table_.size());
  for (std::size_t x = 0; x < t.size(); ++x) t[x] = g(table_[x]);
  return {n_, g.m(), std::move(t)};
}

BooleanFunction BooleanFunction::power(int k) const {
  const int n = n_ * k;
  const int m = m_ * k;
  std::vector<Word> t(std::size_t{1} << n);
  for (std::size_t x = 0; x < t.size(); ++x) {
    Word y = 0;
    for (int c = 0; c < k; ++c) {
      const Word block = (x >> ((k - 1 - c) * n_)) & low_mask(n_);
      y |= table_[block] << ((k - 1 - c) * m_);
    }
    t[x] = y;
  }
  return {n, m, std::move(t)};
}

F2Matrix::F2Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows, 0) {
  if (rows < 0 || cols < 0 || cols > 63) throw SzxError(ErrorCode::InvalidArgument, "matrix shape");
}

F2Matrix::F2Matrix(int rows, int cols, std::vector<Word> row_words)
    : rows_(rows), cols_(cols), data_(std::move(row_words)) {
  if (static_cast<int>(data_.size()) != rows) throw SzxError(ErrorCode::ShapeMismatch, "row count");
  for (Word r : data_) {
    if (r & ~low_mask(cols)) throw SzxError(ErrorCode::ShapeMismatch, "row wider than cols");
  }
}

F2Matrix F2Matrix::from_strings(const std::vector<std::string>& rows) {
  const int cols = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  std::vector<Word> data;
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols) throw SzxError(ErrorCode::ShapeMismatch, "ragged matrix");
    data.push_back(word_from_string(r));
  }
  return {static_cast<int>(rows.size()), cols, std::move(data)};
}

F2Matrix F2Matrix::identity(int n) {
  F2Matrix a(n, n);
  for (int i = 0; i < n; ++i) a.set(i, i, 1);
  return a;
}

F2Matrix F2Matrix::ones(int rows, int cols) {
  return {rows, cols, std::vector<Word>(rows, low_mask(cols))};
}

Word F2Matrix::apply(Word x) const {
  Word y = 0;
  for (int i = 0; i < rows_; ++i) y = word_with_bit(y, i, rows_, parity(data_[i] & x));
  return y;
}

F2Matrix F2Matrix::transpose() const {
  F2Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.set(j, i, get(i, j));
  return t;
}

F2Matrix F2Matrix::multiply(const F2Matrix& rhs) const {
  if (cols_ != rhs.rows()) throw SzxError(ErrorCode::ShapeMismatch, "matrix product");
  F2Matrix out(rows_, rhs.cols());
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < rhs.cols(); ++j) {
      int acc = 0;
      for (int l = 0; l < cols_; ++l) acc ^= get(i, l) & rhs.get(l, j);
      out.set(i, j, acc);
    }
  return out;
}

F2Matrix F2Matrix::vstack(const F2Matrix& top, const F2Matrix& bottom) {
  if (top.cols() != bottom.cols()) throw SzxError(ErrorCode::ShapeMismatch, "vstack");
  std::vector<Word> data = top.data_;
  data.insert(data.end(), bottom.data_.begin(), bottom.data_.end());
  return {top.rows() + bottom.rows(), top.cols(), std::move(data)};
}

F2Matrix F2Matrix::hstack(const F2Matrix& left, const F2Matrix& right) {
  if (left.rows() != right.rows()) throw SzxError(ErrorCode::ShapeMismatch, "hstack");
  std::vector<Word> data(left.rows());
  for (int i = 0; i < left.rows(); ++i) data[i] = (left.row(i) << right.cols()) | right.row(i);
  return {left.rows(), left.cols() + right.cols(), std::move(data)};
}

F2Matrix F2Matrix::block_diagonal(int k) const {
  F2Matrix out(rows_ * k, cols_ * k);
  for (int c = 0; c < k; ++c)
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out.set(c * rows_ + i, c * cols_ + j, get(i, j));
  return out;
}

BooleanFunction F2Matrix::to_function() const {
  std::vector<Word> t(std::size_t{1} << cols_);
  for (std::size_t x = 0; x < t.size(); ++x) t[x] = apply(x);
  return {cols_, rows_, std::move(t)};
}

std::vector<std::string> F2Matrix::to_strings() const {
  std::vector<std::string> out;
  for (Word r : data_) out.push_back(word_to_string(r, cols_));
  return out;
}

BoolMatrix::BoolMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows, 0) {
  if (rows < 0 || cols < 0 || cols > 63) throw SzxError(ErrorCode::InvalidArgument, "matrix shape");
}

BoolMatrix::BoolMatrix(int rows, int cols, std::vector<Word> row_words)
    : rows_(rows), cols_(cols), data_(std::move(row_words)) {
  if (static_cast<int>(data_.size()) != rows) throw SzxError(ErrorCode::ShapeMismatch, "row count");
  for (Word r : data_) {
    if (r & ~low_mask(cols)) throw SzxError(ErrorCode::ShapeMismatch, "row wider than cols");
  }
}

BoolMatrix BoolMatrix::from_strings(const std::vector<std::string>& rows) {
  const F2Matrix a = F2Matrix::from_strings(rows);
  return {a.rows(), a.cols(), a.row_words()};
}

BoolMatrix BoolMatrix::ones(int rows, int cols) {
  return {rows, cols, std::vector<Word>(rows, low_mask(cols))};
}

Word BoolMatrix::apply(Word x) const {
  Word y = 0;
  for (int i = 0; i < rows_; ++i) y = word_with_bit(y, i, rows_, (data_[i] & ~x) == 0);
  return y;
}

BoolMatrix BoolMatrix::block_diagonal(int k) const {
  BoolMatrix out(rows_ * k, cols_ * k);
  for (int c = 0; c < k; ++c)
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out.set(c * rows_ + i, c * cols_ + j, get(i, j));
  return out;
}

BooleanFunction BoolMatrix::to_function() const {
  std::vector<Word> t(std::size_t{1} << cols_);
  for (std::size_t x = 0; x < t.size(); ++x) t[x] = apply(x);
  return {cols_, rows_, std::move(t)};
}

std::vector<std::string> BoolMatrix::to_strings() const {
  std::vector<std::string> out;
  for (Word r : data_) out.push_back(word_to_string(r, cols_));
  return out;
}

Echelon f2_rref(const F2Matrix& a) {
  std::vector<Word> rows = a.row_words();
  const int n = a.cols();
  std::vector<int> pivots;
  std::size_t next = 0;
  for (int j = 0; j < n && next < rows.size(); ++j) {
    const Word mask = Word{1} << (n - 1 - j);
    auto it = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(next), rows.end(),
                           [mask](Word r) { return (r & mask) != 0; });
    if (it == rows.end()) continue;
    std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(next), it);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != next && (rows[i] & mask)) rows[i] ^= rows[next];
    }
    pivots.push_back(j);
    ++next;
  }
  return {F2Matrix(a.rows(), n, std::move(rows)), std::move(pivots)};
}

int f2_rank(const F2Matrix& a) { return static_cast<int>(f2_rref(a).pivots.size()); }

std::vector<Word> f2_span_basis(const std::vector<Word>& vectors, int bits) {
  const Echelon e = f2_rref(F2Matrix(static_cast<int>(vectors.size()), bits, vectors));
  std::vector<Word> basis(e.reduced.row_words().begin(),
                          e.reduced.row_words().begin() + static_cast<std::ptrdiff_t>(e.pivots.size()));
  return basis;
}

bool f2_same_span(const std::vector<Word>& a, const std::vector<Word>& b, int bits) {
  return f2_span_basis(a, bits) == f2_span_basis(b, bits);
}

std::vector<Word> f2_image(const F2Matrix& a) {
  return f2_span_basis(a.transpose().row_words(), a.rows());
}

std::vector<Word> f2_kernel(const F2Matrix& a) {
  const int n = a.cols();
  const Echelon e = f2_rref(a);
  std::vector<bool> is_pivot(n, false);
  for (int p : e.pivots) is_pivot[p] = true;
  std::vector<Word> basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Word v = word_with_bit(0, free, n, 1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      if (e.reduced.get(static_cast<int>(r), free)) v = word_with_bit(v, e.pivots[r], n, 1);
    }
    basis.push_back(v);
  }
  return f2_span_basis(basis, n);
}

std::vector<Word> SolutionSet::enumerate() const {
  std::vector<Word> out;
  const std::size_t count = std::size_t{1} << kernel.size();
  for (std::size_t mask = 0; mask < count; ++mask) {
    Word x = particular;
    for (std::size_t i = 0; i < kernel.size(); ++i)
      if (mask >> i & 1U) x ^= kernel[i];
    out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SolutionSet f2_solve(const F2Matrix& a, Word b) {
  const int n = a.cols();
  // Augment with b as an extra last column and eliminate.
  std::vector<Word> aug(a.rows());
  for (int i = 0; i < a.rows(); ++i) aug[i] = (a.row(i) << 1) | static_cast<Word>(word_bit(b, i, a.rows()));
  const Echelon e = f2_rref(F2Matrix(a.rows(), n + 1, std::move(aug)));
  SolutionSet sol;
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == n) throw SzxError(ErrorCode::Inconsistent, "linear system has no solution");
    if (e.reduced.row(static_cast<int>(r)) & 1U) sol.particular = word_with_bit(sol.particular, e.pivots[r], n, 1);
  }
  sol.kernel = f2_kernel(a);
  return sol;
}

}  // namespace szx
