// Copyright 2026 The wnk authors
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

#ifndef WNK_MATRIX_HPP
#define WNK_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "wnk/semiring.hpp"

namespace wnk {

/// Dense matrix of semiring values.
class WeightingMatrix {
 public:
  WeightingMatrix(SemiringHandle sr, size_t rows, size_t cols)
      : sr_(sr), rows_(rows), cols_(cols), a_(rows * cols, sr->zero()) {}

  static WeightingMatrix identity(SemiringHandle sr, size_t n);

  SemiringHandle semiring() const { return sr_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  const Value& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }
  void set(size_t i, size_t j, Value v) { a_[i * cols_ + j] = std::move(v); }
  void add_in(size_t i, size_t j, const Value& v) {
    a_[i * cols_ + j] = sr_->add(a_[i * cols_ + j], v);
  }

  bool operator==(const WeightingMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_;
  }

  WeightingMatrix add(const WeightingMatrix& other) const;

 private:
  SemiringHandle sr_;
  size_t rows_, cols_;
  std::vector<Value> a_;
};

/// Semiring matrix product; throws on dimension mismatch.
WeightingMatrix mat_mul(const WeightingMatrix& a, const WeightingMatrix& b);

/// Reflexive-transitive closure sum_n M^n, computed by recursive 2x2 block
/// decomposition with the scalar star at the base:
///   [[A,B],[C,D]]* = [[F*, F*.B.D*], [D*.C.F*, D* + D*.C.F*.B.D*]]
/// where F = A + B.D*.C. Exact in every omega-continuous semiring.
WeightingMatrix mat_star(const WeightingMatrix& m);

}  // namespace wnk

#endif  // WNK_MATRIX_HPP
