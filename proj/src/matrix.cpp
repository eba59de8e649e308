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

#include "wnk/matrix.hpp"

namespace wnk {

WeightingMatrix WeightingMatrix::identity(SemiringHandle sr, size_t n) {
  WeightingMatrix m(sr, n, n);
  for (size_t i = 0; i < n; ++i) m.set(i, i, sr->one());
  return m;
}

WeightingMatrix WeightingMatrix::add(const WeightingMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw AlgebraError("matrix addition dimension mismatch");
  WeightingMatrix out(sr_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i)
    out.a_[i] = sr_->add(a_[i], other.a_[i]);
  return out;
}

WeightingMatrix mat_mul(const WeightingMatrix& a, const WeightingMatrix& b) {
  if (a.cols() != b.rows())
    throw AlgebraError("matrix product dimension mismatch");
  SemiringHandle sr = a.semiring();
  WeightingMatrix out(sr, a.rows(), b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t k = 0; k < a.cols(); ++k) {
      const Value& aik = a.at(i, k);
      if (sr->is_zero(aik)) continue;
      for (size_t j = 0; j < b.cols(); ++j) {
        const Value& bkj = b.at(k, j);
        if (sr->is_zero(bkj)) continue;
        out.add_in(i, j, sr->mul(aik, bkj));
      }
    }
  return out;
}

namespace {

WeightingMatrix block(const WeightingMatrix& m, size_t r0, size_t c0,
                      size_t rows, size_t cols) {
  WeightingMatrix out(m.semiring(), rows, cols);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) out.set(i, j, m.at(r0 + i, c0 + j));
  return out;
}

void paste(WeightingMatrix& m, size_t r0, size_t c0,
           const WeightingMatrix& part) {
  for (size_t i = 0; i < part.rows(); ++i)
    for (size_t j = 0; j < part.cols(); ++j)
      m.set(r0 + i, c0 + j, part.at(i, j));
}

}  // namespace

WeightingMatrix mat_star(const WeightingMatrix& m) {
  if (m.rows() != m.cols()) throw AlgebraError("matrix star needs a square matrix");
  SemiringHandle sr = m.semiring();
  const size_t n = m.rows();
  if (n == 0) return m;
  if (n == 1) {
    WeightingMatrix out(sr, 1, 1);
    out.set(0, 0, sr->star(m.at(0, 0)));
    return out;
  }
  const size_t k = n / 2;
  WeightingMatrix a = block(m, 0, 0, k, k);
  WeightingMatrix b = block(m, 0, k, k, n - k);
  WeightingMatrix c = block(m, k, 0, n - k, k);
  WeightingMatrix d = block(m, k, k, n - k, n - k);

  WeightingMatrix ds = mat_star(d);
  WeightingMatrix f = a.add(mat_mul(mat_mul(b, ds), c));
  WeightingMatrix fs = mat_star(f);
  WeightingMatrix fs_b_ds = mat_mul(mat_mul(fs, b), ds);
  WeightingMatrix ds_c_fs = mat_mul(mat_mul(ds, c), fs);

  WeightingMatrix out(sr, n, n);
  paste(out, 0, 0, fs);
  paste(out, 0, k, fs_b_ds);
  paste(out, k, 0, ds_c_fs);
  paste(out, k, k, ds.add(mat_mul(ds_c_fs, mat_mul(b, ds))));
  return out;
}

}  // namespace wnk
