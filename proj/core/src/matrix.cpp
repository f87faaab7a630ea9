// SPDX-License-Identifier: Apache-2.0

#include "lrspike/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lrspike/errors.hpp"

namespace lrspike {

double CsrMatrix::coeff(index_t row, index_t col) const {
  const auto begin = col_idx.begin() + row_ptr[row];
  const auto end = col_idx.begin() + row_ptr[row + 1];
  const auto it = std::lower_bound(begin, end, col);
  if (it == end || *it != col) return 0.0;
  return values[static_cast<std::size_t>(it - col_idx.begin())];
}

void CsrMatrix::validate() const {
  if (n_rows < 0 || n_cols < 0) throw DimensionError("negative dimension");
  if (static_cast<index_t>(row_ptr.size()) != n_rows + 1)
    throw DimensionError("row_ptr length must be n_rows + 1");
  if (row_ptr.front() != 0) throw DimensionError("row_ptr[0] must be 0");
  if (row_ptr.back() != nnz()) throw DimensionError("row_ptr[n_rows] must equal nnz");
  if (col_idx.size() != values.size()) throw DimensionError("col_idx/values length mismatch");
  for (index_t i = 0; i < n_rows; ++i) {
    if (row_ptr[i] > row_ptr[i + 1]) throw DimensionError("row_ptr must be non-decreasing");
    for (index_t p = row_ptr[i]; p < row_ptr[i + 1]; ++p) {
      if (col_idx[p] < 0 || col_idx[p] >= n_cols)
        throw DimensionError("column index out of range");
      if (p > row_ptr[i] && col_idx[p] <= col_idx[p - 1])
        throw DimensionError("column indices must be strictly increasing within a row");
    }
  }
}

DenseBlock CsrMatrix::to_dense() const {
  DenseBlock d = DenseBlock::Zero(n_rows, n_cols);
  for (index_t i = 0; i < n_rows; ++i)
    for (index_t p = row_ptr[i]; p < row_ptr[i + 1]; ++p) d(i, col_idx[p]) = values[p];
  return d;
}

CsrMatrix CsrMatrix::transposed() const {
  CsrMatrix t;
  t.n_rows = n_cols;
  t.n_cols = n_rows;
  t.row_ptr.assign(n_cols + 1, 0);
  for (index_t p = 0; p < nnz(); ++p) t.row_ptr[col_idx[p] + 1]++;
  std::partial_sum(t.row_ptr.begin(), t.row_ptr.end(), t.row_ptr.begin());
  t.col_idx.resize(nnz());
  t.values.resize(nnz());
  std::vector<index_t> next(t.row_ptr.begin(), t.row_ptr.end() - 1);
  for (index_t i = 0; i < n_rows; ++i) {
    for (index_t p = row_ptr[i]; p < row_ptr[i + 1]; ++p) {
      const index_t q = next[col_idx[p]]++;
      t.col_idx[q] = i;
      t.values[q] = values[p];
    }
  }
  return t;
}

CsrMatrix CsrMatrix::from_triplets(index_t n_rows, index_t n_cols, std::vector<index_t> rows,
                                   std::vector<index_t> cols, std::vector<double> vals) {
  if (rows.size() != cols.size() || rows.size() != vals.size())
    throw DimensionError("triplet arrays must have equal length");
  const std::size_t nt = rows.size();
  std::vector<std::size_t> order(nt);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (rows[a] != rows[b]) return rows[a] < rows[b];
    return cols[a] < cols[b];
  });

  CsrMatrix m;
  m.n_rows = n_rows;
  m.n_cols = n_cols;
  m.row_ptr.assign(n_rows + 1, 0);
  m.col_idx.reserve(nt);
  m.values.reserve(nt);
  for (std::size_t t = 0; t < nt; ++t) {
    const std::size_t s = order[t];
    if (rows[s] < 0 || rows[s] >= n_rows || cols[s] < 0 || cols[s] >= n_cols)
      throw DimensionError("triplet index out of range");
    if (!m.col_idx.empty() && !m.values.empty()) {
      const index_t last_row = m.row_ptr[rows[s]] <= static_cast<index_t>(m.col_idx.size()) - 1 &&
                                       m.row_ptr.back() == 0
                                   ? -1
                                   : -1;
      (void)last_row;
    }
    // Sum duplicates: same (row, col) as the previously emitted entry.
    if (!m.col_idx.empty() && m.row_ptr[rows[s] + 1] > 0 && m.col_idx.back() == cols[s] &&
        m.row_ptr[rows[s] + 1] == static_cast<index_t>(m.col_idx.size())) {
      m.values.back() += vals[s];
      continue;
    }
    m.col_idx.push_back(cols[s]);
    m.values.push_back(vals[s]);
    m.row_ptr[rows[s] + 1]++;
  }
  std::partial_sum(m.row_ptr.begin(), m.row_ptr.end(), m.row_ptr.begin());
  m.validate();
  return m;
}

CsrMatrix CsrMatrix::identity(index_t n) {
  CsrMatrix m;
  m.n_rows = m.n_cols = n;
  m.row_ptr.resize(n + 1);
  m.col_idx.resize(n);
  m.values.assign(n, 1.0);
  std::iota(m.row_ptr.begin(), m.row_ptr.end(), index_t{0});
  std::iota(m.col_idx.begin(), m.col_idx.end(), index_t{0});
  return m;
}

DenseBlock spmv(const CsrMatrix& a, const DenseBlock& x) {
  DenseBlock y = DenseBlock::Zero(a.n_rows, x.cols());
  spmv_accumulate(a, x, y);
  return y;
}

void spmv_accumulate(const CsrMatrix& a, const DenseBlock& x, DenseBlock& into) {
  if (a.n_cols != x.rows()) throw DimensionError("spmv: A.n_cols must equal x.n_rows");
  if (into.rows() != a.n_rows || into.cols() != x.cols())
    throw DimensionError("spmv: accumulator shape mismatch");
  for (index_t i = 0; i < a.n_rows; ++i) {
    for (index_t p = a.row_ptr[i]; p < a.row_ptr[i + 1]; ++p) {
      into.row(i) += a.values[p] * x.row(a.col_idx[p]);
    }
  }
}

BandMetrics band_metrics(const CsrMatrix& a) {
  if (!a.square()) throw DimensionError("band_metrics: matrix must be square");
  BandMetrics m;
  double diag_sum = 0.0, total_sum = 0.0;
  for (index_t i = 0; i < a.n_rows; ++i) {
    for (index_t p = a.row_ptr[i]; p < a.row_ptr[i + 1]; ++p) {
      const index_t j = a.col_idx[p];
      if (j > i) m.band.upper_half_bw = std::max(m.band.upper_half_bw, j - i);
      if (j < i) m.band.lower_half_bw = std::max(m.band.lower_half_bw, i - j);
      total_sum += std::abs(a.values[p]);
      if (i == j) diag_sum += std::abs(a.values[p]);
    }
  }
  m.band.k = std::max(m.band.upper_half_bw, m.band.lower_half_bw);
  m.diag_weight = total_sum > 0.0 ? diag_sum / total_sum : 0.0;
  const double band_cells =
      static_cast<double>(m.band.upper_half_bw + m.band.lower_half_bw + 1) *
      static_cast<double>(a.n_rows);
  m.band_density = band_cells > 0.0 ? static_cast<double>(a.nnz()) / band_cells : 0.0;
  return m;
}

}  // namespace lrspike
