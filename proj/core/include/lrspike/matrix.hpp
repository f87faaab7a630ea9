// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace lrspike {

using index_t = std::int64_t;

/// Dense multi-column block. Column-major, (row, col) indexing.
using DenseBlock = Eigen::MatrixXd;

/// General sparse matrix in compressed-row form.
///
/// Invariants (checked by validate()):
///  - row_ptr non-decreasing, row_ptr[0] == 0, row_ptr[n_rows] == nnz
///  - column indices strictly increasing within each row, all < n_cols
///  - no duplicate entries
struct CsrMatrix {
  index_t n_rows = 0;
  index_t n_cols = 0;
  std::vector<index_t> row_ptr;  // length n_rows + 1
  std::vector<index_t> col_idx;
  std::vector<double> values;

  index_t nnz() const { return static_cast<index_t>(values.size()); }
  bool square() const { return n_rows == n_cols; }

  /// Entry lookup by binary search; zero when absent.
  double coeff(index_t row, index_t col) const;

  /// Throws DimensionError on any violated structural invariant.
  void validate() const;

  DenseBlock to_dense() const;
  CsrMatrix transposed() const;

  /// Builds a CSR from (possibly unsorted, possibly duplicated) triplets;
  /// duplicates are summed.
  static CsrMatrix from_triplets(index_t n_rows, index_t n_cols,
                                 std::vector<index_t> rows, std::vector<index_t> cols,
                                 std::vector<double> vals);

  static CsrMatrix identity(index_t n);
};

/// y = A * x. Deterministic summation order (ascending column index per row).
DenseBlock spmv(const CsrMatrix& a, const DenseBlock& x);

/// into += A * x.
void spmv_accumulate(const CsrMatrix& a, const DenseBlock& x, DenseBlock& into);

/// Band extents of a square matrix. k = max(ku, kl) is the coupling
/// half-bandwidth used throughout the partitioned solvers.
struct BandInfo {
  index_t upper_half_bw = 0;  // ku
  index_t lower_half_bw = 0;  // kl
  index_t k = 0;              // max(ku, kl)
};

struct BandMetrics {
  BandInfo band;
  double diag_weight = 0.0;   // sum|a_ii| / sum|a_ij|
  double band_density = 0.0;  // nnz / ((ku+kl+1) * n)
};

BandMetrics band_metrics(const CsrMatrix& a);

}  // namespace lrspike
