#pragma once
// Exact linear algebra over Q and over fraction fields of polynomial rings.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linres/matrix.hpp"

namespace linres {

using QVector = std::vector<Rational>;

/// Dense rational matrix.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}
  static QMatrix from_rows(const std::vector<QVector>& rows, int cols);
  /// Requires every entry to be a constant polynomial.
  static QMatrix from_sparse(const SparseMatrix& m);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rational& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  QVector row(int i) const;
  QVector apply(const QVector& v) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

/// Scales a rational vector to a primitive integer vector whose first
/// nonzero entry is positive.  The zero vector is returned unchanged.
QVector primitive_normalize(QVector v);

/// Right-kernel basis via fraction-free elimination, each vector primitive
/// with positive leading entry.
std::vector<QVector> exact_kernel(const QMatrix& m);
std::vector<QVector> exact_kernel(const SparseMatrix& m);
int rank_q(const QMatrix& m);

/// Sparse row over Q: (column, value) pairs with increasing columns.
using SparseQRow = std::vector<std::pair<int, Rational>>;

/// Incremental row echelon form over Q with normalized pivot rows.
class SparseEchelon {
 public:
  /// Reduces the row and inserts it when independent; returns true in that case.
  bool insert(SparseQRow row);
  /// Reduces the row against the current pivots and returns the remainder.
  SparseQRow reduce(SparseQRow row) const;
  bool contains(const SparseQRow& row) const { return reduce(row).empty(); }
  int rank() const { return static_cast<int>(pivots_.size()); }
  const std::map<int, SparseQRow>& pivots() const { return pivots_; }

 private:
  std::map<int, SparseQRow> pivots_;
};

SparseQRow to_sparse_row(const QVector& v);
QVector to_dense(const SparseQRow& r, int n);
/// Rank of a family of sparse rows.
int sparse_rank(const std::vector<SparseQRow>& rows);
/// Reduced basis of the span, in primitive normalized form and canonical order.
std::vector<QVector> span_basis(const std::vector<QVector>& vectors, int dim);
bool span_equal(const std::vector<QVector>& a, const std::vector<QVector>& b, int dim);
bool span_contains(const std::vector<QVector>& big, const std::vector<QVector>& small, int dim);

Poly determinant(const SparseMatrix& m);
/// (det M, Adj M) with M * Adj M = det M * I.
std::pair<Poly, SparseMatrix> det_and_adjugate(const SparseMatrix& m);

struct RankOptions {
  bool probabilistic = false;
  std::uint64_t seed = 1;
};

struct RankResult {
  int rank = 0;
  /// "exact" or "probabilistic".
  std::string mode;
};

RankResult rank_over_fraction_field(const SparseMatrix& m, const RankOptions& opts = {});

/// Solves A X = B over the polynomial ring when A has full column rank over
/// the fraction field and the solution is polynomial; nullopt otherwise.
std::optional<SparseMatrix> solve_polynomial(const SparseMatrix& a, const SparseMatrix& b,
                                             std::uint64_t seed = 7);

/// Evaluates every variable at the given values (missing variables throw).
QMatrix evaluate(const SparseMatrix& m, const std::map<VarId, Rational>& values);

}  // namespace linres
