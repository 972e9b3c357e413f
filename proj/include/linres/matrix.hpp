#pragma once
// Sparse matrices with polynomial entries.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "linres/poly.hpp"

namespace linres {

class SparseMatrix {
 public:
  using Index = std::pair<int, int>;

  SparseMatrix() = default;
  SparseMatrix(int rows, int cols);
  static SparseMatrix identity(int n);
  /// Dense row-major construction; zero entries are dropped.
  static SparseMatrix from_rows(const std::vector<std::vector<Poly>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::map<Index, Poly>& entries() const { return entries_; }
  std::size_t nonzeros() const { return entries_.size(); }

  /// Entry (i, j), zero when absent.
  const Poly& at(int i, int j) const;
  void set(int i, int j, Poly p);
  void add(int i, int j, const Poly& p);

  SparseMatrix transpose() const;
  SparseMatrix scaled(const Poly& c) const;
  SparseMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;
  SparseMatrix substitute(const std::function<std::optional<Poly>(VarId)>& subst) const;
  /// Column j as a dense vector.
  std::vector<Poly> column(int j) const;
  std::vector<std::vector<Poly>> dense() const;
  bool is_zero() const { return entries_.empty(); }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);
  friend bool operator!=(const SparseMatrix& a, const SparseMatrix& b) { return !(a == b); }

  /// Multi-line rendering, one bracketed row per line.
  std::string to_string() const;

 private:
  void check(int i, int j) const;
  int rows_ = 0;
  int cols_ = 0;
  std::map<Index, Poly> entries_;
};

/// Horizontal and vertical block assembly.
SparseMatrix hconcat(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix vconcat(const SparseMatrix& a, const SparseMatrix& b);
/// [[a, b], [c, d]] with compatible shapes.
SparseMatrix block2x2(const SparseMatrix& a, const SparseMatrix& b, const SparseMatrix& c,
                      const SparseMatrix& d);

}  // namespace linres
