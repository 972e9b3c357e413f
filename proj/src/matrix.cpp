#include "linres/matrix.hpp"

#include <stdexcept>

namespace linres {

namespace {
const Poly kZero;
}

SparseMatrix::SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

SparseMatrix SparseMatrix::identity(int n) {
  SparseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, Poly(1));
  return m;
}

SparseMatrix SparseMatrix::from_rows(const std::vector<std::vector<Poly>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows[0].size()) : 0;
  SparseMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("ragged rows");
    for (int j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

void SparseMatrix::check(int i, int j) const {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
    throw std::out_of_range("matrix index out of range");
}

const Poly& SparseMatrix::at(int i, int j) const {
  check(i, j);
  auto it = entries_.find({i, j});
  return it == entries_.end() ? kZero : it->second;
}

void SparseMatrix::set(int i, int j, Poly p) {
  check(i, j);
  if (p.is_zero()) entries_.erase({i, j});
  else entries_[{i, j}] = std::move(p);
}

void SparseMatrix::add(int i, int j, const Poly& p) {
  check(i, j);
  if (p.is_zero()) return;
  auto it = entries_.find({i, j});
  if (it == entries_.end()) {
    entries_.emplace(Index{i, j}, p);
    return;
  }
  it->second += p;
  if (it->second.is_zero()) entries_.erase(it);
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_);
  for (const auto& [ij, p] : entries_) t.entries_.emplace(Index{ij.second, ij.first}, p);
  return t;
}

SparseMatrix SparseMatrix::scaled(const Poly& c) const {
  SparseMatrix m(rows_, cols_);
  for (const auto& [ij, p] : entries_) m.set(ij.first, ij.second, p * c);
  return m;
}

SparseMatrix SparseMatrix::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
  SparseMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const Poly& p = at(rows[i], cols[j]);
      if (!p.is_zero()) m.entries_.emplace(Index{static_cast<int>(i), static_cast<int>(j)}, p);
    }
  return m;
}

SparseMatrix SparseMatrix::substitute(const std::function<std::optional<Poly>(VarId)>& subst) const {
  SparseMatrix m(rows_, cols_);
  for (const auto& [ij, p] : entries_) m.set(ij.first, ij.second, p.substitute(subst));
  return m;
}

std::vector<Poly> SparseMatrix::column(int j) const {
  std::vector<Poly> v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

std::vector<std::vector<Poly>> SparseMatrix::dense() const {
  std::vector<std::vector<Poly>> d(rows_, std::vector<Poly>(cols_));
  for (const auto& [ij, p] : entries_) d[ij.first][ij.second] = p;
  return d;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  std::vector<std::vector<std::pair<int, const Poly*>>> brow(b.rows_);
  for (const auto& [ij, p] : b.entries_) brow[ij.first].emplace_back(ij.second, &p);
  std::map<SparseMatrix::Index, std::vector<Poly::Term>> acc;
  for (const auto& [ij, p] : a.entries_)
    for (const auto& [k, q] : brow[ij.second]) {
      Poly prod = p * *q;
      auto& v = acc[{ij.first, k}];
      v.insert(v.end(), prod.terms().begin(), prod.terms().end());
    }
  SparseMatrix c(a.rows_, b.cols_);
  for (auto& [ij, terms] : acc) {
    Poly s = Poly::from_terms(std::move(terms));
    if (!s.is_zero()) c.entries_.emplace(ij, std::move(s));
  }
  return c;
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  SparseMatrix c = a;
  for (const auto& [ij, p] : b.entries_) c.add(ij.first, ij.second, p);
  return c;
}

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference shape mismatch");
  SparseMatrix c = a;
  for (const auto& [ij, p] : b.entries_) c.add(ij.first, ij.second, -p);
  return c;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::string SparseMatrix::to_string() const {
  std::string s;
  for (int i = 0; i < rows_; ++i) {
    s += "[";
    for (int j = 0; j < cols_; ++j) {
      if (j) s += ", ";
      s += at(i, j).to_string();
    }
    s += "]\n";
  }
  return s;
}

SparseMatrix hconcat(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hconcat row mismatch");
  SparseMatrix m(a.rows(), a.cols() + b.cols());
  for (const auto& [ij, p] : a.entries()) m.set(ij.first, ij.second, p);
  for (const auto& [ij, p] : b.entries()) m.set(ij.first, a.cols() + ij.second, p);
  return m;
}

SparseMatrix vconcat(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vconcat column mismatch");
  SparseMatrix m(a.rows() + b.rows(), a.cols());
  for (const auto& [ij, p] : a.entries()) m.set(ij.first, ij.second, p);
  for (const auto& [ij, p] : b.entries()) m.set(a.rows() + ij.first, ij.second, p);
  return m;
}

SparseMatrix block2x2(const SparseMatrix& a, const SparseMatrix& b, const SparseMatrix& c,
                      const SparseMatrix& d) {
  return vconcat(hconcat(a, b), hconcat(c, d));
}

}  // namespace linres
