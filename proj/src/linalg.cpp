#include "linres/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace linres {

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows, int cols) {
  QMatrix m(static_cast<int>(rows.size()), cols);
  for (int i = 0; i < m.rows_; ++i) {
    if (static_cast<int>(rows[i].size()) != cols) throw std::invalid_argument("row length mismatch");
    for (int j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

QMatrix QMatrix::from_sparse(const SparseMatrix& s) {
  QMatrix m(s.rows(), s.cols());
  for (const auto& [ij, p] : s.entries()) {
    if (!p.is_constant()) throw std::invalid_argument("matrix entry is not a constant: " + p.to_string());
    m(ij.first, ij.second) = p.constant_term();
  }
  return m;
}

QVector QMatrix::row(int i) const {
  return QVector(data_.begin() + static_cast<std::ptrdiff_t>(i) * cols_,
                 data_.begin() + static_cast<std::ptrdiff_t>(i + 1) * cols_);
}

QVector QMatrix::apply(const QVector& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("vector length mismatch");
  QVector out(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0) out[i] += (*this)(i, j) * v[j];
  return out;
}

QVector primitive_normalize(QVector v) {
  Integer den = 1, num = 0;
  for (const auto& q : v) {
    if (q == 0) continue;
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
  }
  for (auto& q : v) q *= den;
  for (const auto& q : v) mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), q.get_num().get_mpz_t());
  if (num == 0) return v;
  auto first = std::find_if(v.begin(), v.end(), [](const Rational& q) { return q != 0; });
  if (*first < 0) num = -num;
  for (auto& q : v) q /= num;
  return v;
}

namespace {

// Fraction-free echelon form of an integer matrix; returns pivot columns.
std::vector<int> bareiss_echelon(std::vector<std::vector<Integer>>& a, int cols) {
  int rows = static_cast<int>(a.size());
  std::vector<int> piv;
  Integer prev = 1;
  int k = 0;
  for (int c = 0; c < cols && k < rows; ++c) {
    int p = -1;
    for (int i = k; i < rows; ++i)
      if (a[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(a[k], a[p]);
    for (int i = k + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        Integer v = a[k][c] * a[i][j] - a[i][c] * a[k][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = v;
      }
      a[i][c] = 0;
    }
    prev = a[k][c];
    piv.push_back(c);
    ++k;
  }
  return piv;
}

std::vector<std::vector<Integer>> integer_rows(const QMatrix& m) {
  std::vector<std::vector<Integer>> a(m.rows(), std::vector<Integer>(m.cols()));
  for (int i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (int j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den().get_mpz_t());
    for (int j = 0; j < m.cols(); ++j) {
      Rational s = m(i, j) * l;
      a[i][j] = s.get_num();
    }
  }
  return a;
}

}  // namespace

std::vector<QVector> exact_kernel(const QMatrix& m) {
  auto a = integer_rows(m);
  auto piv = bareiss_echelon(a, m.cols());
  std::vector<bool> is_piv(m.cols(), false);
  for (int c : piv) is_piv[c] = true;
  std::vector<QVector> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_piv[f]) continue;
    QVector x(m.cols());
    x[f] = 1;
    for (int r = static_cast<int>(piv.size()) - 1; r >= 0; --r) {
      int c = piv[r];
      Rational s = 0;
      for (int j = c + 1; j < m.cols(); ++j)
        if (a[r][j] != 0 && x[j] != 0) s += Rational(a[r][j]) * x[j];
      x[c] = -s / Rational(a[r][c]);
    }
    basis.push_back(primitive_normalize(std::move(x)));
  }
  return basis;
}

std::vector<QVector> exact_kernel(const SparseMatrix& m) { return exact_kernel(QMatrix::from_sparse(m)); }

int rank_q(const QMatrix& m) {
  auto a = integer_rows(m);
  return static_cast<int>(bareiss_echelon(a, m.cols()).size());
}

// ------------------------------------------------------- sparse echelon

namespace {
// r - c * p for sparse rows
SparseQRow axpy(const SparseQRow& r, const Rational& c, const SparseQRow& p) {
  SparseQRow out;
  out.reserve(r.size() + p.size());
  std::size_t i = 0, j = 0;
  while (i < r.size() || j < p.size()) {
    if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
      out.push_back(r[i++]);
    } else if (i == r.size() || p[j].first < r[i].first) {
      out.emplace_back(p[j].first, -c * p[j].second);
      ++j;
    } else {
      Rational v = r[i].second - c * p[j].second;
      if (v != 0) out.emplace_back(r[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}
}  // namespace

SparseQRow SparseEchelon::reduce(SparseQRow row) const {
  // Reduce leading entries first, then the tail, so the result is reduced.
  SparseQRow done;
  while (!row.empty()) {
    auto it = pivots_.find(row.front().first);
    if (it == pivots_.end()) {
      done.push_back(row.front());
      row.erase(row.begin());
      continue;
    }
    Rational c = row.front().second;
    row = axpy(row, c, it->second);
  }
  return done;
}

bool SparseEchelon::insert(SparseQRow row) {
  while (!row.empty()) {
    auto it = pivots_.find(row.front().first);
    if (it == pivots_.end()) break;
    Rational c = row.front().second;
    row = axpy(row, c, it->second);
  }
  if (row.empty()) return false;
  Rational lead = row.front().second;
  if (lead != 1)
    for (auto& e : row) e.second /= lead;
  pivots_.emplace(row.front().first, std::move(row));
  return true;
}

SparseQRow to_sparse_row(const QVector& v) {
  SparseQRow r;
  for (int j = 0; j < static_cast<int>(v.size()); ++j)
    if (v[j] != 0) r.emplace_back(j, v[j]);
  return r;
}

QVector to_dense(const SparseQRow& r, int n) {
  QVector v(n);
  for (const auto& [j, q] : r) v[j] = q;
  return v;
}

int sparse_rank(const std::vector<SparseQRow>& rows) {
  std::vector<const SparseQRow*> order;
  for (const auto& r : rows) order.push_back(&r);
  std::stable_sort(order.begin(), order.end(),
                   [](const SparseQRow* a, const SparseQRow* b) { return a->size() < b->size(); });
  SparseEchelon e;
  for (const auto* r : order) e.insert(*r);
  return e.rank();
}

std::vector<QVector> span_basis(const std::vector<QVector>& vectors, int dim) {
  SparseEchelon e;
  for (const auto& v : vectors) e.insert(to_sparse_row(v));
  // Back-substitute to the reduced echelon form.
  std::vector<std::pair<int, SparseQRow>> piv(e.pivots().begin(), e.pivots().end());
  for (int i = static_cast<int>(piv.size()) - 1; i >= 0; --i) {
    for (int k = 0; k < i; ++k) {
      auto& row = piv[k].second;
      auto it = std::find_if(row.begin(), row.end(), [&](const auto& x) { return x.first == piv[i].first; });
      if (it == row.end()) continue;
      Rational c = it->second;
      row = axpy(row, c, piv[i].second);
    }
  }
  std::vector<QVector> out;
  for (auto& [c, row] : piv) out.push_back(primitive_normalize(to_dense(row, dim)));
  return out;
}

bool span_contains(const std::vector<QVector>& big, const std::vector<QVector>& small, int) {
  SparseEchelon e;
  for (const auto& v : big) e.insert(to_sparse_row(v));
  for (const auto& v : small)
    if (!e.contains(to_sparse_row(v))) return false;
  return true;
}

bool span_equal(const std::vector<QVector>& a, const std::vector<QVector>& b, int dim) {
  return span_contains(a, b, dim) && span_contains(b, a, dim);
}

// --------------------------------------------------- polynomial Bareiss

namespace {

int pick_pivot(const std::vector<std::vector<Poly>>& a, int from, int c) {
  int best = -1;
  for (int i = from; i < static_cast<int>(a.size()); ++i)
    if (!a[i][c].is_zero() && (best < 0 || a[i][c].size() < a[best][c].size())) best = i;
  return best;
}

// Fraction-free elimination in place; returns the number of pivots and
// the sign of the row permutation.
std::pair<int, int> poly_bareiss(std::vector<std::vector<Poly>>& a, int cols, bool stop_on_missing) {
  int rows = static_cast<int>(a.size());
  Poly prev(1);
  int k = 0, sign = 1;
  for (int c = 0; c < cols && k < rows; ++c) {
    int p = pick_pivot(a, k, c);
    if (p < 0) {
      if (stop_on_missing) return {k, 0};
      continue;
    }
    if (p != k) {
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        Poly v = a[k][c] * a[i][j] - a[i][c] * a[k][j];
        a[i][j] = prev.is_constant() && prev.constant_term() == 1 ? std::move(v) : divide_exact(v, prev);
      }
      a[i][c] = Poly();
    }
    prev = a[k][c];
    ++k;
  }
  return {k, sign};
}

}  // namespace

namespace {

bool all_constant(const SparseMatrix& m) {
  for (const auto& [ij, p] : m.entries())
    if (!p.is_constant()) return false;
  return true;
}

/// Determinants of the square submatrices on the last |C| rows of `rows`
/// and column set C, by first-row expansion memoized on C.
class LaplaceMinors {
 public:
  LaplaceMinors(const std::vector<std::vector<Poly>>& a, std::vector<int> rows) : a_(a), rows_(std::move(rows)) {}

  Poly det(std::uint32_t cols) {
    int s = __builtin_popcount(cols);
    if (s == 0) return Poly(1);
    auto it = memo_.find(cols);
    if (it != memo_.end()) return it->second;
    int row = rows_[rows_.size() - s];
    Poly out;
    int pos = 0;
    for (std::uint32_t m = cols; m != 0; m &= m - 1, ++pos) {
      int c = __builtin_ctz(m);
      const Poly& e = a_[row][c];
      if (e.is_zero()) continue;
      Poly sub = det(cols & ~(std::uint32_t{1} << c));
      if (sub.is_zero()) continue;
      if (pos % 2 == 0)
        out += e * sub;
      else
        out -= e * sub;
    }
    memo_.emplace(cols, out);
    return out;
  }

 private:
  const std::vector<std::vector<Poly>>& a_;
  std::vector<int> rows_;
  std::map<std::uint32_t, Poly> memo_;
};

constexpr int kLaplaceLimit = 12;

}  // namespace

Poly determinant(const SparseMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  int n = m.rows();
  if (n == 0) return Poly(1);
  auto a = m.dense();
  if (n <= kLaplaceLimit && !all_constant(m)) {
    std::vector<int> rows(n);
    std::iota(rows.begin(), rows.end(), 0);
    return LaplaceMinors(a, rows).det((std::uint32_t{1} << n) - 1);
  }
  auto [k, sign] = poly_bareiss(a, n, true);
  if (k < n) return Poly();
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

std::pair<Poly, SparseMatrix> det_and_adjugate(const SparseMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("adjugate of a non-square matrix");
  int n = m.rows();
  SparseMatrix adj(n, n);
  if (n == 1) {
    adj.set(0, 0, Poly(1));
    return {m.at(0, 0), adj};
  }
  bool laplace = n <= kLaplaceLimit && !all_constant(m);
  auto a = m.dense();
  std::uint32_t full = (std::uint32_t{1} << n) - 1;
  for (int i = 0; i < n; ++i) {
    std::vector<int> rows;
    for (int r = 0; r < n; ++r)
      if (r != i) rows.push_back(r);
    LaplaceMinors minors(a, rows);
    for (int j = 0; j < n; ++j) {
      Poly minor;
      if (laplace) {
        minor = minors.det(full & ~(std::uint32_t{1} << j));
      } else {
        std::vector<int> cols;
        for (int c = 0; c < n; ++c)
          if (c != j) cols.push_back(c);
        minor = determinant(m.submatrix(rows, cols));
      }
      adj.set(j, i, (i + j) % 2 ? -minor : minor);
    }
  }
  Poly det;
  for (int j = 0; j < n; ++j) det += m.at(0, j) * adj.at(j, 0);
  return {det, adj};
}

QMatrix evaluate(const SparseMatrix& m, const std::map<VarId, Rational>& values) {
  QMatrix q(m.rows(), m.cols());
  for (const auto& [ij, p] : m.entries())
    q(ij.first, ij.second) = p.evaluate([&](VarId v) {
      auto it = values.find(v);
      if (it == values.end()) throw std::invalid_argument("unassigned variable " + v.to_string());
      return it->second;
    });
  return q;
}

namespace {

std::map<VarId, Rational> random_point(const SparseMatrix& m, std::mt19937_64& rng) {
  std::set<VarId> vars;
  for (const auto& [ij, p] : m.entries())
    for (auto v : p.variables()) vars.insert(v);
  std::uniform_int_distribution<long> num(-32768, 32767), den(1, 65535);
  std::map<VarId, Rational> pt;
  for (auto v : vars) {
    long a = 0;
    while (a == 0) a = num(rng);
    Rational q(a, den(rng));
    q.canonicalize();
    pt[v] = q;
  }
  return pt;
}

}  // namespace

RankResult rank_over_fraction_field(const SparseMatrix& m, const RankOptions& opts) {
  if (m.is_zero()) return {0, opts.probabilistic ? "probabilistic" : "exact"};
  if (opts.probabilistic) {
    std::mt19937_64 rng(opts.seed);
    int r0 = -1;
    bool agree = true;
    for (int trial = 0; trial < 3; ++trial) {
      int r = rank_q(evaluate(m, random_point(m, rng)));
      if (r0 >= 0 && r != r0) agree = false;
      r0 = std::max(r0, r);
    }
    if (agree) return {r0, "probabilistic"};
  }
  auto a = m.dense();
  auto [k, sign] = poly_bareiss(a, m.cols(), false);
  (void)sign;
  return {k, "exact"};
}

std::optional<SparseMatrix> solve_polynomial(const SparseMatrix& a, const SparseMatrix& b, std::uint64_t seed) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
  int k = a.cols();
  std::mt19937_64 rng(seed);
  QMatrix num = evaluate(a, random_point(a, rng));
  std::vector<int> order(a.rows());
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> weight(a.rows(), 0);
  for (const auto& [ij, p] : a.entries()) weight[ij.first] += p.size();
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return weight[x] < weight[y]; });
  SparseEchelon e;
  std::vector<int> chosen;
  for (int r : order) {
    if (e.insert(to_sparse_row(num.row(r)))) chosen.push_back(r);
    if (static_cast<int>(chosen.size()) == k) break;
  }
  if (static_cast<int>(chosen.size()) < k) return std::nullopt;
  std::sort(chosen.begin(), chosen.end());
  std::vector<int> all(k);
  std::iota(all.begin(), all.end(), 0);
  std::vector<int> bcols(b.cols());
  std::iota(bcols.begin(), bcols.end(), 0);
  auto [det, adj] = det_and_adjugate(a.submatrix(chosen, all));
  if (det.is_zero()) return std::nullopt;
  SparseMatrix numer = adj * b.submatrix(chosen, bcols);
  SparseMatrix x(k, b.cols());
  try {
    for (const auto& [ij, p] : numer.entries()) x.set(ij.first, ij.second, divide_exact(p, det));
  } catch (const std::domain_error&) {
    return std::nullopt;
  }
  if (a * x != b) return std::nullopt;
  return x;
}

}  // namespace linres
