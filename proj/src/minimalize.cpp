#include "linres/minimalize.hpp"

#include <stdexcept>

#include "linres/linalg.hpp"
#include "linres/pfafflab.hpp"

namespace linres {

namespace {

std::optional<Poly> try_divide(const Poly& a, const Poly& b) {
  try {
    return divide_exact(a, b);
  } catch (const std::domain_error&) {
    return std::nullopt;
  }
}

struct Presentation {
  std::vector<int> order;
  std::vector<int> signs;
  std::vector<std::string> names;
};

/// Order, signs and names of the kernel columns; (3,2,2) follows the
/// presentation of the printed bases g_1..g_5 and gamma_1..gamma_5.
Presentation presentation(int d, int n, int r, int p, int count) {
  Presentation pr;
  if (d == 3 && n == 2 && r == 2 && p == 0 && count == 5) {
    pr.order = {4, 2, 3, 0, 1};
    pr.signs = {1, 1, 1, 1, 1};
    for (int k = 1; k <= 5; ++k) pr.names.push_back("g" + std::to_string(k));
    return pr;
  }
  if (d == 3 && n == 2 && r == 2 && p == 1 && count == 5) {
    pr.order = {0, 1, 2, 3, 4};
    pr.signs = {1, -1, -1, 1, 1};
    for (int k = 1; k <= 5; ++k) pr.names.push_back("gamma" + std::to_string(k));
    return pr;
  }
  for (int k = 0; k < count; ++k) {
    pr.order.push_back(k);
    pr.signs.push_back(1);
    pr.names.push_back("X" + std::to_string(p) + "_" + std::to_string(k + 1));
  }
  return pr;
}

}  // namespace

LocalizedBasis kernel_basis_X(int d, int n, int r, int p) {
  if (n != 2 || r != 2 || d < 2 || p < 0 || p >= d) throw std::invalid_argument("unsupported parameters");
  auto labels = hook_basis(HookKind::L, d, p, r);
  int N = static_cast<int>(labels.size());
  auto [delta, adj] = det_and_adjugate(generic_t_matrix(d, n));
  SparseMatrix tmat = generic_t_matrix(d, n);

  LocalizedBasis basis;
  basis.d = d;
  basis.n = n;
  basis.r = r;
  basis.p = p;
  basis.delta = delta;
  basis.transform = SparseMatrix(N, N);
  basis.transform_inverse_times_delta = SparseMatrix(N, N);
  for (int k = 0; k < N;) {
    const auto& a = labels[k].a;
    int end = k;
    while (end < N && labels[end].a == a) ++end;
    if (a.front() == 1) {
      if (end - k != d) throw std::logic_error("kernel_basis_X: unexpected block size");
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          if (!adj.at(i, j).is_zero()) basis.transform.set(k + i, k + j, adj.at(i, j));
          basis.transform_inverse_times_delta.set(k + i, k + j, tmat.at(i, j));
        }
    } else {
      for (int i = k; i < end; ++i) {
        basis.transform.set(i, i, Poly(1));
        basis.transform_inverse_times_delta.set(i, i, delta);
      }
    }
    k = end;
  }

  SparseMatrix v = vertical_maps(d, n, r)[p];
  SparseMatrix m = v * basis.transform;
  int rows = m.rows();
  std::vector<std::vector<std::pair<int, Poly>>> cols(N);
  for (const auto& [ij, e] : m.entries()) cols[ij.second].emplace_back(ij.first, e);

  std::vector<int> pivot_of_row(rows, -1), eps(rows, 0);
  std::vector<bool> is_pivot(N, false);
  for (int c = 0; c < N; ++c) {
    if (cols[c].size() != 1) continue;
    auto [row, e] = cols[c].front();
    if (pivot_of_row[row] != -1) continue;
    int s = e == delta ? 1 : (e == -delta ? -1 : 0);
    if (s == 0) continue;
    pivot_of_row[row] = c;
    eps[row] = s;
    is_pivot[c] = true;
  }
  for (int row = 0; row < rows; ++row)
    if (pivot_of_row[row] == -1)
      throw std::runtime_error("kernel_basis_X: reduction failure in block p = " + std::to_string(p) +
                               " at row " + std::to_string(row));

  struct Candidate {
    int free_col;
    Poly alpha;
    SparseMatrix u;
  };
  std::vector<Candidate> cands;
  for (int c = 0; c < N; ++c) {
    if (is_pivot[c]) continue;
    bool divisible = true;
    for (const auto& [row, e] : cols[c])
      if (!try_divide(e, delta)) {
        divisible = false;
        break;
      }
    Poly alpha = divisible ? Poly(1) : delta;
    SparseMatrix u(N, 1);
    u.set(c, 0, alpha);
    for (const auto& [row, e] : cols[c]) {
      Poly beta = divide_exact(-(alpha * e), delta.scaled(eps[row]));
      u.set(pivot_of_row[row], 0, beta);
    }
    cands.push_back({c, alpha, std::move(u)});
  }

  Presentation pr = presentation(d, n, r, p, static_cast<int>(cands.size()));
  basis.columns = SparseMatrix(N, static_cast<int>(cands.size()));
  for (int k = 0; k < static_cast<int>(cands.size()); ++k) {
    const Candidate& cand = cands[pr.order[k]];
    SparseMatrix col = (basis.transform * cand.u).scaled(Poly(pr.signs[k]));
    for (const auto& [ij, e] : col.entries()) basis.columns.set(ij.first, k, e);
    basis.free.push_back(cand.free_col);
    basis.scale.push_back(cand.alpha.scaled(pr.signs[k]));
    basis.names.push_back(pr.names[k]);
  }
  for (int row = 0; row < rows; ++row) basis.pivots.push_back(pivot_of_row[row]);

  if (!(v * basis.columns).is_zero()) throw std::logic_error("kernel_basis_X: columns are not in the kernel");
  return basis;
}

SparseMatrix coordinates_in(const LocalizedBasis& basis, const SparseMatrix& y) {
  if (y.rows() != basis.columns.rows()) throw std::invalid_argument("coordinates_in: row count mismatch");
  SparseMatrix z = basis.transform_inverse_times_delta * y;
  SparseMatrix x(basis.rank(), y.cols());
  for (int k = 0; k < basis.rank(); ++k) {
    Poly den = basis.delta * basis.scale[k];
    for (int j = 0; j < y.cols(); ++j) {
      const Poly& e = z.at(basis.free[k], j);
      if (!e.is_zero()) x.set(k, j, divide_exact(e, den));
    }
  }
  if (basis.columns * x != y) throw std::domain_error("coordinates_in: vector is not in the span of the basis");
  return x;
}

SparseMatrix snake_map(int d, int n, int r) {
  if (d < 2 || n < 1 || r < n || r > 2 * n - 2) throw std::invalid_argument("snake_map: requires n <= r <= 2n-2");
  int rho = r - n;
  auto adj = det_and_adjugate(generic_t_matrix(d, n)).second;
  auto target = hook_basis(HookKind::L, d, d - 2, r);
  SparseMatrix out(static_cast<int>(target.size()), 1);
  std::vector<int> all(d);
  for (int i = 0; i < d; ++i) all[i] = i + 1;
  for (const auto& mp : monomials(d, n - 1)) {
    int row = monomial_index(mp);
    Poly lambda;
    for (const auto& mm : monomials(d, n - 1 - rho)) {
      Exponents shifted = mm;
      shifted[0] += rho;
      const Poly& a = adj.at(row, monomial_index(shifted));
      if (!a.is_zero()) lambda += a.times_monomial(Monomial::structural(mm), 1);
    }
    if (lambda.is_zero()) continue;
    Exponents b = mp;
    b[0] += rho;
    for (const auto& [h, c] : koszul_L(HookIndex::L(d, all, exps_to_indices(b))))
      out.add(hook_position(h), 0, lambda * c);
  }
  SparseMatrix v = vertical_maps(d, n, r)[d - 2];
  if (!(v * out).is_zero()) throw std::runtime_error("splitting unavailable");
  return out;
}

FreeComplex build_generic_Gprime(int d, int n) {
  if (n != 2 || d < 2) throw std::invalid_argument("unsupported parameters");
  int r = 2;
  std::vector<LocalizedBasis> bases;
  for (int p = 0; p <= d - 2; ++p) bases.push_back(kernel_basis_X(d, n, r, p));
  FreeComplex lc = build_L_complex(d, r);
  const Poly& delta = bases.front().delta;

  FreeComplex g;
  g.meta = {d, n, r, true};
  g.modules.push_back({{"1"}, {{0, 0}}});
  for (int i = 1; i <= d - 1; ++i) {
    GradedFreeModule m;
    m.labels = bases[i - 1].names;
    m.twists.assign(m.labels.size(), Bidegree{-(r + i - 1), 0});
    g.modules.push_back(std::move(m));
  }
  g.modules.push_back({{"w"}, {{-(2 * n + d - 2), 0}}});

  g.diffs.push_back(lc.d(1) * bases[0].columns);
  for (int i = 2; i <= d - 1; ++i)
    g.diffs.push_back(coordinates_in(bases[i - 2], (lc.d(i) * bases[i - 1].columns).scaled(delta)));
  g.diffs.push_back(coordinates_in(bases[d - 2], snake_map(d, n, r).scaled(delta)));
  g.validate_shapes();
  return g;
}

std::vector<Poly> signed_submaximal_pfaffians(const SparseMatrix& z) {
  AltMatrix a = AltMatrix::from(z);
  std::vector<Poly> out;
  for (int j = 0; j < a.size(); ++j) {
    std::vector<int> keep;
    for (int k = 0; k < a.size(); ++k)
      if (k != j) keep.push_back(k);
    Poly pf = pfaffian_of(a, keep);
    out.push_back(j % 2 == 0 ? pf : -pf);
  }
  return out;
}

namespace {

SparseMatrix drop(const SparseMatrix& m, int row, int col) {
  std::vector<int> rows, cols;
  for (int i = 0; i < m.rows(); ++i)
    if (i != row) rows.push_back(i);
  for (int j = 0; j < m.cols(); ++j)
    if (j != col) cols.push_back(j);
  return m.submatrix(rows, cols);
}

void drop_generator(GradedFreeModule& m, int k) {
  m.labels.erase(m.labels.begin() + k);
  m.twists.erase(m.twists.begin() + k);
}

}  // namespace

FreeComplex minimize_complex(const FreeComplex& c) {
  c.validate_shapes();
  FreeComplex out = c;
  for (;;) {
    int hit = -1, a = -1, b = -1;
    Rational u;
    for (int i = 1; i <= out.length() && hit < 0; ++i)
      for (const auto& [ij, e] : out.d(i).entries())
        if (e.is_constant()) {
          hit = i;
          a = ij.first;
          b = ij.second;
          u = e.constant_term();
          break;
        }
    if (hit < 0) break;
    SparseMatrix& di = out.diffs[hit - 1];
    std::vector<std::pair<int, Poly>> col_b, row_a;
    for (const auto& [ij, e] : di.entries()) {
      if (ij.second == b && ij.first != a) col_b.emplace_back(ij.first, e);
      if (ij.first == a && ij.second != b) row_a.emplace_back(ij.second, e);
    }
    Rational inv = 1 / u;
    for (const auto& [rr, er] : col_b)
      for (const auto& [cc, ec] : row_a) di.add(rr, cc, -(er * ec).scaled(inv));
    di = drop(di, a, b);
    if (hit < out.length()) out.diffs[hit] = drop(out.diffs[hit], b, -1);
    if (hit > 1) out.diffs[hit - 2] = drop(out.diffs[hit - 2], -1, a);
    drop_generator(out.modules[hit - 1], a);
    drop_generator(out.modules[hit], b);
  }
  out.validate_shapes();
  return out;
}

long long betti_truncation(int d, int n, int r, int i) {
  if (r < n || r > 2 * n - 2 || i < 1 || i > d) throw std::invalid_argument("betti_truncation: parameters out of range");
  auto z = [](long long v) { return Integer(static_cast<long>(v)); };
  Integer v = z(binomial(d + r - 1, i - 1 + r)) * z(binomial(i + r - 2, i - 1)) -
              z(binomial(d + 2 * n - r - 2, i - 1)) * z(binomial(d + 2 * n - r - i - 2, d - i));
  return v.get_si();
}

}  // namespace linres
