#include "linres/inversesys.hpp"

#include <numeric>
#include <stdexcept>

namespace linres {

Rational InverseSystem::at(const Exponents& e) const {
  auto it = coeffs.find(e);
  return it == coeffs.end() ? Rational(0) : it->second;
}

void InverseSystem::validate() const {
  if (d < 1 || n < 1) throw std::invalid_argument("inverse system: d and n must be positive");
  bool nonzero = false;
  for (const auto& [e, c] : coeffs) {
    if (static_cast<int>(e.size()) != d) throw std::invalid_argument("inverse system: key has wrong length");
    int s = 0;
    for (int x : e) {
      if (x < 0) throw std::invalid_argument("inverse system: negative exponent");
      s += x;
    }
    if (s != 2 * n - 2) throw std::invalid_argument("inverse system: key degree is not 2n-2");
    if (c != 0) nonzero = true;
  }
  if (!nonzero) throw std::invalid_argument("inverse system: all coefficients are zero");
}

void InverseSystem::normalize() {
  for (auto it = coeffs.begin(); it != coeffs.end();)
    it = it->second == 0 ? coeffs.erase(it) : std::next(it);
}

std::vector<Poly> GradedIdealSlice::polys() const {
  std::vector<Poly> out;
  for (const auto& v : basis) out.push_back(vector_to_poly(v, d, degree));
  return out;
}

QVector poly_to_vector(const Poly& f, int d, int e) {
  QVector v(monomials(d, e).size());
  for (const auto& [m, c] : f.terms()) {
    auto ex = m.structural_exponents(d);
    if (std::accumulate(ex.begin(), ex.end(), 0) != e)
      throw std::invalid_argument("poly_to_vector: polynomial is not homogeneous of degree " + std::to_string(e));
    v[monomial_index(ex)] = c;
  }
  return v;
}

Poly vector_to_poly(const QVector& v, int d, int e) {
  const auto& mons = monomials(d, e);
  std::vector<Poly::Term> terms;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k] != 0) terms.emplace_back(Monomial::structural(mons[k]), v[k]);
  return Poly::from_terms(std::move(terms));
}

namespace {
Exponents add(const Exponents& a, const Exponents& b) {
  Exponents r = a;
  for (std::size_t k = 0; k < r.size(); ++k) r[k] += b[k];
  return r;
}
}  // namespace

SparseMatrix p_map(const InverseSystem& phi, int i) {
  int top = 2 * phi.n - 2;
  if (i < 0 || i > top) throw std::invalid_argument("p_map: degree out of range");
  const auto& cols = monomials(phi.d, i);
  const auto& rows = monomials(phi.d, top - i);
  SparseMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (int c = 0; c < static_cast<int>(cols.size()); ++c)
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      Rational v = phi.at(add(cols[c], rows[r]));
      if (v != 0) m.set(r, c, Poly(v));
    }
  return m;
}

SparseMatrix t_matrix(const InverseSystem& phi) { return p_map(phi, phi.n - 1); }

Rational delta(const InverseSystem& phi) { return determinant(t_matrix(phi)).constant_term(); }

bool in_In(const InverseSystem& phi) { return delta(phi) != 0; }

SparseMatrix sigma_adjugate(const InverseSystem& phi) { return det_and_adjugate(t_matrix(phi)).second; }

SparseMatrix generic_t_matrix(int d, int n) {
  const auto& mons = monomials(d, n - 1);
  int N = static_cast<int>(mons.size());
  SparseMatrix m(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) m.set(i, j, Poly::t(add(mons[i], mons[j])));
  return m;
}

Rational apply_phi(const InverseSystem& phi, const Poly& f) {
  Rational s = 0;
  for (const auto& [m, c] : f.terms()) s += c * phi.at(m.structural_exponents(phi.d));
  return s;
}

std::map<Exponents, Rational> contract_poly_on_phi(const Poly& f, const InverseSystem& phi) {
  std::map<Exponents, Rational> out;
  for (const auto& [m, c] : f.terms()) {
    auto a = m.structural_exponents(phi.d);
    for (const auto& [e, v] : phi.coeffs) {
      auto r = contract_sym_on_div(SymMonomial{a}, DivMonomial{e});
      if (!r) continue;
      out[r->e] += c * v;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

GradedIdealSlice ann_slice(const InverseSystem& phi, int e) {
  GradedIdealSlice s{phi.d, e, {}};
  if (e > 2 * phi.n - 2) {
    int N = static_cast<int>(monomials(phi.d, e).size());
    for (int k = 0; k < N; ++k) {
      QVector v(N);
      v[k] = 1;
      s.basis.push_back(std::move(v));
    }
    return s;
  }
  s.basis = exact_kernel(p_map(phi, e));
  return s;
}

std::vector<Poly> ann_generators_explicit(const InverseSystem& phi) {
  if (delta(phi) == 0) throw std::invalid_argument("not a compressed inverse system");
  int d = phi.d, n = phi.n;
  SparseMatrix adj = sigma_adjugate(phi);
  const auto& basis = monomials(d, n - 1);
  auto dsigma = [&](const Exponents& a) {
    Poly p;
    int col = monomial_index(a);
    for (int r = 0; r < static_cast<int>(basis.size()); ++r)
      if (!adj.at(r, col).is_zero()) p += Poly::term(Monomial::structural(basis[r]), adj.at(r, col).constant_term());
    return p;
  };
  std::vector<Poly> gens;
  if (n >= 2) {
    for (const auto& a : monomials(d, n - 2))
      for (int i = 1; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j) {
          Exponents ai = a, aj = a;
          ++ai[i - 1];
          ++aj[j - 1];
          Poly g = Poly::x(i) * dsigma(ai) - Poly::x(j) * dsigma(aj);
          if (!g.is_zero()) gens.push_back(g);
        }
  }
  for (const auto& a : monomials(d, n - 1))
    for (int i = 1; i <= d; ++i) {
      if (a[i - 1] != 0) continue;
      Poly g = Poly::x(i) * dsigma(a);
      if (!g.is_zero()) gens.push_back(g);
    }
  return gens;
}

InverseSystem inverse_system_from_ideal(const GradedIdealSlice& slice, int d, int n) {
  int top = 2 * n - 2;
  if (slice.degree != top || slice.d != d) throw std::invalid_argument("slice must have degree 2n-2");
  int N = static_cast<int>(monomials(d, top).size());
  QMatrix m(slice.dim(), N);
  for (int i = 0; i < slice.dim(); ++i)
    for (int j = 0; j < N; ++j) m(i, j) = slice.basis[i][j];
  auto ker = exact_kernel(m);
  if (ker.size() != 1) throw std::invalid_argument("not Gorenstein at this socle degree");
  InverseSystem phi{d, n, {}};
  const auto& mons = monomials(d, top);
  for (int j = 0; j < N; ++j)
    if (ker[0][j] != 0) phi.coeffs[mons[j]] = ker[0][j];
  return phi;
}

GradedIdealSlice ideal_slice(const std::vector<Poly>& gens, int d, int e) {
  std::vector<QVector> vecs;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    int dg = g.degree();
    if (dg > e) continue;
    for (const auto& m : monomials(d, e - dg))
      vecs.push_back(poly_to_vector(g.times_monomial(Monomial::structural(m), 1), d, e));
  }
  int N = static_cast<int>(monomials(d, e).size());
  return GradedIdealSlice{d, e, span_basis(vecs, N)};
}

GradedIdealSlice multiply_by_forms(const GradedIdealSlice& slice, int k) {
  return ideal_slice(slice.polys(), slice.d, slice.degree + k);
}

std::vector<ColonDegree> colon_ideal_slices(const std::vector<Poly>& f, const Poly& g, int d, int up_to) {
  if (g.is_zero()) throw std::invalid_argument("colon by zero");
  int dg = g.degree();
  std::vector<ColonDegree> out;
  GradedIdealSlice prev{d, -1, {}};
  for (int e = 0; e <= up_to; ++e) {
    int k = e + dg;
    GradedIdealSlice w = ideal_slice(f, d, k);
    int Nk = static_cast<int>(monomials(d, k).size());
    // Functionals vanishing on [(F)]_k.
    QMatrix wm(w.dim(), Nk);
    for (int i = 0; i < w.dim(); ++i)
      for (int j = 0; j < Nk; ++j) wm(i, j) = w.basis[i][j];
    auto annihilators = exact_kernel(wm);
    const auto& mons = monomials(d, e);
    QMatrix cond(static_cast<int>(annihilators.size()), static_cast<int>(mons.size()));
    for (int j = 0; j < static_cast<int>(mons.size()); ++j) {
      QVector hv = poly_to_vector(g.times_monomial(Monomial::structural(mons[j]), 1), d, k);
      for (int i = 0; i < static_cast<int>(annihilators.size()); ++i) {
        Rational s = 0;
        for (int t = 0; t < Nk; ++t)
          if (hv[t] != 0) s += hv[t] * annihilators[i][t];
        cond(i, j) = s;
      }
    }
    GradedIdealSlice slice{d, e, span_basis(exact_kernel(cond), static_cast<int>(mons.size()))};
    GradedIdealSlice mingens{d, e, {}};
    SparseEchelon ech;
    if (e > 0)
      for (const auto& v : multiply_by_forms(prev.degree == e - 1 ? prev : GradedIdealSlice{d, e - 1, {}}, 1).basis)
        ech.insert(to_sparse_row(v));
    for (const auto& v : slice.basis)
      if (ech.insert(to_sparse_row(v))) mingens.basis.push_back(v);
    prev = slice;
    out.push_back({slice, mingens});
  }
  return out;
}

std::vector<ColonDegree> power_colon(int a, int b, int up_to) {
  std::vector<Poly> f{Poly::x(1, a), Poly::x(2, a), Poly::x(3, a)};
  Poly g = (Poly::x(1) + Poly::x(2) + Poly::x(3)).pow(static_cast<unsigned>(b));
  return colon_ideal_slices(f, g, 3, up_to);
}

std::vector<long long> hilbert_compressed(int d, int n) {
  if (n < 1) throw std::invalid_argument("hilbert_compressed: n must be positive");
  std::vector<long long> h;
  for (int e = 0; e <= 2 * n - 2; ++e)
    h.push_back(e <= n - 1 ? monomial_count(d, e) : monomial_count(d, 2 * n - 2 - e));
  return h;
}

long long binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r.get_si();
}

long long betti_linear(int d, int n, int i) {
  if (i < 1 || i > d - 1) throw std::invalid_argument("betti_linear: 1 <= i <= d-1 required");
  auto z = [](long long v) { return Integer(static_cast<long>(v)); };
  Integer num = z(2 * n + d - 2) * z(binomial(n + d - 2, i - 1)) * z(binomial(n + d - i - 2, n - 1));
  Integer den = n + i - 1;
  if (num % den != 0) throw std::logic_error("betti_linear: non-integral value");
  Integer first = num / den;
  Integer alt = z(binomial(d + n - 1, n + i - 1)) * z(binomial(i + n - 2, i - 1)) -
                z(binomial(d + n - 2, i - 1)) * z(binomial(d - i + n - 2, d - i));
  if (first != alt) throw std::logic_error("betti_linear: the two closed forms disagree");
  return first.get_si();
}

}  // namespace linres
