#include "linres/rescomplex.hpp"

#include <stdexcept>

namespace linres {

void GradedFreeModule::append(const GradedFreeModule& o) {
  labels.insert(labels.end(), o.labels.begin(), o.labels.end());
  twists.insert(twists.end(), o.twists.begin(), o.twists.end());
}

std::vector<int> FreeComplex::ranks() const {
  std::vector<int> r;
  for (const auto& m : modules) r.push_back(m.rank());
  return r;
}

void FreeComplex::validate_shapes() const {
  if (modules.empty()) throw std::invalid_argument("complex has no modules");
  if (diffs.size() + 1 != modules.size()) throw std::invalid_argument("complex: wrong number of differentials");
  for (const auto& m : modules)
    if (m.labels.size() != m.twists.size()) throw std::invalid_argument("module: labels and twists differ in length");
  for (int i = 1; i <= length(); ++i)
    if (d(i).rows() != modules[i - 1].rank() || d(i).cols() != modules[i].rank())
      throw std::invalid_argument("complex: differential " + std::to_string(i) + " has the wrong shape");
}

Bidegree entry_bidegree(const Bidegree& src, const Bidegree& tgt) { return {tgt.x - src.x, src.t - tgt.t}; }

Bidegree twist_L(int a, int r) { return {-r - a, 0}; }
Bidegree twist_K(int a, int r) { return {-r - a, -1}; }
Bidegree twist_top(int d, int n) { return {-2 * n - d + 2, -1}; }

GradedFreeModule hook_module(HookKind kind, int d, int p, int q, const Bidegree& twist) {
  GradedFreeModule m;
  for (const auto& h : hook_basis(kind, d, p, q)) {
    m.labels.push_back(h.to_string());
    m.twists.push_back(twist);
  }
  return m;
}

namespace {

void check_range(int d, int n, int r) {
  if (d < 1) throw std::invalid_argument("d must be positive");
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (r < 1 || r > 2 * n - 2) throw std::invalid_argument("r must satisfy 1 <= r <= 2n-2");
}

SparseMatrix hook_matrix(const std::vector<HookIndex>& src, int rows, HookVector (*image)(const HookIndex&)) {
  SparseMatrix m(rows, static_cast<int>(src.size()));
  for (int j = 0; j < static_cast<int>(src.size()); ++j)
    for (const auto& [h, c] : image(src[j])) m.set(hook_position(h), j, c);
  return m;
}

}  // namespace

FreeComplex build_L_complex(int d, int r) {
  if (d < 1) throw std::invalid_argument("d must be positive");
  if (r < 1) throw std::invalid_argument("r must be at least 1");
  FreeComplex c;
  c.meta = {d, 0, r, true};
  c.modules.push_back({{"1"}, {{0, 0}}});
  for (int p = 0; p < d; ++p) c.modules.push_back(hook_module(HookKind::L, d, p, r, twist_L(p, r)));
  auto l0 = hook_basis(HookKind::L, d, 0, r);
  SparseMatrix d1(1, static_cast<int>(l0.size()));
  for (int j = 0; j < static_cast<int>(l0.size()); ++j) {
    Exponents e = indices_to_exps(l0[j].b, d);
    ++e[l0[j].a.front() - 1];
    d1.set(0, j, Poly::term(Monomial::structural(e), 1));
  }
  c.diffs.push_back(std::move(d1));
  for (int p = 1; p < d; ++p)
    c.diffs.push_back(hook_matrix(hook_basis(HookKind::L, d, p, r), c.modules[p].rank(), koszul_L));
  return c;
}

FreeComplex build_K_complex(int d, int n, int r) {
  int m = 2 * n - 2 - r;
  if (d < 1) throw std::invalid_argument("d must be positive");
  if (m < 0) throw std::invalid_argument("K complex: degree 2n-2-r is negative");
  FreeComplex c;
  c.meta = {d, n, r, true};
  for (int p = 0; p < d; ++p) c.modules.push_back(hook_module(HookKind::K, d, p, m, twist_K(p, r)));
  c.modules.push_back({{"w"}, {twist_top(d, n)}});
  for (int p = 1; p < d; ++p)
    c.diffs.push_back(hook_matrix(hook_basis(HookKind::K, d, p, m), c.modules[p - 1].rank(), koszul_K));
  SparseMatrix left(c.modules[d - 1].rank(), 1);
  for (const auto& e : monomials(d, m + 1)) {
    HookIndex k = HookIndex::K(d, {}, exps_to_indices(e));
    left.set(hook_position(k), 0, Poly::term(Monomial::structural(e), 1));
  }
  c.diffs.push_back(std::move(left));
  return c;
}

std::vector<SparseMatrix> vertical_maps(int d, int n, int r, const InverseSystem* phi) {
  check_range(d, n, r);
  if (phi && (phi->d != d || phi->n != n)) throw std::invalid_argument("vertical_maps: inverse system has wrong (d, n)");
  int m = 2 * n - 2 - r;
  std::vector<SparseMatrix> out;
  for (int p = 0; p < d; ++p) {
    auto src = hook_basis(HookKind::L, d, p, r);
    int rows = static_cast<int>(rank_formula(HookKind::K, d, p, m));
    SparseMatrix v(rows, static_cast<int>(src.size()));
    for (int j = 0; j < static_cast<int>(src.size()); ++j) {
      const auto& l = src[j];
      auto big_a = complement(d, l.a);
      int s = contract_into_top(d, big_a).first;
      Exponents b = indices_to_exps(l.b, d);
      for (const auto& c : monomials(d, m + 1)) {
        Exponents e = b;
        for (int k = 0; k < d; ++k) e[k] += c[k];
        Poly coef;
        if (phi) {
          Rational val = phi->at(e);
          if (val == 0) continue;
          coef = Poly(val * s);
        } else {
          coef = Poly::t(e).scaled(s);
        }
        for (const auto& [h, k] : straighten_K(d, ExtMonomial{big_a}, DivMonomial{c}))
          v.add(hook_position(h), j, coef.scaled(Rational(static_cast<long>(k))));
      }
    }
    out.push_back(std::move(v));
  }
  return out;
}

FreeComplex build_generic_G(int d, int n, int r) {
  check_range(d, n, r);
  FreeComplex lc = build_L_complex(d, r);
  FreeComplex kc = build_K_complex(d, n, r);
  auto v = vertical_maps(d, n, r);
  FreeComplex g;
  g.meta = {d, n, r, true};
  for (int i = 0; i <= d; ++i) {
    GradedFreeModule mod = lc.modules[i];
    mod.append(kc.modules[i]);
    g.modules.push_back(std::move(mod));
  }
  for (int i = 1; i <= d; ++i) {
    const SparseMatrix& h = lc.d(i);
    const SparseMatrix& hp = kc.d(i);
    SparseMatrix zero(h.rows(), hp.cols());
    g.diffs.push_back(block2x2(h, zero, v[i - 1], hp.scaled(Poly(-1))));
  }
  g.validate_shapes();
  return g;
}

std::optional<Poly> phi_substitution(const InverseSystem& phi, VarId v) {
  if (v.kind() != VarId::Kind::Coefficient) return std::nullopt;
  auto e = v.exponents();
  if (static_cast<int>(e.size()) != phi.d) throw std::invalid_argument("specialize: t-variable has the wrong dimension");
  return Poly(phi.at(e));
}

FreeComplex specialize(const FreeComplex& c, const InverseSystem& phi) {
  if (c.meta.d != phi.d || c.meta.n != phi.n) throw std::invalid_argument("specialize: (d, n) mismatch");
  FreeComplex s = c;
  s.meta.generic = false;
  for (auto& m : s.modules)
    for (auto& t : m.twists) t.t = 0;
  auto sub = [&](VarId v) { return phi_substitution(phi, v); };
  for (auto& dm : s.diffs) dm = dm.substitute(sub);
  return s;
}

}  // namespace linres
