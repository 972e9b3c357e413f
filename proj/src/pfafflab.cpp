#include "linres/pfafflab.hpp"

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace linres {

AltMatrix AltMatrix::from(SparseMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("alternating matrix must be square");
  for (const auto& [ij, v] : m.entries()) {
    auto [i, j] = ij;
    if (i == j) throw std::invalid_argument("alternating matrix has a nonzero diagonal entry");
    if (m.at(j, i) != -v) throw std::invalid_argument("matrix is not skew-symmetric");
  }
  return AltMatrix{std::move(m)};
}

namespace {

class PfaffianMemo {
 public:
  explicit PfaffianMemo(const SparseMatrix& z) : z_(z) {}

  Poly eval(std::uint64_t mask) {
    int count = __builtin_popcountll(mask);
    if (count == 0) return Poly(1);
    if (count % 2 == 1) return Poly();
    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second;
    int s1 = __builtin_ctzll(mask);
    std::uint64_t rest = mask & ~(std::uint64_t{1} << s1);
    Poly out;
    int k = 2;
    for (std::uint64_t m = rest; m != 0; m &= m - 1, ++k) {
      int sk = __builtin_ctzll(m);
      const Poly& e = z_.at(s1, sk);
      if (e.is_zero()) continue;
      Poly sub = eval(rest & ~(std::uint64_t{1} << sk));
      if (sub.is_zero()) continue;
      Poly term = e * sub;
      if (k % 2 == 0)
        out += term;
      else
        out -= term;
    }
    memo_.emplace(mask, out);
    return out;
  }

 private:
  const SparseMatrix& z_;
  std::unordered_map<std::uint64_t, Poly> memo_;
};

}  // namespace

Poly pfaffian_of(const AltMatrix& z, const std::vector<int>& indices) {
  if (z.size() > 64) throw std::invalid_argument("pfaffian: matrix too large");
  std::uint64_t mask = 0;
  for (int i : indices) {
    if (i < 0 || i >= z.size()) throw std::invalid_argument("pfaffian: index out of range");
    mask |= std::uint64_t{1} << i;
  }
  PfaffianMemo memo(z.entries);
  return memo.eval(mask);
}

Poly pfaffian(const AltMatrix& z) {
  std::vector<int> all(z.size());
  std::iota(all.begin(), all.end(), 0);
  return pfaffian_of(z, all);
}

AltMatrix build_Hn(int n) {
  if (n < 1) throw std::invalid_argument("build_Hn: n must be positive");
  int size = 2 * n + 1;
  SparseMatrix m(size, size);
  auto put = [&](int i, int j, const Poly& v) {
    m.set(i - 1, j - 1, v);
    m.set(j - 1, i - 1, -v);
  };
  for (int i = 1; i < size; ++i) put(i, i + 1, i % 2 == 1 ? Poly::x(1) : Poly::x(2));
  for (int i = 1; i <= n; ++i) put(i, 2 * n + 2 - i, Poly::x(3));
  return AltMatrix{std::move(m)};
}

Poly s_poly(int i) {
  if (i < 0) throw std::invalid_argument("s_poly: negative index");
  Poly s;
  for (int j = 0; 2 * j <= i; ++j)
    s += Poly::term(Monomial::structural({j, j, i - 2 * j}), Rational(static_cast<long>(binomial(i - j, j))));
  return s;
}

std::vector<Poly> be_generators(int n) {
  if (n < 1) throw std::invalid_argument("be_generators: n must be positive");
  std::vector<Poly> b(2 * n + 1);
  for (int i = 1; i <= n + 1; ++i) {
    Poly xs = Poly::x(1, n + 1 - i) * s_poly(i - 1);
    Poly ys = Poly::x(2, n + 1 - i) * s_poly(i - 1);
    b[i - 1] = i % 2 == 0 ? xs : ys;
    b[2 * n + 1 - i] = i % 2 == 0 ? ys : xs;
  }
  return b;
}

std::vector<Poly> be_generators_direct(int n) {
  AltMatrix h = build_Hn(n);
  std::vector<Poly> out;
  for (int i = 0; i < h.size(); ++i) {
    std::vector<int> keep;
    for (int k = 0; k < h.size(); ++k)
      if (k != i) keep.push_back(k);
    out.push_back(pfaffian_of(h, keep));
  }
  return out;
}

int catalan(int i) { return static_cast<int>(binomial(2 * i, i) / (i + 1)); }

InverseSystem catalan_phi(int n) {
  if (n < 1) throw std::invalid_argument("catalan_phi: n must be positive");
  InverseSystem phi{3, n, {}};
  for (int i = 0; i <= n - 1; ++i)
    phi.coeffs[{n - 1 - i, n - 1 - i, 2 * i}] = Rational(static_cast<long>(i % 2 == 0 ? catalan(i) : -catalan(i)));
  return phi;
}

InverseSystem phi_mu(int n, int mu) {
  if (mu < 0 || mu > 2) throw std::invalid_argument("phi_mu: mu must be 0, 1 or 2");
  InverseSystem phi = catalan_phi(n);
  if (mu <= 1) phi.coeffs[{2 * n - 2, 0, 0}] += 1;
  if (mu == 0) phi.coeffs[{0, 2 * n - 2, 0}] += 2;
  phi.normalize();
  return phi;
}

Poly alpha_sym() { return Poly::aux("alpha"); }
Poly beta_sym() { return Poly::aux("beta"); }
Poly gamma_sym() { return Poly::aux("gamma"); }

namespace {

/// n! / (a! b! (n-a-b)!)
Rational multinomial(int n, int a, int b) { return Rational(static_cast<long>(binomial(n, a) * binomial(n - a, b))); }

}  // namespace

std::map<Exponents, Poly> ell_power_contraction(int n, const InverseSystem& phi) {
  if (phi.d != 3) throw std::invalid_argument("ell_power_contraction: d must be 3");
  std::map<Exponents, Poly> out;
  Poly al = alpha_sym(), be = beta_sym(), ga = gamma_sym();
  for (int a = 0; a <= n; ++a)
    for (int b = 0; a + b <= n; ++b) {
      int c = n - a - b;
      Poly coef = (al.pow(a) * be.pow(b) * ga.pow(c)).scaled(multinomial(n, a, b));
      for (const auto& [e, v] : phi.coeffs) {
        auto r = contract_sym_on_div(SymMonomial{{a, b, c}}, DivMonomial{e});
        if (r) out[r->e] += coef.scaled(v);
      }
    }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

bool mu_membership(const InverseSystem& phi, const std::vector<Rational>& l, int n) {
  if (phi.d != 3 || l.size() != 3) throw std::invalid_argument("mu_membership: d must be 3");
  std::map<Exponents, Rational> acc;
  for (int a = 0; a <= n; ++a)
    for (int b = 0; a + b <= n; ++b) {
      int c = n - a - b;
      Rational coef = multinomial(n, a, b);
      for (int k = 0; k < a; ++k) coef *= l[0];
      for (int k = 0; k < b; ++k) coef *= l[1];
      for (int k = 0; k < c; ++k) coef *= l[2];
      if (coef == 0) continue;
      for (const auto& [e, v] : phi.coeffs) {
        auto r = contract_sym_on_div(SymMonomial{{a, b, c}}, DivMonomial{e});
        if (r) acc[r->e] += coef * v;
      }
    }
  for (const auto& [e, v] : acc)
    if (v != 0) return false;
  return true;
}

GridEvidence membership_grid(const InverseSystem& phi, int n, int bound) {
  auto table = ell_power_contraction(n, phi);
  GridEvidence ev;
  for (int a = -bound; a <= bound; ++a)
    for (int b = -bound; b <= bound; ++b)
      for (int c = -bound; c <= bound; ++c) {
        if (a == 0 && b == 0 && c == 0) continue;
        if (std::gcd(std::gcd(std::abs(a), std::abs(b)), std::abs(c)) != 1) continue;
        int lead = a != 0 ? a : (b != 0 ? b : c);
        if (lead < 0) continue;
        ++ev.checked;
        auto value = [&](VarId v) -> Rational {
          std::string s = v.name();
          return s == "alpha" ? Rational(a) : s == "beta" ? Rational(b) : Rational(c);
        };
        bool member = true;
        for (const auto& [e, p] : table)
          if (p.evaluate(value) != 0) {
            member = false;
            break;
          }
        if (member) ev.members.push_back({a, b, c});
      }
  return ev;
}

}  // namespace linres
