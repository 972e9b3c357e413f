#include "linres/hookmods.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "linres/linalg.hpp"

namespace linres {

namespace {

long long binom(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

int sign_pow(int e) { return (e % 2 == 0) ? 1 : -1; }

std::vector<int> erase_at(const std::vector<int>& v, std::size_t i) {
  std::vector<int> r;
  r.reserve(v.size() - 1);
  for (std::size_t k = 0; k < v.size(); ++k)
    if (k != i) r.push_back(v[k]);
  return r;
}

void accumulate(HookComb& out, const HookComb& in, long long coef) {
  for (const auto& [h, c] : in) {
    long long& slot = out[h];
    slot += coef * c;
    if (slot == 0) out.erase(h);
  }
}

void check_params(HookKind kind, int d, int p, int q) {
  if (d < 1 || p < 0 || p > d - 1) throw std::invalid_argument("hook parameters out of range");
  if (kind == HookKind::L && q < 1) throw std::invalid_argument("L_{p,q} requires q >= 1");
  if (kind == HookKind::K && q < 0) throw std::invalid_argument("K_{p,q} requires q >= 0");
}

}  // namespace

HookIndex HookIndex::L(int d, std::vector<int> a, std::vector<int> b) {
  HookIndex h;
  h.kind = HookKind::L;
  h.d = d;
  h.p = static_cast<int>(a.size()) - 1;
  h.q = static_cast<int>(b.size()) + 1;
  h.a = std::move(a);
  h.b = std::move(b);
  return h;
}

HookIndex HookIndex::K(int d, std::vector<int> a, std::vector<int> b) {
  HookIndex h;
  h.kind = HookKind::K;
  h.d = d;
  h.p = d - static_cast<int>(a.size()) - 1;
  h.q = static_cast<int>(b.size()) - 1;
  h.a = std::move(a);
  h.b = std::move(b);
  return h;
}

bool HookIndex::is_standard() const {
  if (kind == HookKind::L) return b.empty() || a.front() <= b.front();
  return a.empty() || b.front() < a.front();
}

std::string HookIndex::to_string() const {
  std::ostringstream os;
  os << (kind == HookKind::L ? "l[" : "k[");
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  os << ";";
  for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
  os << "]";
  return os.str();
}

HookIndex HookIndex::parse(const std::string& s, int d) {
  if (s.size() < 4 || (s[0] != 'l' && s[0] != 'k') || s[1] != '[' || s.back() != ']')
    throw std::invalid_argument("bad hook label: " + s);
  auto semi = s.find(';');
  if (semi == std::string::npos) throw std::invalid_argument("bad hook label: " + s);
  auto parse_list = [&](const std::string& part) {
    std::vector<int> v;
    std::stringstream ss(part);
    std::string tok;
    while (std::getline(ss, tok, ','))
      if (!tok.empty()) v.push_back(std::stoi(tok));
    return v;
  };
  auto a = parse_list(s.substr(2, semi - 2));
  auto b = parse_list(s.substr(semi + 1, s.size() - semi - 2));
  return s[0] == 'l' ? HookIndex::L(d, a, b) : HookIndex::K(d, a, b);
}

long long rank_formula(HookKind kind, int d, int p, int q) {
  check_params(kind, d, p, q);
  if (kind == HookKind::L) return binom(d + q - 1, p + q) * binom(p + q - 1, p);
  return binom(d + q, p) * binom(d + q - p - 1, q);
}

std::vector<HookIndex> hook_basis(HookKind kind, int d, int p, int q) {
  check_params(kind, d, p, q);
  std::vector<HookIndex> out;
  if (kind == HookKind::L) {
    for (const auto& a : subsets(d, p + 1))
      for (const auto& e : monomials(d, q - 1)) {
        auto b = exps_to_indices(e);
        if (b.empty() || a.front() <= b.front()) out.push_back(HookIndex::L(d, a, b));
      }
  } else {
    for (const auto& a : subsets(d, d - p - 1))
      for (const auto& e : monomials(d, q + 1)) {
        auto b = exps_to_indices(e);
        if (a.empty() || b.front() < a.front()) out.push_back(HookIndex::K(d, a, b));
      }
  }
  return out;
}

int hook_position(const HookIndex& h) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int, int>, std::unique_ptr<std::map<HookIndex, int>>> cache;
  std::map<HookIndex, int>* table;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{static_cast<int>(h.kind), h.d, h.p, h.q}];
    if (!slot) {
      slot = std::make_unique<std::map<HookIndex, int>>();
      auto basis = hook_basis(h.kind, h.d, h.p, h.q);
      for (int i = 0; i < static_cast<int>(basis.size()); ++i) (*slot)[basis[i]] = i;
    }
    table = slot.get();
  }
  auto it = table->find(h);
  if (it == table->end()) throw std::invalid_argument("not a standard label: " + h.to_string());
  return it->second;
}

namespace {

HookComb straighten_L_rec(int d, const std::vector<int>& t, const Exponents& m, int depth) {
  if (depth > 64) throw std::runtime_error("straighten_L did not terminate");
  auto b = exps_to_indices(m);
  if (b.empty() || t.front() <= b.front()) return {{HookIndex::L(d, t, b), 1}};
  int b1 = b.front();
  std::vector<int> z{b1};
  z.insert(z.end(), t.begin(), t.end());
  Exponents mp = m;
  --mp[b1 - 1];
  int sz = static_cast<int>(z.size());
  int s1 = sign_pow(sz - 1);
  HookComb out;
  // 0 = kappa(kappa(z (x) mp)) = sum_i s_i kappa((z \ z_i) (x) z_i mp); the i = 1 term is the input.
  for (int i = 2; i <= sz; ++i) {
    int si = sign_pow(sz - i);
    Exponents m2 = mp;
    ++m2[z[i - 1] - 1];
    accumulate(out, straighten_L_rec(d, erase_at(z, i - 1), m2, depth + 1), -static_cast<long long>(si * s1));
  }
  return out;
}

HookComb straighten_K_rec(int d, const std::vector<int>& a, const Exponents& w, int depth) {
  if (depth > 64) throw std::runtime_error("straighten_K did not terminate");
  auto b = exps_to_indices(w);
  if (b.empty()) throw std::invalid_argument("straighten_K: divided power of degree 0");
  if (a.empty() || b.front() < a.front()) return {{HookIndex::K(d, a, b), 1}};
  int a1 = a.front();
  std::vector<int> ap(a.begin() + 1, a.end());
  Exponents wp = w;
  ++wp[a1 - 1];
  auto [s1, c] = contract_into_top(d, ap);
  int csz = static_cast<int>(c.size());
  long long target = 0;
  std::vector<std::tuple<std::vector<int>, Exponents, long long>> others;
  // 0 = eta(eta(s1 x_C (x) wp)), each term rewritten as eta((x_A^*)(omega) (x) w').
  for (int i = 1; i <= csz; ++i) {
    int ci = c[i - 1];
    if (wp[ci - 1] == 0) continue;
    std::vector<int> cpp = erase_at(c, i - 1);
    Exponents w2 = wp;
    --w2[ci - 1];
    std::vector<int> a2 = complement(d, cpp);
    int s2 = contract_into_top(d, a2).first;
    long long coef = static_cast<long long>(s1) * sign_pow(csz - i) * s2;
    if (a2 == a && w2 == w) target += coef;
    else others.emplace_back(std::move(a2), std::move(w2), coef);
  }
  if (target != 1 && target != -1) throw std::logic_error("straighten_K: target coefficient not a unit");
  HookComb out;
  for (auto& [a2, w2, coef] : others) accumulate(out, straighten_K_rec(d, a2, w2, depth + 1), -coef * target);
  return out;
}

}  // namespace

HookComb straighten_L(int d, const ExtMonomial& t, const SymMonomial& m) {
  if (t.idx.empty()) throw std::invalid_argument("straighten_L: empty exterior part");
  if (static_cast<int>(m.e.size()) != d) throw std::invalid_argument("straighten_L: dimension mismatch");
  return straighten_L_rec(d, t.idx, m.e, 0);
}

HookComb straighten_K(int d, const ExtMonomial& a, const DivMonomial& w) {
  if (static_cast<int>(w.e.size()) != d) throw std::invalid_argument("straighten_K: dimension mismatch");
  if (a.size() > d - 1) throw std::invalid_argument("straighten_K: exterior part too large");
  return straighten_K_rec(d, a.idx, w.e, 0);
}

HookVector to_hook_vector(const HookComb& c) {
  HookVector v;
  for (const auto& [h, k] : c)
    if (k != 0) v.emplace(h, Poly(static_cast<long>(k)));
  return v;
}

namespace {
void add_scaled(HookVector& out, const HookComb& in, const Poly& coef) {
  for (const auto& [h, c] : in) {
    Poly term = coef.scaled(Rational(static_cast<long>(c)));
    auto it = out.find(h);
    if (it == out.end()) {
      out.emplace(h, term);
    } else {
      it->second += term;
      if (it->second.is_zero()) out.erase(it);
    }
  }
}
}  // namespace

HookVector koszul_L(const HookIndex& l) {
  if (l.kind != HookKind::L || l.p < 1) throw std::invalid_argument("koszul_L: needs an L label with p >= 1");
  HookVector out;
  Exponents m = indices_to_exps(l.b, l.d);
  for (std::size_t i = 0; i < l.a.size(); ++i) {
    Poly coef = Poly::x(l.a[i]).scaled(sign_pow(static_cast<int>(i)));
    add_scaled(out, straighten_L(l.d, ExtMonomial{erase_at(l.a, i)}, SymMonomial{m}), coef);
  }
  return out;
}

HookVector koszul_K(const HookIndex& k) {
  if (k.kind != HookKind::K || k.p < 1) throw std::invalid_argument("koszul_K: needs a K label with p >= 1");
  HookVector out;
  auto [s, c] = contract_into_top(k.d, k.a);
  Exponents w = indices_to_exps(k.b, k.d);
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::vector<int> a2 = k.a;
    a2.insert(std::upper_bound(a2.begin(), a2.end(), c[i]), c[i]);
    int s2 = contract_into_top(k.d, a2).first;
    Poly coef = Poly::x(c[i]).scaled(s * sign_pow(static_cast<int>(i)) * s2);
    add_scaled(out, straighten_K(k.d, ExtMonomial{a2}, DivMonomial{w}), coef);
  }
  return out;
}

// ------------------------------------------------------------- ambient

std::vector<AmbientKey> ambient_basis(int d, int p, int q) {
  std::vector<AmbientKey> out;
  if (p < 0 || p > d || q < 0) return out;
  for (const auto& s : subsets(d, p))
    for (const auto& e : monomials(d, q)) out.emplace_back(s, e);
  return out;
}

namespace {
void add_amb(AmbientVector& v, AmbientKey k, const Rational& c) {
  auto it = v.find(k);
  if (it == v.end()) {
    if (c != 0) v.emplace(std::move(k), c);
    return;
  }
  it->second += c;
  if (it->second == 0) v.erase(it);
}

int ambient_position(int d, const AmbientKey& k) {
  const auto& subs = subsets(d, static_cast<int>(k.first.size()));
  auto it = std::lower_bound(subs.begin(), subs.end(), k.first);
  int deg = 0;
  for (int e : k.second) deg += e;
  return static_cast<int>((it - subs.begin()) * monomial_count(d, deg) + monomial_index(k.second));
}
}  // namespace

AmbientVector kappa_apply(int, const AmbientVector& v) {
  AmbientVector out;
  for (const auto& [key, c] : v) {
    const auto& t = key.first;
    int sz = static_cast<int>(t.size());
    for (int i = 1; i <= sz; ++i) {
      Exponents m = key.second;
      ++m[t[i - 1] - 1];
      add_amb(out, {erase_at(t, i - 1), m}, c * sign_pow(sz - i));
    }
  }
  return out;
}

AmbientVector eta_apply(int, const AmbientVector& v) {
  AmbientVector out;
  for (const auto& [key, c] : v) {
    const auto& t = key.first;
    int sz = static_cast<int>(t.size());
    for (int i = 1; i <= sz; ++i) {
      Exponents w = key.second;
      if (w[t[i - 1] - 1] == 0) continue;
      --w[t[i - 1] - 1];
      add_amb(out, {erase_at(t, i - 1), w}, c * sign_pow(sz - i));
    }
  }
  return out;
}

AmbientVector ambient_image(const HookIndex& h) {
  AmbientVector pre;
  if (h.kind == HookKind::L) {
    pre.emplace(AmbientKey{h.a, indices_to_exps(h.b, h.d)}, 1);
    return kappa_apply(h.d, pre);
  }
  auto [s, c] = contract_into_top(h.d, h.a);
  pre.emplace(AmbientKey{c, indices_to_exps(h.b, h.d)}, s);
  return eta_apply(h.d, pre);
}

namespace {
SparseMatrix ambient_map_matrix(int d, int p, int q, bool kappa) {
  auto dom = ambient_basis(d, p, q);
  int q2 = kappa ? q + 1 : q - 1;
  int rows = static_cast<int>(ambient_basis(d, p - 1, q2).size());
  SparseMatrix m(rows, static_cast<int>(dom.size()));
  for (int j = 0; j < static_cast<int>(dom.size()); ++j) {
    AmbientVector v{{dom[j], 1}};
    auto img = kappa ? kappa_apply(d, v) : eta_apply(d, v);
    for (const auto& [k, c] : img) m.set(ambient_position(d, k), j, Poly(c));
  }
  return m;
}
}  // namespace

SparseMatrix kappa_matrix(int d, int p, int q) { return ambient_map_matrix(d, p, q, true); }
SparseMatrix eta_matrix(int d, int p, int q) { return ambient_map_matrix(d, p, q, false); }

HookComb solve_in_standard_basis(HookKind kind, int d, int p, int q, const AmbientVector& v) {
  auto basis = hook_basis(kind, d, p, q);
  auto amb = ambient_basis(d, p, q);
  int n = static_cast<int>(basis.size());
  QMatrix m(static_cast<int>(amb.size()), n + 1);
  for (int j = 0; j < n; ++j)
    for (const auto& [k, c] : ambient_image(basis[j])) m(ambient_position(d, k), j) = c;
  for (const auto& [k, c] : v) m(ambient_position(d, k), n) = c;
  auto ker = exact_kernel(m);
  for (const auto& vec : ker) {
    if (vec[n] == 0) continue;
    HookComb out;
    for (int j = 0; j < n; ++j) {
      Rational x = -vec[j] / vec[n];
      if (x == 0) continue;
      if (x.get_den() != 1) throw std::runtime_error("non-integral standard coordinates");
      out[basis[j]] = x.get_num().get_si();
    }
    return out;
  }
  if (v.empty()) return {};
  throw std::invalid_argument("vector is not in the span of the standard basis");
}

}  // namespace linres
