#include "linres/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace linres {

std::string rational_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view s) {
  std::string str(s);
  if (str.empty()) throw std::invalid_argument("empty rational");
  auto valid_int = [](const std::string& z) {
    std::size_t i = (!z.empty() && (z[0] == '-' || z[0] == '+')) ? 1 : 0;
    if (i >= z.size()) return false;
    for (; i < z.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(z[i]))) return false;
    return true;
  };
  auto slash = str.find('/');
  std::string num = str.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : str.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-')
    throw std::invalid_argument("bad rational: " + str);
  Rational q{Integer(num), Integer(den)};
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + str);
  q.canonicalize();
  return q;
}

// ---------------------------------------------------------------- VarId

namespace {
constexpr std::uint64_t kKindShift = 62;
constexpr std::uint64_t kPayloadMask = (std::uint64_t{1} << 62) - 1;
}  // namespace

VarId VarId::x(int i) {
  if (i < 1) throw std::invalid_argument("structural index must be >= 1");
  return VarId(static_cast<std::uint64_t>(i));
}

VarId VarId::t(const std::vector<int>& exps) {
  if (exps.empty() || exps.size() > kMaxCoefficientDim)
    throw std::invalid_argument("coefficient variable dimension out of range");
  std::uint64_t key = std::uint64_t{1} << kKindShift;
  key |= static_cast<std::uint64_t>(exps.size()) << 54;
  for (std::size_t k = 0; k < exps.size(); ++k) {
    if (exps[k] < 0 || exps[k] > kMaxCoefficientExp)
      throw std::invalid_argument("coefficient variable exponent out of range");
    key |= static_cast<std::uint64_t>(exps[k]) << (48 - 6 * k);
  }
  return VarId(key);
}

VarId VarId::aux(std::string_view name) {
  if (name.empty() || name.size() > kMaxAuxName)
    throw std::invalid_argument("auxiliary name must have 1..7 characters");
  if (std::isdigit(static_cast<unsigned char>(name[0])))
    throw std::invalid_argument("auxiliary name must not start with a digit");
  std::uint64_t key = std::uint64_t{2} << kKindShift;
  for (std::size_t k = 0; k < name.size(); ++k) {
    unsigned char c = static_cast<unsigned char>(name[k]);
    if (!(std::isalnum(c) || c == '_'))
      throw std::invalid_argument("bad auxiliary name: " + std::string(name));
    key |= static_cast<std::uint64_t>(c) << (48 - 8 * k);
  }
  return VarId(key);
}

int VarId::index() const {
  if (kind() != Kind::Structural) throw std::logic_error("not a structural variable");
  return static_cast<int>(key_ & kPayloadMask);
}

std::vector<int> VarId::exponents() const {
  if (kind() != Kind::Coefficient) throw std::logic_error("not a coefficient variable");
  int d = static_cast<int>((key_ >> 54) & 0xF);
  std::vector<int> e(d);
  for (int k = 0; k < d; ++k) e[k] = static_cast<int>((key_ >> (48 - 6 * k)) & 0x3F);
  return e;
}

std::string VarId::name() const {
  if (kind() != Kind::Auxiliary) throw std::logic_error("not an auxiliary variable");
  std::string s;
  for (int k = 0; k < 7; ++k) {
    char c = static_cast<char>((key_ >> (48 - 8 * k)) & 0xFF);
    if (c == 0) break;
    s.push_back(c);
  }
  return s;
}

std::string VarId::to_string() const {
  switch (kind()) {
    case Kind::Structural:
      return "x" + std::to_string(index());
    case Kind::Coefficient: {
      std::string s = "t[";
      auto e = exponents();
      for (std::size_t k = 0; k < e.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(e[k]);
      }
      return s + "]";
    }
    case Kind::Auxiliary:
      return name();
  }
  return "?";
}

// ------------------------------------------------------------- Monomial

Monomial Monomial::of(VarId v, int e) {
  Monomial m;
  if (e < 0) throw std::invalid_argument("negative exponent");
  if (e > 0) m.f_.emplace_back(v, e);
  return m;
}

Monomial Monomial::structural(const std::vector<int>& exps) {
  Monomial m;
  for (std::size_t k = 0; k < exps.size(); ++k) {
    if (exps[k] < 0) throw std::invalid_argument("negative exponent");
    if (exps[k] > 0) m.f_.emplace_back(VarId::x(static_cast<int>(k) + 1), exps[k]);
  }
  return m;
}

int Monomial::degree() const {
  int s = 0;
  for (const auto& [v, e] : f_) s += e;
  return s;
}

Bidegree Monomial::bidegree() const {
  Bidegree b;
  for (const auto& [v, e] : f_) {
    if (v.kind() == VarId::Kind::Structural) b.x += e;
    else if (v.kind() == VarId::Kind::Coefficient) b.t += e;
  }
  return b;
}

int Monomial::exponent(VarId v) const {
  for (const auto& [w, e] : f_)
    if (w == v) return e;
  return 0;
}

std::vector<int> Monomial::structural_exponents(int d) const {
  std::vector<int> e(d, 0);
  for (const auto& [v, k] : f_) {
    if (v.kind() != VarId::Kind::Structural || v.index() > d)
      throw std::invalid_argument("monomial is not structural over the given variables");
    e[v.index() - 1] = k;
  }
  return e;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.f_.reserve(f_.size() + o.f_.size());
  std::size_t i = 0, j = 0;
  while (i < f_.size() && j < o.f_.size()) {
    if (f_[i].first < o.f_[j].first) r.f_.push_back(f_[i++]);
    else if (o.f_[j].first < f_[i].first) r.f_.push_back(o.f_[j++]);
    else {
      r.f_.emplace_back(f_[i].first, f_[i].second + o.f_[j].second);
      ++i;
      ++j;
    }
  }
  while (i < f_.size()) r.f_.push_back(f_[i++]);
  while (j < o.f_.size()) r.f_.push_back(o.f_[j++]);
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  std::size_t j = 0;
  for (const auto& [v, e] : f_) {
    while (j < o.f_.size() && o.f_[j].first < v) ++j;
    if (j == o.f_.size() || o.f_[j].first != v || o.f_[j].second < e) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& o) const {
  Monomial r;
  std::size_t i = 0;
  for (const auto& [v, e] : o.f_) {
    int k = e;
    if (i < f_.size() && f_[i].first == v) k -= f_[i++].second;
    if (k < 0) throw std::domain_error("monomial does not divide");
    if (k > 0) r.f_.emplace_back(v, k);
  }
  if (i != f_.size()) throw std::domain_error("monomial does not divide");
  return r;
}

std::string Monomial::to_string() const {
  if (f_.empty()) return "1";
  std::string s;
  for (const auto& [v, e] : f_) {
    if (!s.empty()) s += "*";
    s += v.to_string();
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

int compare(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da > db ? 1 : -1;
  int xa = a.bidegree().x, xb = b.bidegree().x;
  if (xa != xb) return xa > xb ? 1 : -1;
  std::size_t i = 0, j = 0;
  while (i < a.f_.size() && j < b.f_.size()) {
    if (a.f_[i].first < b.f_[j].first) return 1;
    if (b.f_[j].first < a.f_[i].first) return -1;
    if (a.f_[i].second != b.f_[j].second) return a.f_[i].second > b.f_[j].second ? 1 : -1;
    ++i;
    ++j;
  }
  if (i < a.f_.size()) return 1;
  if (j < b.f_.size()) return -1;
  return 0;
}

// ----------------------------------------------------------------- Poly

Poly::Poly(const Rational& c) {
  if (c != 0) terms_.emplace_back(Monomial(), c);
}

Poly::Poly(long c) : Poly(Rational(c)) {}

Poly Poly::var(VarId v, int e) { return term(Monomial::of(v, e), 1); }

Poly Poly::term(Monomial m, Rational c) {
  Poly p;
  if (c != 0) p.terms_.emplace_back(std::move(m), std::move(c));
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return compare(a.first, b.first) > 0; });
  Poly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second == 0) p.terms_.pop_back();
    } else if (t.second != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
}

Rational Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().first.is_one()) return terms_.back().second;
  return 0;
}

Rational Poly::coefficient(const Monomial& m) const {
  for (const auto& [mm, c] : terms_)
    if (mm == m) return c;
  return 0;
}

bool Poly::is_signed_monomial() const {
  return terms_.size() == 1 && (terms_[0].second == 1 || terms_[0].second == -1);
}

std::optional<Bidegree> Poly::bidegree() const {
  if (terms_.empty()) return Bidegree{};
  Bidegree b = terms_[0].first.bidegree();
  for (const auto& t : terms_)
    if (t.first.bidegree() != b) return std::nullopt;
  return b;
}

std::optional<std::pair<Monomial, Monomial>> Poly::bihomogeneity_violation() const {
  for (std::size_t k = 1; k < terms_.size(); ++k)
    if (terms_[k].first.bidegree() != terms_[0].first.bidegree())
      return std::make_pair(terms_[0].first, terms_[k].first);
  return std::nullopt;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.first.degree());
  return d;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

namespace {
std::vector<Poly::Term> merge_terms(const std::vector<Poly::Term>& a,
                                    const std::vector<Poly::Term>& b, int sign) {
  std::vector<Poly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size()) c = -1;
    else if (j == b.size()) c = 1;
    else c = compare(a[i].first, b[j].first);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
      if (sign < 0) out.back().second = -out.back().second;
    } else {
      Rational s = sign > 0 ? Rational(a[i].second + b[j].second)
                            : Rational(a[i].second - b[j].second);
      if (s != 0) out.emplace_back(a[i].first, s);
      ++i;
      ++j;
    }
  }
  return out;
}
}  // namespace

Poly& Poly::operator+=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, 1);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, -1);
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly Poly::times_monomial(const Monomial& m, const Rational& c) const {
  Poly p;
  if (c == 0) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& [mm, cc] : terms_) p.terms_.emplace_back(mm * m, cc * c);
  return p;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return Poly();
  if (b.terms_.size() == 1) return a.times_monomial(b.terms_[0].first, b.terms_[0].second);
  if (a.terms_.size() == 1) return b.times_monomial(a.terms_[0].first, a.terms_[0].second);
  std::vector<Poly::Term> prods;
  prods.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) prods.emplace_back(ma * mb, ca * cb);
  return Poly::from_terms(std::move(prods));
}

Poly Poly::scaled(const Rational& c) const {
  if (c == 0) return Poly();
  Poly p = *this;
  for (auto& t : p.terms_) t.second *= c;
  return p;
}

Poly Poly::pow(unsigned e) const {
  Poly result(1L), base = *this;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k)
    if (a.terms_[k].second != b.terms_[k].second || !(a.terms_[k].first == b.terms_[k].first))
      return false;
  return true;
}

Poly Poly::substitute(const std::function<std::optional<Poly>(VarId)>& subst) const {
  std::map<VarId, std::optional<Poly>> cache;
  auto lookup = [&](VarId v) -> const std::optional<Poly>& {
    auto it = cache.find(v);
    if (it == cache.end()) it = cache.emplace(v, subst(v)).first;
    return it->second;
  };
  Poly out;
  for (const auto& [m, c] : terms_) {
    Poly acc(c);
    Monomial kept;
    for (const auto& [v, e] : m.factors()) {
      const auto& s = lookup(v);
      if (s) acc *= s->pow(static_cast<unsigned>(e));
      else kept = kept * Monomial::of(v, e);
      if (acc.is_zero()) break;
    }
    if (!acc.is_zero()) out += acc.times_monomial(kept, 1);
  }
  return out;
}

Rational Poly::evaluate(const std::function<Rational(VarId)>& value) const {
  Rational s = 0;
  for (const auto& [m, c] : terms_) {
    Rational p = c;
    for (const auto& [v, e] : m.factors()) {
      Rational b = value(v);
      for (int k = 0; k < e; ++k) p *= b;
    }
    s += p;
  }
  return s;
}

std::vector<VarId> Poly::variables() const {
  std::vector<VarId> vs;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.factors()) vs.push_back(v);
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = abs(c);
    std::string body;
    if (m.is_one()) body = rational_to_string(a);
    else if (a == 1) body = m.to_string();
    else body = rational_to_string(a) + "*" + m.to_string();
    if (first) s += (c < 0 ? "-" : "") + body;
    else s += (c < 0 ? " - " : " + ") + body;
    first = false;
  }
  return s;
}

namespace {

VarId parse_var(const std::string& tok) {
  if (tok.size() >= 2 && tok[0] == 'x' &&
      std::all_of(tok.begin() + 1, tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    return VarId::x(std::stoi(tok.substr(1)));
  if (tok.size() >= 3 && tok[0] == 't' && tok[1] == '[' && tok.back() == ']') {
    std::vector<int> e;
    std::string inner = tok.substr(2, tok.size() - 3);
    std::size_t pos = 0;
    while (pos <= inner.size()) {
      auto comma = inner.find(',', pos);
      std::string part = inner.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      if (part.empty() || !std::all_of(part.begin(), part.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw std::invalid_argument("bad coefficient variable: " + tok);
      e.push_back(std::stoi(part));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return VarId::t(e);
  }
  return VarId::aux(tok);
}

Poly parse_term(const std::string& term) {
  if (term.empty()) throw std::invalid_argument("empty term");
  Rational coef = 1;
  Monomial m;
  std::size_t pos = 0;
  bool first = true;
  while (pos <= term.size()) {
    // split on '*' outside brackets
    std::size_t end = pos;
    int depth = 0;
    while (end < term.size() && !(term[end] == '*' && depth == 0)) {
      if (term[end] == '[') ++depth;
      if (term[end] == ']') --depth;
      ++end;
    }
    std::string factor = term.substr(pos, end - pos);
    if (factor.empty()) throw std::invalid_argument("empty factor in: " + term);
    if (std::isdigit(static_cast<unsigned char>(factor[0]))) {
      if (!first) throw std::invalid_argument("coefficient must come first: " + term);
      coef = parse_rational(factor);
    } else {
      int e = 1;
      auto caret = factor.rfind('^');
      if (caret != std::string::npos && factor.find(']', caret) == std::string::npos) {
        std::string es = factor.substr(caret + 1);
        if (es.empty() || !std::all_of(es.begin(), es.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
          throw std::invalid_argument("bad exponent in: " + factor);
        e = std::stoi(es);
        factor = factor.substr(0, caret);
      }
      m = m * Monomial::of(parse_var(factor), e);
    }
    first = false;
    if (end >= term.size()) break;
    pos = end + 1;
  }
  return Poly::term(m, coef);
}

}  // namespace

Poly Poly::parse(std::string_view input) {
  std::string s;
  for (std::size_t i = 0; i < input.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(input[i]);
    if (c == 0xE2 && i + 2 < input.size() && static_cast<unsigned char>(input[i + 1]) == 0x88 &&
        static_cast<unsigned char>(input[i + 2]) == 0x92) {
      s.push_back('-');
      i += 2;
    } else if (!std::isspace(c)) {
      s.push_back(static_cast<char>(c));
    }
  }
  if (s.empty()) throw std::invalid_argument("empty polynomial");
  if (s == "0") return Poly();
  Poly out;
  std::size_t pos = 0;
  int sign = 1;
  if (s[0] == '-' || s[0] == '+') {
    sign = s[0] == '-' ? -1 : 1;
    pos = 1;
  }
  int depth = 0;
  std::size_t start = pos;
  for (std::size_t i = pos; i <= s.size(); ++i) {
    if (i < s.size() && s[i] == '[') ++depth;
    if (i < s.size() && s[i] == ']') --depth;
    bool split = i == s.size() || (depth == 0 && (s[i] == '+' || s[i] == '-') && i > start);
    if (!split) continue;
    Poly t = parse_term(s.substr(start, i - start));
    out += sign > 0 ? t : -t;
    if (i < s.size()) {
      sign = s[i] == '-' ? -1 : 1;
      start = i + 1;
    }
  }
  return out;
}

Poly divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (b.size() == 1) {
    const auto& [mb, cb] = b.leading();
    std::vector<Poly::Term> q;
    q.reserve(a.size());
    Rational inv = 1 / cb;
    for (const auto& [m, c] : a.terms()) {
      if (!mb.divides(m)) throw std::domain_error("inexact polynomial division");
      q.emplace_back(mb.quotient_of(m), c * inv);
    }
    return Poly::from_terms(std::move(q));
  }
  const auto& [mb, cb] = b.leading();
  Poly q, r = a;
  while (!r.is_zero()) {
    Monomial m = r.leading().first;
    Rational c = r.leading().second;
    if (!mb.divides(m)) throw std::domain_error("inexact polynomial division");
    Monomial qm = mb.quotient_of(m);
    Rational qc = c / cb;
    q += Poly::term(qm, qc);
    r -= b.times_monomial(qm, qc);
  }
  return q;
}

}  // namespace linres
