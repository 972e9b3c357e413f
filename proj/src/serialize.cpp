#include "linres/serialize.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "linres/multilinear.hpp"

namespace linres {

namespace {

const Json& need(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("json: missing key \"") + key + "\"");
  return j.at(key);
}

int need_int(const Json& j, const char* key) {
  const Json& v = need(j, key);
  if (!v.is_number_integer()) throw std::invalid_argument(std::string("json: \"") + key + "\" must be an integer");
  return v.get<int>();
}

std::string exponent_key(const Exponents& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
  return s;
}

Exponents parse_exponent_key(const std::string& s) {
  Exponents e;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || v < 0) throw std::invalid_argument("json: bad exponent key \"" + s + "\"");
    e.push_back(v);
  }
  return e;
}

Rational json_rational(const Json& v) {
  if (v.is_number_integer()) return Rational(static_cast<long>(v.get<long long>()));
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw std::invalid_argument("json: coefficient must be an integer or a \"num/den\" string");
}

}  // namespace

Json complex_to_json(const FreeComplex& c) {
  Json j;
  j["meta"] = {{"d", c.meta.d}, {"n", c.meta.n}, {"r", c.meta.r}, {"generic", c.meta.generic}};
  j["modules"] = Json::array();
  for (const auto& m : c.modules) {
    Json tw = Json::array();
    for (const auto& t : m.twists) tw.push_back({t.x, t.t});
    j["modules"].push_back({{"labels", m.labels}, {"twists", tw}});
  }
  j["diffs"] = Json::array();
  for (const auto& d : c.diffs) {
    Json entries = Json::array();
    for (const auto& [rc, p] : d.entries()) entries.push_back({rc.first, rc.second, p.to_string()});
    j["diffs"].push_back({{"rows", d.rows()}, {"cols", d.cols()}, {"entries", entries}});
  }
  return j;
}

FreeComplex complex_from_json(const Json& j) {
  FreeComplex c;
  const Json& meta = need(j, "meta");
  c.meta.d = need_int(meta, "d");
  c.meta.n = need_int(meta, "n");
  c.meta.r = need_int(meta, "r");
  const Json& g = need(meta, "generic");
  if (!g.is_boolean()) throw std::invalid_argument("json: \"generic\" must be a boolean");
  c.meta.generic = g.get<bool>();
  const Json& mods = need(j, "modules");
  if (!mods.is_array()) throw std::invalid_argument("json: \"modules\" must be an array");
  for (const auto& mj : mods) {
    GradedFreeModule m;
    for (const auto& l : need(mj, "labels")) {
      if (!l.is_string()) throw std::invalid_argument("json: labels must be strings");
      m.labels.push_back(l.get<std::string>());
    }
    for (const auto& t : need(mj, "twists")) {
      if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer() || !t[1].is_number_integer())
        throw std::invalid_argument("json: twists must be [int, int] pairs");
      m.twists.push_back({t[0].get<int>(), t[1].get<int>()});
    }
    c.modules.push_back(std::move(m));
  }
  const Json& diffs = need(j, "diffs");
  if (!diffs.is_array()) throw std::invalid_argument("json: \"diffs\" must be an array");
  for (const auto& dj : diffs) {
    int rows = need_int(dj, "rows"), cols = need_int(dj, "cols");
    if (rows < 0 || cols < 0) throw std::invalid_argument("json: negative matrix dimension");
    SparseMatrix m(rows, cols);
    for (const auto& e : need(dj, "entries")) {
      if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() || !e[1].is_number_integer() || !e[2].is_string())
        throw std::invalid_argument("json: entries must be [row, col, \"poly\"]");
      int r = e[0].get<int>(), col = e[1].get<int>();
      if (r < 0 || r >= rows || col < 0 || col >= cols) throw std::invalid_argument("json: entry index out of range");
      m.set(r, col, Poly::parse(e[2].get<std::string>()));
    }
    c.diffs.push_back(std::move(m));
  }
  c.validate_shapes();
  return c;
}

Json invsys_to_json(const InverseSystem& phi) {
  Json coeffs = Json::object();
  for (const auto& [e, q] : phi.coeffs)
    if (q != 0) coeffs[exponent_key(e)] = rational_to_string(q);
  return Json{{"d", phi.d}, {"n", phi.n}, {"coeffs", coeffs}};
}

InverseSystem invsys_from_json(const Json& j) {
  InverseSystem phi;
  phi.d = need_int(j, "d");
  phi.n = need_int(j, "n");
  const Json& coeffs = need(j, "coeffs");
  if (!coeffs.is_object()) throw std::invalid_argument("json: \"coeffs\" must be an object");
  for (const auto& [k, v] : coeffs.items()) {
    Exponents e = parse_exponent_key(k);
    if (phi.coeffs.count(e)) throw std::invalid_argument("json: duplicate exponent key \"" + k + "\"");
    phi.coeffs[e] = json_rational(v);
  }
  phi.normalize();
  phi.validate();
  return phi;
}

Json report_to_json(const Report& r) {
  return Json{{"name", r.name}, {"pass", r.pass}, {"messages", r.messages}, {"info", r.info}};
}

Json summary_to_json(const VerifySummary& s) {
  Json reps = Json::array();
  for (const auto& r : s.reports) reps.push_back(report_to_json(r));
  return Json{{"pass", s.pass}, {"max_degree", s.max_degree}, {"reports", reps}};
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << text;
  if (!out) throw std::invalid_argument("write failed: " + path);
}

namespace {

std::string cas_var(VarId v) {
  switch (v.kind()) {
    case VarId::Kind::Structural:
      return "x" + std::to_string(v.index());
    case VarId::Kind::Coefficient: {
      std::string s = "t";
      for (int e : v.exponents()) s += "_" + std::to_string(e);
      return s;
    }
    case VarId::Kind::Auxiliary:
      return v.name();
  }
  return "";
}

std::string cas_poly(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational a = abs(c);
    s += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    first = false;
    std::string body;
    for (const auto& [v, e] : m.factors()) body += (body.empty() ? "" : "*") + cas_var(v) + (e > 1 ? "^" + std::to_string(e) : "");
    if (body.empty())
      s += "(" + rational_to_string(a) + ")";
    else if (a == 1)
      s += body;
    else
      s += "(" + rational_to_string(a) + ")*" + body;
  }
  return s;
}

}  // namespace

std::string export_cas(const FreeComplex& c) {
  std::set<VarId> vars;
  for (int i = 1; i <= c.meta.d; ++i) vars.insert(VarId::x(i));
  for (const auto& d : c.diffs)
    for (const auto& [rc, p] : d.entries())
      for (const auto& [m, q] : p.terms())
        for (const auto& [v, e] : m.factors()) vars.insert(v);
  std::ostringstream os;
  os << "-- complex with d = " << c.meta.d << ", n = " << c.meta.n << ", r = " << c.meta.r << "\n";
  os << "R = QQ[";
  bool first = true;
  for (VarId v : vars) {
    os << (first ? "" : ", ") << cas_var(v);
    first = false;
  }
  os << "];\n";
  for (int i = 1; i <= c.length(); ++i) {
    const SparseMatrix& m = c.d(i);
    os << "d" << i << " = map(R^" << m.rows() << ", R^" << m.cols() << ", {";
    for (int r = 0; r < m.rows(); ++r) {
      os << (r ? ",\n  {" : "{");
      for (int col = 0; col < m.cols(); ++col) os << (col ? ", " : "") << cas_poly(m.at(r, col));
      os << "}";
    }
    os << "});\n";
  }
  for (int i = 1; i < c.length(); ++i) os << "assert(d" << i << " * d" << i + 1 << " == 0);\n";
  return os.str();
}

}  // namespace linres
