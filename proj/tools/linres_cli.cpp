// Command-line front end: builds, specializes, minimizes and verifies the
// complexes, and exposes the Pfaffian, colon-ideal and inverse-system tools.

#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "linres/inversesys.hpp"
#include "linres/minimalize.hpp"
#include "linres/pfafflab.hpp"
#include "linres/rescomplex.hpp"
#include "linres/serialize.hpp"
#include "linres/verify.hpp"

using namespace linres;

namespace {

struct VerificationFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Writes to `path`, or to stdout when the path is empty.
void emit(const std::string& path, const std::string& text) {
  if (path.empty())
    std::cout << text;
  else
    write_text_file(path, text);
}

/// x, y, z for the structural variables when d <= 3.
std::string xyz_string(const Poly& p, int d) {
  if (d > 3) return p.to_string();
  static const char* names[] = {"x", "y", "z"};
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational a = abs(c);
    s += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    first = false;
    std::string body;
    for (const auto& [v, e] : m.factors()) {
      std::string name = v.kind() == VarId::Kind::Structural ? names[v.index() - 1] : v.to_string();
      body += (body.empty() ? "" : "*") + name + (e > 1 ? "^" + std::to_string(e) : "");
    }
    if (body.empty())
      s += rational_to_string(a);
    else
      s += (a == 1 ? "" : rational_to_string(a) + "*") + body;
  }
  return s;
}

std::vector<Poly> read_generators(const std::string& path) {
  Json j = read_json_file(path);
  const Json& list = j.is_object() ? j.at("gens") : j;
  if (!list.is_array()) throw std::invalid_argument("generators: expected an array of polynomial strings");
  std::vector<Poly> gens;
  for (const auto& g : list) {
    if (!g.is_string()) throw std::invalid_argument("generators: entries must be strings");
    gens.push_back(Poly::parse(g.get<std::string>()));
  }
  return gens;
}

InverseSystem read_phi(const std::string& path) { return invsys_from_json(read_json_file(path)); }
FreeComplex read_complex(const std::string& path) { return complex_from_json(read_json_file(path)); }

std::string summary_text(const VerifySummary& s) {
  std::string out;
  for (const auto& r : s.reports) {
    out += (r.pass ? "PASS " : "FAIL ") + r.name;
    for (const auto& [k, v] : r.info) out += " " + k + "=" + v;
    out += "\n";
    for (const auto& m : r.messages) out += "  " + m + "\n";
  }
  out += std::string(s.pass ? "PASS" : "FAIL") + " overall (max degree " + std::to_string(s.max_degree) + ")\n";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear resolutions of Artinian Gorenstein algebras"};
  app.require_subcommand(1);
  std::function<void()> action;

  int d = 3, n = 2, r = -1, mu = 2, a = 2, b = 1, upto = 4, max_degree = -1;
  unsigned long long seed = 1;
  bool minimal = false, check_direct = false, exact_rank = false;
  std::string out, complex_path, phi_path, gens_path, format = "json";

  auto* generic = app.add_subcommand("generic", "Generic complex G(r)");
  generic->add_option("--d", d)->required();
  generic->add_option("--n", n)->required();
  generic->add_option("--r", r)->required();
  generic->add_option("--out", out);
  generic->callback([&] { action = [&] { emit(out, dump_json(complex_to_json(build_generic_G(d, n, r)))); }; });

  auto* gprime = app.add_subcommand("gprime", "Generic minimal complex G'(2) for n = 2");
  gprime->add_option("--d", d);
  gprime->add_option("--n", n);
  gprime->add_option("--out", out);
  gprime->callback([&] { action = [&] { emit(out, dump_json(complex_to_json(build_generic_Gprime(d, n)))); }; });

  auto* spec = app.add_subcommand("specialize", "Substitute an inverse system into a generic complex");
  spec->add_option("--complex", complex_path)->required();
  spec->add_option("--phi", phi_path)->required();
  spec->add_option("--out", out);
  spec->callback([&] {
    action = [&] { emit(out, dump_json(complex_to_json(specialize(read_complex(complex_path), read_phi(phi_path))))); };
  });

  auto* resolve = app.add_subcommand("resolve", "Build, specialize and optionally minimize G(r)");
  resolve->add_option("--phi", phi_path)->required();
  resolve->add_option("--r", r);
  resolve->add_flag("--minimal", minimal);
  resolve->add_option("--out", out);
  resolve->callback([&] {
    action = [&] {
      InverseSystem phi = read_phi(phi_path);
      FreeComplex c = specialize(build_generic_G(phi.d, phi.n, r < 0 ? phi.n : r), phi);
      if (minimal) c = minimize_complex(c);
      emit(out, dump_json(complex_to_json(c)));
    };
  });

  auto* invsys = app.add_subcommand("invsys", "Inverse systems");
  invsys->require_subcommand(1);
  auto* catalan_cmd = invsys->add_subcommand("catalan", "phi_n or phi_{n,mu}");
  auto* mu_opt = catalan_cmd->add_option("--mu", mu);
  catalan_cmd->add_option("--n", n)->required();
  catalan_cmd->add_option("--out", out);
  catalan_cmd->callback([&] {
    action = [&] { emit(out, dump_json(invsys_to_json(mu_opt->count() ? phi_mu(n, mu) : catalan_phi(n)))); };
  });
  auto* from_ideal = invsys->add_subcommand("from-ideal", "Inverse system of an ideal with a one-dimensional socle");
  from_ideal->add_option("--gens", gens_path)->required();
  from_ideal->add_option("--n", n)->required();
  from_ideal->add_option("--d", d);
  from_ideal->add_option("--out", out);
  from_ideal->callback([&] {
    action = [&] {
      auto gens = read_generators(gens_path);
      emit(out, dump_json(invsys_to_json(inverse_system_from_ideal(ideal_slice(gens, d, 2 * n - 2), d, n))));
    };
  });

  auto* pf = app.add_subcommand("pfaffian", "Buchsbaum-Eisenbud matrices and their Pfaffians");
  pf->require_subcommand(1);
  auto* hn = pf->add_subcommand("hn", "Print H_n");
  hn->add_option("--n", n)->required();
  hn->callback([&] {
    action = [&] {
      AltMatrix h = build_Hn(n);
      for (int i = 0; i < h.size(); ++i) {
        for (int j = 0; j < h.size(); ++j) std::cout << (j ? "\t" : "") << xyz_string(h.entries.at(i, j), 3);
        std::cout << "\n";
      }
    };
  });
  auto* gens = pf->add_subcommand("gens", "Print B_1..B_{2n+1}");
  gens->add_option("--n", n)->required();
  gens->add_flag("--check-direct", check_direct);
  gens->callback([&] {
    action = [&] {
      auto g = be_generators(n);
      for (std::size_t i = 0; i < g.size(); ++i) std::cout << "B" << i + 1 << " = " << xyz_string(g[i], 3) << "\n";
      if (check_direct) {
        bool same = g == be_generators_direct(n);
        std::cout << (same ? "direct Pfaffians agree" : "direct Pfaffians differ") << "\n";
        if (!same) throw VerificationFailed("closed form and direct Pfaffians differ");
      }
    };
  });

  auto* colon = app.add_subcommand("colon", "Minimal generators of (x^a, y^a, z^a) : (x+y+z)^b");
  colon->add_option("--a", a)->required();
  colon->add_option("--b", b)->required();
  colon->add_option("--upto", upto)->required();
  colon->callback([&] {
    action = [&] {
      auto slices = power_colon(a, b, upto);
      for (std::size_t e = 0; e < slices.size(); ++e) {
        const auto& g = slices[e].minimal_generators;
        if (g.dim() == 0) continue;
        std::cout << "degree " << e << ":";
        for (const auto& p : g.polys()) std::cout << " " << xyz_string(p, 3) << ";";
        std::cout << "\n";
      }
    };
  });

  auto* mu_cmd = app.add_subcommand("mu", "mu-class tools");
  mu_cmd->require_subcommand(1);
  auto* table = mu_cmd->add_subcommand("table", "Coefficients of l^n(phi_{n,mu})");
  table->add_option("--n", n)->required();
  table->add_option("--mu", mu)->required();
  table->callback([&] {
    action = [&] {
      for (const auto& [e, c] : ell_power_contraction(n, phi_mu(n, mu)))
        std::cout << "x*^" << e[0] << " y*^" << e[1] << " z*^" << e[2] << ": " << c.to_string() << "\n";
    };
  });

  auto* verify = app.add_subcommand("verify", "Run every check on a specialized complex");
  verify->add_option("--complex", complex_path)->required();
  verify->add_option("--phi", phi_path)->required();
  verify->add_option("--max-degree", max_degree);
  verify->add_flag("--exact-rank", exact_rank);
  verify->add_option("--seed", seed);
  verify->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  verify->callback([&] {
    action = [&] {
      auto s = verify_all(read_complex(complex_path), read_phi(phi_path), VerifyOptions{max_degree, exact_rank, seed});
      std::cout << (format == "json" ? dump_json(summary_to_json(s)) : summary_text(s));
      if (!s.pass) throw VerificationFailed("verification failed");
    };
  });

  auto* cas = app.add_subcommand("export-cas", "Macaulay2 script restating the matrices");
  cas->add_option("--complex", complex_path)->required();
  cas->add_option("--out", out);
  cas->callback([&] { action = [&] { emit(out, export_cas(read_complex(complex_path))); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << dump_json(Json{{"error", e.what()}, {"kind", "usage"}});
    return 1;
  }
  try {
    if (action) action();
  } catch (const VerificationFailed& e) {
    std::cerr << dump_json(Json{{"error", e.what()}, {"kind", "verification"}});
    return 2;
  } catch (const std::exception& e) {
    std::cerr << dump_json(Json{{"error", e.what()}, {"kind", "validation"}});
    return 1;
  }
  return 0;
}
