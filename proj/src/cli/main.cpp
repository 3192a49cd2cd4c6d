// su3 — command-line front end: group structure reports, the verification
// suite, JSON export/import, recoupling data, and the catalog listing.

#include <complex>
#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "su3kit/catalog.hpp"
#include "su3kit/cyclo.hpp"
#include "su3kit/engine.hpp"
#include "su3kit/fusion.hpp"
#include "su3kit/json_io.hpp"
#include "su3kit/mat3.hpp"
#include "su3kit/verify_suite.hpp"

namespace cat = su3kit::catalog;
namespace eng = su3kit::engine;
namespace fus = su3kit::fusion;
namespace vfy = su3kit::verify;
namespace jio = su3kit::json_io;
using su3kit::CycloNum;
using su3kit::Mat3;

namespace {

std::string spec_str(const std::map<int, int>& spec) {
  std::string out = "{";
  bool first = true;
  for (const auto& [ord, cnt] : spec) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(ord) + ":" + std::to_string(cnt);
  }
  return out + "}";
}

std::string mat_str(const Mat3& m) {
  std::string out = "[";
  for (int r = 0; r < 3; ++r) {
    out += (r ? ", [" : "[");
    for (int c = 0; c < 3; ++c) {
      if (c) out += ", ";
      out += m.at(r, c).str();
    }
    out += "]";
  }
  return out + "]";
}

std::string cx_str(std::complex<double> z) {
  double re = z.real() + 0.0;  // normalize -0.0
  double im = z.imag() + 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f%+.9fi", re, im);
  return buf;
}

std::vector<long> distinct_primes(long n) {
  std::vector<long> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

long two_part(long n) {
  long t = 1;
  while (n % 2 == 0) {
    t *= 2;
    n /= 2;
  }
  return t;
}

int cmd_group(const std::string& name, const std::string& gens_path, int cap,
              int conductor, bool conductor_set) {
  std::vector<Mat3> gens;
  std::string label;
  if (!name.empty()) {
    auto set = cat::find_named(name);
    gens = set.generators;
    label = set.name;
  } else {
    gens = jio::read_generators(gens_path);
    label = gens_path;
  }
  if (gens.empty()) throw su3kit::usage_error("no generators to close over");
  if (conductor_set) {
    for (auto& m : gens) {
      Mat3 p(conductor);
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
          p.at(r, c) = su3kit::promote_conductor(m.at(r, c), conductor);
      m = p;
    }
  }
  auto g = eng::generate(gens, cap, label);

  std::cout << "name\t" << g.name() << "\n";
  std::cout << "conductor\t" << g.conductor() << "\n";
  std::cout << "order\t" << g.order() << "\n";
  std::cout << "spectrum\t" << spec_str(g.order_spectrum()) << "\n";
  std::cout << "center\t" << eng::center(g).order() << "\n";
  for (long p : distinct_primes(g.order())) {
    auto syl = eng::sylow(g, static_cast<int>(p));
    long sord = syl.empty() ? 1 : syl.front().order();
    std::cout << "sylow\tp=" << p << "\tcount=" << syl.size() << "\torder="
              << sord << "\tnormal=" << (syl.size() == 1 ? "yes" : "no")
              << "\n";
    auto closure = eng::generated_by_sylows(g, static_cast<int>(p));
    std::cout << "sylow_closure\tp=" << p << "\torder=" << closure.order()
              << "\tnormal=" << (eng::is_normal(closure) ? "yes" : "no")
              << "\n";
  }
  if (two_part(g.order()) == 8)
    std::cout << "two_sylow_type\t" << eng::two_sylow_type(g) << "\n";
  return 0;
}

int cmd_verify(const std::string& suite, bool as_json) {
  auto items = vfy::select_items(suite);
  int pass = 0, fail = 0;
  nlohmann::json jitems = nlohmann::json::array();
  for (const auto* it : items) {
    auto r = it->run();
    (r.ok ? pass : fail)++;
    if (as_json) {
      jitems.push_back(nlohmann::json{{"id", it->id},
                                      {"status", r.ok ? "pass" : "fail"},
                                      {"detail", r.detail}});
    } else {
      std::cout << it->id << "\t" << (r.ok ? "pass" : "fail") << "\t"
                << r.detail << "\n";
    }
  }
  if (as_json) {
    nlohmann::json doc = {
        {"items", jitems},
        {"summary",
         {{"pass", pass}, {"fail", fail}, {"total", pass + fail}}}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "summary\tpass=" << pass << "\tfail=" << fail << "\ttotal="
              << (pass + fail) << "\n";
  }
  return fail == 0 ? 0 : 1;
}

int cmd_export(const std::string& name, const std::string& out, int cap) {
  auto set = cat::find_named(name);
  auto g = eng::generate(set.generators, cap, set.name);
  jio::write_group(g, out);
  std::cout << "exported\t" << g.name() << "\torder=" << g.order() << "\t"
            << out << "\n";
  return 0;
}

int cmd_import(const std::string& path, int cap) {
  auto g = jio::read_group(path, cap);
  std::cout << "imported\t" << g.name() << "\torder=" << g.order()
            << "\tconductor=" << g.conductor() << "\n";
  return 0;
}

void print_derive_fum() {
  Mat3 derived = fus::derive_fusion_matrix();
  Mat3 normalized = fus::su3_normalize(derived);
  CycloNum scalar = CycloNum::from_int(0, derived.conductor());
  for (int r = 0; r < 3 && scalar.is_zero(); ++r)
    for (int c = 0; c < 3 && scalar.is_zero(); ++c)
      if (!derived.at(r, c).is_zero())
        scalar = normalized.at(r, c) / derived.at(r, c);
  std::cout << "derived\t" << mat_str(derived) << "\n";
  std::cout << "normalizing_scalar\t" << scalar.str() << "\n";
  std::cout << "normalized\t" << mat_str(normalized) << "\n";
  std::cout << "catalog_fum\t"
            << (normalized.cmp(cat::fum()) == 0 ? "equal" : "MISMATCH")
            << "\n";
}

void print_symbols() {
  for (int a = 0; a <= 4; ++a) {
    auto d = fus::qdim(a);
    std::cout << "qdim\t" << a << "\t" << d.str() << "\t" << cx_str(d.approx())
              << "\n";
  }
  for (int a = 0; a <= 4; ++a)
    for (int b = a; b <= 4; ++b)
      for (int c = b; c <= 4; ++c) {
        if (!fus::is_admissible(a, b, c)) continue;
        auto t = fus::theta(a, b, c);
        auto tu = fus::theta_u(a, b, c);
        std::cout << "theta\t(" << a << "," << b << "," << c << ")\t"
                  << t.str() << "\t" << cx_str(t.approx()) << "\n";
        std::cout << "theta_u\t(" << a << "," << b << "," << c << ")\t"
                  << tu.str() << "\t" << cx_str(tu.approx()) << "\n";
      }
  for (int A = 0; A <= 4; ++A)
    for (int B = 0; B <= 4; ++B)
      for (int E = 0; E <= 4; ++E)
        for (int C = 0; C <= 4; ++C)
          for (int D = 0; D <= 4; ++D)
            for (int F = 0; F <= 4; ++F) {
              if (!fus::is_admissible(A, D, E) ||
                  !fus::is_admissible(B, C, E) ||
                  !fus::is_admissible(A, B, F) ||
                  !fus::is_admissible(C, D, F))
                continue;
              auto t = fus::tet(A, B, E, C, D, F);
              auto s = fus::six_j_unitary(A, B, E, C, D, F);
              std::string tag = "[" + std::to_string(A) + "," +
                                std::to_string(B) + "," + std::to_string(E) +
                                ";" + std::to_string(C) + "," +
                                std::to_string(D) + "," + std::to_string(F) +
                                "]";
              std::cout << "tet\t" << tag << "\t" << t.str() << "\t"
                        << cx_str(t.approx()) << "\n";
              std::cout << "sixj\t" << tag << "\t" << s.str() << "\t"
                        << cx_str(s.approx()) << "\n";
            }
}

int cmd_catalog_list(bool as_json) {
  auto sets = cat::named_sets();
  if (as_json) {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& s : sets) {
      nlohmann::json gens = nlohmann::json::array();
      for (const auto& m : s.generators) gens.push_back(jio::mat3_to_json(m));
      doc.push_back(nlohmann::json{{"name", s.name},
                                   {"provenance", s.provenance},
                                   {"generators", gens}});
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const auto& s : sets)
      std::cout << s.name << "\tgenerators=" << s.generators.size() << "\t"
                << s.provenance << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact toolkit for the finite SU(3) subgroups generated by the "
      "level-4 braid and fusion matrices"};
  app.require_subcommand(1);

  std::string name, gens_path, suite, out_path;
  int cap = 10000;
  int conductor = 72;
  bool verify_json = false, catalog_json = false;
  bool derive_fum = false, symbols = false;

  auto* grp = app.add_subcommand(
      "group", "generate a group and print its structure report");
  grp->add_option("--name", name, "catalog group name (see `catalog list`)");
  grp->add_option("--gens", gens_path, "JSON file with generator matrices");
  grp->add_option("--cap", cap, "element cap for closure generation")
      ->envname("SU3_CAP");
  auto* cond_opt = grp->add_option("--conductor", conductor,
                                   "cyclotomic conductor override");

  auto* ver = app.add_subcommand(
      "verify", "run verification suites and print a pass/fail report");
  ver->add_option("--suite", suite,
                  "suite selector: `all`, a family like `thm8`, or an exact "
                  "item id like `eq21`")
      ->required();
  ver->add_flag("--json", verify_json, "emit the report as JSON");

  auto* exp = app.add_subcommand("export",
                                 "generate a catalog group and write it as "
                                 "JSON with words and generators");
  exp->add_option("--name", name, "catalog group name")->required();
  exp->add_option("--out", out_path, "output JSON path")->required();
  exp->add_option("--cap", cap, "element cap for closure generation")
      ->envname("SU3_CAP");

  auto* imp = app.add_subcommand(
      "import", "read a group JSON file and revalidate closure and words");
  imp->add_option("--gens", gens_path, "group or generator JSON path")
      ->required();
  imp->add_option("--cap", cap, "element cap for closure generation")
      ->envname("SU3_CAP");

  auto* fsn = app.add_subcommand("fusion", "recoupling data for level 4");
  fsn->add_flag("--derive-fum", derive_fum,
                "derive the fusion matrix from the F-symbols and compare "
                "with the catalog");
  fsn->add_flag("--symbols", symbols,
                "dump all quantum dimensions, theta symbols, tetrahedra, "
                "and unitary 6j values");

  auto* ctl = app.add_subcommand("catalog", "the named generator sets");
  auto* lst = ctl->add_subcommand("list", "list named sets with provenance");
  ctl->require_subcommand(1);
  lst->add_flag("--json", catalog_json, "emit the listing as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (grp->parsed()) {
      if (name.empty() == gens_path.empty())
        throw su3kit::usage_error(
            "group needs exactly one of --name and --gens");
      return cmd_group(name, gens_path, cap, conductor,
                       cond_opt->count() > 0);
    }
    if (ver->parsed()) return cmd_verify(suite, verify_json);
    if (exp->parsed()) return cmd_export(name, out_path, cap);
    if (imp->parsed()) return cmd_import(gens_path, cap);
    if (fsn->parsed()) {
      if (!derive_fum && !symbols)
        throw su3kit::usage_error(
            "fusion needs --derive-fum and/or --symbols");
      if (derive_fum) print_derive_fum();
      if (symbols) print_symbols();
      return 0;
    }
    if (ctl->parsed()) return cmd_catalog_list(catalog_json);
  } catch (const su3kit::usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const su3kit::cap_exceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
