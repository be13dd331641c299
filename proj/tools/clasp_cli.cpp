#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "clasp/clasp.hpp"

namespace {

using namespace clasp;

struct Input {
  std::string braid;
  std::optional<int> index;
  std::string closure = "braid";
  std::string pd_path;
  std::vector<int> reverse;
  bool mirror = false;
  int axis_orientation = 1;
  int clasp_chirality = 1;
};

struct Settings {
  Input in;
  std::string coeffs = "Q";
  std::string format;
  bool reduced = false;
  int basepoint = 1;
  int threads = 0;
  std::string target = "all";
};

void add_input(CLI::App* cmd, Settings& s, bool with_pd = true) {
  cmd->add_option("--braid", s.in.braid, "braid word, e.g. \"s1 s2^-1\"");
  cmd->add_option("--index", s.in.index, "number of strands")->check(CLI::PositiveNumber);
  if (!with_pd) return;
  cmd->add_option("--closure", s.in.closure, "braid, clasp, augmented-braid or augmented-clasp");
  cmd->add_option("--pd", s.in.pd_path, "read a PD file instead of a braid ('-' for stdin)");
  cmd->add_option("--reverse-component", s.in.reverse, "reverse component k (1-based); repeatable");
  cmd->add_flag("--mirror", s.in.mirror, "switch every crossing");
  cmd->add_option("--axis-orientation", s.in.axis_orientation, "+1 or -1")->check(CLI::IsMember({1, -1}));
  cmd->add_option("--clasp-chirality", s.in.clasp_chirality, "+1 or -1")->check(CLI::IsMember({1, -1}));
}

BraidWord read_braid(const Input& in) {
  if (!in.index) throw InputError("--index is required with --braid");
  return parse_braid(in.braid, *in.index);
}

PlanarDiagram read_diagram(const Input& in) {
  PlanarDiagram d;
  if (!in.pd_path.empty()) {
    if (!in.braid.empty()) throw InputError("give either --braid or --pd, not both");
    if (in.pd_path == "-") {
      d = read_pd(std::cin);
    } else {
      std::ifstream f(in.pd_path);
      if (!f) throw InputError("cannot open " + in.pd_path);
      d = read_pd(f);
    }
  } else {
    d = build_closure(read_braid(in), parse_closure_kind(in.closure), {in.axis_orientation, in.clasp_chirality});
  }
  if (in.mirror) d = mirror(d);
  for (int k : in.reverse) d = reverse_component(d, k - 1);
  return d;
}

void require_format(const std::string& f, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (f == a) return;
  throw InputError("unsupported --format '" + f + "'");
}

void print_table(const HomologyTable& t, const std::string& format) {
  require_format(format, {"table", "json"});
  if (format == "json") {
    std::cout << t.to_json().dump(2) << '\n';
  } else {
    std::cout << t.to_text();
  }
}

void print_poly(const LaurentPoly& p, const std::string& format) {
  require_format(format, {"table", "json", "triples"});
  if (format == "json") {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({{"t", e.first}, {"q", e.second}, {"coeff", c.str()}});
    std::cout << nlohmann::json{{"polynomial", p.str()}, {"terms", terms}}.dump(2) << '\n';
  } else if (format == "triples") {
    std::cout << p.triples();
  } else {
    std::cout << p.str() << '\n';
  }
}

int run_verify(const Settings& s, const std::string& format) {
  require_format(format, {"table", "json"});
  std::vector<Report> reports;
  const std::string& t = s.target;
  if (t == "all" || t == "fixtures")
    for (const std::string& id : fixture_ids()) reports.push_back(check_table(id));
  if (t == "all" || t == "theorems") {
    reports.push_back(check_skein_recursion(0, 5));
    for (const char* w : {"s1 s2", "s1^-1 s2^-1", ""}) reports.push_back(check_minimal_rank(parse_braid(w, 3)));
  }
  if (t == "all" || t == "corpus")
    for (Report& r : check_corpus()) reports.push_back(std::move(r));
  if (reports.empty()) reports.push_back(check_table(t));

  bool ok = true;
  nlohmann::json arr = nlohmann::json::array();
  for (const Report& r : reports) {
    ok = ok && r.pass;
    if (format == "json") arr.push_back(r.to_json());
    else std::cout << r.to_text();
  }
  if (format == "json") std::cout << arr.dump(2) << '\n';
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Khovanov, annular Khovanov and Alexander invariants of braid closures"};
  app.require_subcommand(1);
  Settings s;
  app.add_option("--threads", s.threads, "worker cap (also CLASP_THREADS)")->check(CLI::NonNegativeNumber);

  auto* closure = app.add_subcommand("closure", "build a closure and print it");
  add_input(closure, s);
  closure->add_option("--format", s.format, "pd or json");

  auto* kh_cmd = app.add_subcommand("kh", "Khovanov homology");
  add_input(kh_cmd, s);
  kh_cmd->add_option("--coeffs", s.coeffs, "Z, Q or F2");
  kh_cmd->add_flag("--reduced", s.reduced, "reduced homology");
  kh_cmd->add_option("--basepoint", s.basepoint, "arc carrying the basepoint (1-based)")->check(CLI::PositiveNumber);
  kh_cmd->add_option("--format", s.format, "table or json");

  auto* akh_cmd = app.add_subcommand("akh", "annular Khovanov homology");
  add_input(akh_cmd, s);
  akh_cmd->add_option("--coeffs", s.coeffs, "Z, Q or F2");
  akh_cmd->add_option("--format", s.format, "table or json");

  auto* jones_cmd = app.add_subcommand("jones", "Jones polynomial (state sum)");
  add_input(jones_cmd, s);
  jones_cmd->add_option("--format", s.format, "table, triples or json");

  auto* ajones_cmd = app.add_subcommand("annular-jones", "annular Jones polynomial (state sum)");
  add_input(ajones_cmd, s);
  ajones_cmd->add_option("--format", s.format, "table, triples or json");

  auto* alex_cmd = app.add_subcommand("alexander", "Alexander polynomial up to units");
  add_input(alex_cmd, s);
  alex_cmd->add_option("--format", s.format, "table, triples or json");

  auto* sign_cmd = app.add_subcommand("sign", "Dehornoy sign of a braid word");
  add_input(sign_cmd, s, false);

  auto* dec_cmd = app.add_subcommand("decompose", "sl2 decomposition of AKh over Q");
  add_input(dec_cmd, s);
  dec_cmd->add_option("--format", s.format, "table or json");

  auto* ver_cmd = app.add_subcommand("verify", "run checks");
  ver_cmd->add_option("target", s.target, "all, fixtures, theorems, corpus or a fixture id");
  ver_cmd->add_option("--format", s.format, "table or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (s.threads > 0) set_thread_count(s.threads);
    auto fmt = [&](const char* fallback) { return s.format.empty() ? std::string(fallback) : s.format; };

    if (*closure) {
      const PlanarDiagram d = read_diagram(s.in);
      const std::string f = fmt("pd");
      require_format(f, {"pd", "json"});
      if (f == "pd") {
        std::cout << to_pd(d);
      } else {
        std::cout << nlohmann::json{{"pd", to_pd(d)},
                                    {"crossings", d.crossing_count()},
                                    {"components", d.component_count()},
                                    {"n_plus", d.n_plus()},
                                    {"n_minus", d.n_minus()}}
                         .dump(2)
                  << '\n';
      }
    } else if (*kh_cmd) {
      const PlanarDiagram d = read_diagram(s.in);
      const Ring r = parse_ring(s.coeffs);
      print_table(s.reduced ? reduced_kh(d, r, s.basepoint - 1) : kh(d, r), fmt("table"));
    } else if (*akh_cmd) {
      print_table(akh(read_diagram(s.in), parse_ring(s.coeffs)), fmt("table"));
    } else if (*jones_cmd) {
      print_poly(jones(read_diagram(s.in)), fmt("table"));
    } else if (*ajones_cmd) {
      print_poly(annular_jones(read_diagram(s.in)), fmt("table"));
    } else if (*alex_cmd) {
      print_poly(alexander_polynomial(read_diagram(s.in)), fmt("table"));
    } else if (*sign_cmd) {
      std::cout << to_string(dehornoy_sign(read_braid(s.in))) << '\n';
    } else if (*dec_cmd) {
      const std::string f = fmt("table");
      require_format(f, {"table", "json"});
      const std::vector<Sl2Summand> parts = sl2_decompose(akh(read_diagram(s.in), Ring::Q));
      if (f == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const Sl2Summand& p : parts)
          arr.push_back({{"n", p.n}, {"i", p.i}, {"shift", p.a}, {"multiplicity", p.multiplicity}});
        std::cout << arr.dump(2) << '\n';
      } else {
        std::string line;
        for (const Sl2Summand& p : parts) line += (line.empty() ? "" : " + ") + to_string(p);
        std::cout << (line.empty() ? "0" : line) << '\n';
      }
    } else if (*ver_cmd) {
      return run_verify(s, fmt("table"));
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
