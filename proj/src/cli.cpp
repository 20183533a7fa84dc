#include "dsu2/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "dsu2/casimir.hpp"
#include "dsu2/catalog.hpp"
#include "dsu2/error.hpp"
#include "dsu2/json_io.hpp"
#include "dsu2/repbuild.hpp"
#include "dsu2/rewrite.hpp"

namespace dsu2::cli {

namespace {

using io::json;
using io::to_json;

struct Common {
  std::string preset;
  std::vector<std::string> params;
  std::string algebra_file;
  std::string mode;
  double tol = 1e-10;
  std::string output;
  bool pretty = false;
};

void add_common(CLI::App* sub, Common& c, bool needs_algebra) {
  if (needs_algebra) {
    auto* p = sub->add_option("--preset", c.preset, "preset key (see list-presets)");
    auto* a = sub->add_option("--algebra", c.algebra_file, "algebra JSON file");
    p->excludes(a);
    sub->add_option("--param", c.params, "preset parameter name=value (repeatable)");
    sub->add_option("--mode", c.mode, "exact|real|complex");
    sub->add_option("--tol", c.tol, "float tolerance for checks");
  }
  sub->add_option("--output", c.output, "write JSON here instead of stdout");
  sub->add_flag("--pretty", c.pretty, "indent JSON");
}

AlgebraSpec load_algebra(const Common& c) {
  if (c.preset.empty() == c.algebra_file.empty()) {
    throw Error(ErrorKind::MissingParam, "give exactly one of --preset or --algebra");
  }
  std::optional<Mode> mode;
  if (!c.mode.empty()) mode = parse_mode(c.mode);
  AlgebraSpec spec;
  if (!c.preset.empty()) {
    spec = get_preset(c.preset, parse_preset_params(c.preset, c.params), mode.value_or(Mode::Exact));
  } else {
    if (!c.params.empty()) throw Error(ErrorKind::InvalidSpec, "--param only applies to presets");
    std::ifstream in(c.algebra_file);
    if (!in) throw Error(ErrorKind::Parse, "cannot read " + c.algebra_file);
    json j;
    try {
      j = json::parse(in);
    } catch (const json::exception& e) {
      throw Error(ErrorKind::Parse, std::string("algebra file: ") + e.what());
    }
    spec = io::algebra_from_json(j);
    if (mode) spec = spec.promote(*mode);
  }
  require_valid(spec);
  return spec;
}

// "p/q" or a decimal; complex mode also takes "re,im".
Scalar parse_scalar(const std::string& text, Mode mode) {
  auto comma = text.find(',');
  if (comma != std::string::npos) {
    if (mode != Mode::Complex) throw Error(ErrorKind::Parse, "complex value '" + text + "' needs --mode complex");
    return Scalar(Complex(Rational::parse(text.substr(0, comma)).to_double(),
                          Rational::parse(text.substr(comma + 1)).to_double()));
  }
  Rational r = Rational::parse(text);
  return mode == Mode::Exact ? Scalar(r) : Scalar(r.to_double()).promote(mode);
}

json error_body(std::string_view kind, const std::string& message) {
  return {{"error", {{"kind", std::string(kind)}, {"message", message}}}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Finite-dimensional representations of deformed su(2)-type algebras"};
  app.require_subcommand(1);
  Common c;

  auto* list = app.add_subcommand("list-presets", "describe the preset algebras");
  add_common(list, c, false);

  unsigned m = 0;
  std::string eta_text;
  auto* phi = app.add_subcommand("phi", "structure function Phi(eta, m)");
  add_common(phi, c, true);
  phi->add_option("--m", m, "m >= 0")->required();
  phi->add_option("--eta", eta_text, "evaluate at this eta");

  std::optional<unsigned> max_degree;
  auto* casimir = app.add_subcommand("casimir", "solve for the Casimir function rho");
  add_common(casimir, c, true);
  casimir->add_option("--max-degree", max_degree, "polynomial degree of the ansatz");

  unsigned nmax = 6;
  unsigned jobs = 1;
  RootSearchConfig cfg;
  auto* dims = app.add_subcommand("dims", "lowest weights of finite-dimensional modules");
  add_common(dims, c, true);
  dims->add_option("--nmax", nmax, "largest dimension")->check(CLI::Range(1u, 64u));
  dims->add_option("--lo", cfg.lo, "real scan interval start");
  dims->add_option("--hi", cfg.hi, "real scan interval end");
  dims->add_option("--steps", cfg.scan_steps, "scan grid intervals");
  dims->add_option("--jobs", jobs, "worker threads over N")->check(CLI::Range(1u, 256u));
  dims->add_flag("--complex", cfg.want_complex, "keep non-real roots");

  unsigned n = 0;
  bool normalized = false;
  auto* rep = app.add_subcommand("rep", "matrices of an N-dimensional module");
  add_common(rep, c, true);
  rep->add_option("--n", n, "dimension")->required()->check(CLI::Range(1u, 256u));
  rep->add_option("--eta", eta_text, "lowest weight")->required();
  rep->add_flag("--normalized", normalized, "use the normalized basis");

  std::optional<unsigned> root_k;
  auto* verify = app.add_subcommand("verify", "check relations and Casimir identities on a module");
  add_common(verify, c, true);
  verify->add_option("--n", n, "dimension")->required()->check(CLI::Range(1u, 256u));
  verify->add_option("--eta", eta_text, "lowest weight")->required();
  verify->add_option("--root-of-unity", root_k, "also check C^k for s = exp(2 pi i/k)")->check(CLI::Range(1u, 64u));

  std::string word_text;
  auto* oracle = app.add_subcommand("oracle", "normal ordering by rewriting");
  add_common(oracle, c, true);
  auto* word_opt = oracle->add_option("--word", word_text, "word such as \"J- J+ J+\"");
  auto* m_opt = oracle->add_option("--m", m, "Phi(eta, m) through J- (J+)^m");
  word_opt->excludes(m_opt);

  std::vector<std::string> argv_store;
  argv_store.push_back("dsu2");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  auto emit = [&](const json& j) {
    std::string text = c.pretty ? j.dump(2) : j.dump();
    if (c.output.empty()) {
      out << text << '\n';
      return;
    }
    std::ofstream f(c.output, std::ios::binary);
    if (!f) throw Error(ErrorKind::Parse, "cannot write " + c.output);
    f << text << '\n';
  };

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    out << error_body("Usage", e.what()).dump() << '\n';
    return 2;
  }

  try {
    if (list->parsed()) {
      json presets = json::array();
      for (const auto& p : preset_catalog()) {
        presets.push_back({{"key", p.key},
                           {"algebra", p.algebra},
                           {"params", p.scalar_params},
                           {"poly_params", p.poly_params},
                           {"sign_convention", std::string(to_string(p.sign_convention))},
                           {"phi_closed_form", p.table_phi},
                           {"G", p.G},
                           {"s", p.s},
                           {"f", p.f}});
      }
      emit({{"command", "list-presets"}, {"presets", presets}});
      return 0;
    }

    AlgebraSpec spec = load_algebra(c);
    json result = {{"algebra", to_json(spec)}};

    if (phi->parsed()) {
      result["command"] = "phi";
      result["m"] = m;
      if (eta_text.empty()) {
        result["phi"] = to_json(phi_symbolic(spec, m));
        result["text"] = phi_symbolic(spec, m).to_string("eta");
      } else {
        Scalar eta = parse_scalar(eta_text, spec.mode);
        result["eta"] = to_json(eta);
        result["value"] = to_json(phi_numeric(spec, eta, m));
      }
      emit(result);
      return 0;
    }

    if (casimir->parsed()) {
      result["command"] = "casimir";
      CasimirSolution sol = solve_rho(spec, max_degree);
      result["casimir"] = to_json(sol);
      result["text"] = sol.rho.to_string();
      emit(result);
      return 0;
    }

    if (dims->parsed()) {
      result["command"] = "dims";
      check_config(cfg);
      json list_json = json::array();
      for (const auto& r : find_dimensions(spec, nmax, cfg, jobs)) list_json.push_back(to_json(r));
      result["nmax"] = nmax;
      result["dimensions"] = list_json;
      emit(result);
      return 0;
    }

    if (rep->parsed()) {
      result["command"] = "rep";
      Scalar eta = parse_scalar(eta_text, spec.mode);
      ModuleRep module =
          build_module(spec, eta, n, normalized ? BasisKind::Normalized : BasisKind::Unnormalized);
      result["module"] = to_json(module);
      emit(result);
      return 0;
    }

    if (verify->parsed()) {
      result["command"] = "verify";
      Scalar eta = parse_scalar(eta_text, spec.mode);
      ModuleRep module = build_module(spec, eta, n);
      CheckReport report = verify_module(module, c.tol);
      try {
        CasimirSolution sol = solve_rho(spec);
        result["rho"] = to_json(sol.rho);
        report.append(check_casimir_matrix(module, sol.rho, c.tol));
        if (root_k) report.append(check_root_of_unity_casimir(module, sol.rho, *root_k, std::max(c.tol, 1e-8)));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NoSolutionInAnsatz && e.kind() != ErrorKind::ClosureError) throw;
        result["rho"] = nullptr;
        result["casimir_note"] = e.what();
      }
      result["eta"] = to_json(eta);
      result["n"] = n;
      result["report"] = to_json(report);
      emit(result);
      return report.passed() ? 0 : 1;
    }

    if (oracle->parsed()) {
      result["command"] = "oracle";
      if (!word_text.empty()) {
        NOWord word = parse_word(word_text);
        RewriteStats stats;
        NOForm form = normal_order(word, spec, {}, &stats);
        result["word"] = to_string(word);
        result["normal_form"] = to_json(form);
        result["steps"] = stats.steps;
      } else {
        if (m_opt->count() == 0) throw Error(ErrorKind::MissingParam, "oracle needs --word or --m");
        ExpPoly via = phi_via_rewriting(spec, m);
        ExpPoly direct = phi_symbolic(spec, m);
        result["m"] = m;
        result["phi_via_rewriting"] = to_json(via);
        result["phi_symbolic"] = to_json(direct);
        result["agree"] = spec.mode == Mode::Exact ? via == direct : approx_equal(via, direct);
      }
      emit(result);
      return 0;
    }
  } catch (const Error& e) {
    json body = error_body(to_string(e.kind()), e.what());
    try {
      emit(body);
    } catch (const Error&) {
      out << body.dump() << '\n';
    }
    return 2;
  }
  return 2;
}

}  // namespace dsu2::cli
