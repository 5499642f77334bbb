// rieszk: command-line front end.
//
// Exit codes: 0 ok, 1 usage, 2 parse error, 3 binding error, 4 check failed,
// 5 budget or fuel exhausted.

#include <chrono>
#include <functional>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "riesz/closure/ladder_basis.hpp"
#include "riesz/errors.hpp"
#include "riesz/expr/binding.hpp"
#include "riesz/expr/parser.hpp"
#include "riesz/pwfun/literal.hpp"
#include "riesz/rmul/certificate.hpp"
#include "riesz/suites/suites.hpp"
#include "riesz/tensor/tensor_check.hpp"

using namespace riesz;
using nlohmann::json;
using num::Rational;

namespace {

enum Exit { kOk = 0, kUsage = 1, kParse = 2, kBinding = 3, kCheck = 4, kBudget = 5 };

struct Config {
  std::uint64_t seed = 1;
  std::size_t trials = 0;
  int degree_cap = 64;
  std::size_t bits_cap = 4096;
  std::size_t fuel = 0;
  std::string grid;
  std::string out;

  pw::Budget budget() const { return {degree_cap, bits_cap}; }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BindingError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// "@path" reads the expression from a file.
std::string expr_text(const std::string& arg) { return !arg.empty() && arg[0] == '@' ? slurp(arg.substr(1)) : arg; }

/// Inline JSON if it starts with '{', otherwise a file path.
json read_json(const std::string& arg) {
  std::string text = arg.find_first_not_of(" \t\n") != std::string::npos && arg[arg.find_first_not_of(" \t\n")] == '{'
                         ? arg
                         : slurp(arg);
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw BindingError(std::string("malformed JSON: ") + e.what());
  }
}

void emit(const Config& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(cfg.out);
  if (!out) throw BindingError("cannot write " + cfg.out);
  out << text << "\n";
}

std::pair<std::size_t, std::size_t> parse_grid(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) throw BindingError("--grid expects nx,ny");
  try {
    long nx = std::stol(s.substr(0, comma));
    long ny = std::stol(s.substr(comma + 1));
    if (nx < 2 || ny < 2) throw BindingError("--grid needs at least 2 nodes per axis");
    return {static_cast<std::size_t>(nx), static_cast<std::size_t>(ny)};
  } catch (const std::logic_error&) {
    throw BindingError("--grid expects nx,ny");
  }
}

tensor::GridSpec grid_spec(const Config& cfg, const json& binding, const tensor::TensorBinding* tb) {
  tensor::GridSpec g = expr::load_grid_spec(binding.value("grid", json::object()), tb);
  if (!cfg.grid.empty()) std::tie(g.nx, g.ny) = parse_grid(cfg.grid);
  return g;
}

int cmd_eval(const Config& cfg, const std::string& text, const std::string& binding_arg, const std::string& at) {
  expr::Expr e = expr::parse_expr(expr_text(text));
  json bj = read_json(binding_arg);
  if (bj.value("model", "") == "tensor") {
    auto tb = expr::load_tensor_binding(bj.at("generators"));
    if (!at.empty()) {
      auto comma = at.find(',');
      if (comma == std::string::npos) throw BindingError("--at expects x,y for a tensor binding");
      auto u = tensor::eval_separable(e, tb, cfg.budget());
      emit(cfg, tensor::tensor_eval(u, Rational::parse(at.substr(0, comma)), Rational::parse(at.substr(comma + 1))).str());
      return kOk;
    }
    tensor::GridSpec g = grid_spec(cfg, bj, &tb);
    auto xs = g.x_nodes(), ys = g.y_nodes();
    emit(cfg, tensor::GridModel(xs, ys).format(tensor::eval_on_grid(e, tb, xs, ys, cfg.budget())));
    return kOk;
  }
  expr::ModelBinding m = expr::load_binding(bj, cfg.budget());
  std::string result = std::visit(
      [&](auto& model) -> std::string {
        auto v = expr::evaluate(e, model);
        using M = std::decay_t<decltype(model)>;
        if constexpr (std::is_same_v<M, expr::PwModel>) {
          if (!at.empty()) return pw::pw_eval(v, Rational::parse(at)).str();
        } else if constexpr (std::is_same_v<M, expr::VectorModel>) {
          if (!at.empty()) {
            long i = std::stol(at);
            if (i < 0 || static_cast<std::size_t>(i) >= v.size()) throw DomainError("coordinate out of range");
            return v[static_cast<std::size_t>(i)].str();
          }
        }
        return model.format(v);
      },
      m);
  emit(cfg, result);
  return kOk;
}

rmul::CertifyOptions certify_options(const Config& cfg, const std::string& binding_arg) {
  rmul::CertifyOptions o;
  o.seed = cfg.seed;
  o.trials = cfg.trials ? cfg.trials : 20;
  o.fuel = cfg.fuel;
  if (!binding_arg.empty()) o.bindings.push_back(expr::load_binding(read_json(binding_arg), cfg.budget()));
  return o;
}

int report_certificate(const Config& cfg, const rmul::Certificate& cert) {
  emit(cfg, cert.to_json().dump(2));
  if (!cfg.out.empty()) std::cout << (cert.passed() ? "PASS" : "FAIL") << " " << expr::print_expr(cert.rhs) << "\n";
  return cert.passed() ? kOk : kCheck;
}

int cmd_certify(const Config& cfg, const std::string& f, const std::string& g, const std::string& binding_arg) {
  auto opts = certify_options(cfg, binding_arg);
  auto cert = rmul::make_certificate(expr::parse_expr(expr_text(f)), expr::parse_expr(expr_text(g)), opts);
  return report_certificate(cfg, cert);
}

int cmd_check_cert(const Config& cfg, const std::string& path, const std::string& binding_arg) {
  json j;
  try {
    j = json::parse(slurp(path));
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what(), 0);
  }
  auto cert = rmul::Certificate::from_json(j);
  auto opts = certify_options(cfg, binding_arg);
  opts.seed = cert.seed;
  if (!cfg.trials) opts.trials = cert.trials;
  return report_certificate(cfg, rmul::recheck_certificate(cert, opts));
}

int cmd_closure(const Config& cfg, const std::string& gens_arg, std::size_t levels, std::size_t probes) {
  json gj = read_json(gens_arg);
  expr::ModelBinding m = expr::load_binding(gj, cfg.budget());
  closure::LadderBudget lb;
  lb.max_dimension = gj.value("max_dimension", lb.max_dimension);
  std::optional<closure::LadderBasis> lad;
  if (auto* vm = std::get_if<expr::VectorModel>(&m)) {
    lad.emplace(closure::Carrier::vector(vm->dim()), cfg.seed, lb);
    for (const auto& [name, v] : vm->bindings()) lad->seed_element(v, expr::gen(name));
  } else if (auto* pm = std::get_if<expr::PwModel>(&m)) {
    lad.emplace(closure::Carrier::pw(pm->domain_lo(), pm->domain_hi(), cfg.budget()), cfg.seed, lb);
    for (const auto& [name, f] : pm->bindings()) lad->seed_element(f, expr::gen(name));
  } else {
    throw BindingError("closure needs a vector or pw binding");
  }
  for (std::size_t l = 1; l < levels; ++l) closure::ladder_extend(*lad, probes, cfg.seed);
  emit(cfg, closure::ladder_report(*lad, probes).dump(2));
  return kOk;
}

int cmd_tensor_check(const Config& cfg, const std::string& f, const std::string& g, const std::string& binding_arg) {
  json bj = read_json(binding_arg);
  auto tb = expr::load_tensor_binding(bj.at("generators"));
  tensor::TensorCheckOptions o;
  o.seed = cfg.seed;
  if (cfg.trials) o.spot_checks = cfg.trials;
  o.fuel = cfg.fuel;
  o.budget = cfg.budget();
  auto cert = tensor::riesz_tensor_check(expr_text(f), expr_text(g), tb, grid_spec(cfg, bj, &tb), o);
  return report_certificate(cfg, cert);
}

void print_counts(const suites::SuiteResult& r, int indent) {
  std::cout << std::string(static_cast<std::size_t>(indent), ' ') << r.name << ": " << r.total_passed() << "/"
            << r.total_cases() << (r.ok() ? " ok" : " FAIL") << "\n";
  for (const auto& p : r.parts) print_counts(p, indent + 2);
}

int cmd_suite(const Config& cfg, const std::string& name) {
  suites::SuiteConfig sc;
  sc.seed = cfg.seed;
  sc.trials = cfg.trials;
  sc.budget = cfg.budget();
  sc.fuel = cfg.fuel;
  if (!cfg.grid.empty()) std::tie(sc.grid.nx, sc.grid.ny) = parse_grid(cfg.grid);
  auto start = std::chrono::steady_clock::now();
  auto r = suites::run_suite(name, sc);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  print_counts(r, 0);
  std::cerr << "elapsed " << ms << " ms\n";
  json j = r.to_json();
  if (!cfg.out.empty()) {
    emit(cfg, j.dump(2));
  } else if (!r.ok()) {
    std::function<void(const suites::SuiteResult&)> dump = [&](const suites::SuiteResult& s) {
      if (!s.counterexample.is_null()) std::cout << "counterexample " << s.name << ": " << s.counterexample.dump() << "\n";
      for (const auto& p : s.parts) dump(p);
    };
    dump(r);
  }
  return r.ok() ? kOk : kCheck;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact f-algebra and vector lattice toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--seed", cfg.seed, "Master seed")->capture_default_str();
  app.add_option("--trials", cfg.trials, "Trials per check (0 = command default)");
  app.add_option("--degree-cap", cfg.degree_cap, "Polynomial degree cap")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--bits-cap", cfg.bits_cap, "Coefficient bit-length cap")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--fuel", cfg.fuel, "Rewriter fuel (0 = automatic)");
  app.add_option("--grid", cfg.grid, "Grid size nx,ny");
  app.add_option("--out", cfg.out, "Output file");

  std::string text, f, g, binding, at, path, name;
  std::size_t levels = 3, probes = 4;

  auto* eval = app.add_subcommand("eval", "Evaluate an expression in a model");
  eval->add_option("expr", text, "Expression, or @file")->required();
  eval->add_option("-b,--binding", binding, "Binding JSON file or inline object")->required();
  eval->add_option("--at", at, "Point (pw), coordinate (vector) or x,y (tensor)");

  auto* certify = app.add_subcommand("certify", "Rewrite f*g into ladder form and certify it");
  certify->add_option("f", f)->required();
  certify->add_option("g", g)->required();
  certify->add_option("-b,--binding", binding, "Extra model to check in");

  auto* check = app.add_subcommand("check-cert", "Re-run the checks of a certificate file");
  check->add_option("certificate", path)->required();
  check->add_option("-b,--binding", binding, "Extra model to check in");

  auto* clos = app.add_subcommand("closure", "Grow the closure ladder of a set of generators");
  clos->add_option("generators", path, "Binding JSON file or inline object")->required();
  clos->add_option("--levels", levels)->capture_default_str()->check(CLI::PositiveNumber);
  clos->add_option("--probes", probes)->capture_default_str();

  auto* tcheck = app.add_subcommand("tensor-check", "Certify f*g over separable generators on a grid");
  tcheck->add_option("f", f)->required();
  tcheck->add_option("g", g)->required();
  tcheck->add_option("-b,--binding", binding, "Tensor binding JSON")->required();

  auto* suite = app.add_subcommand("suite", "Run a property suite");
  suite->add_option("name", name)->required()->check(CLI::IsMember(suites::suite_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*eval) return cmd_eval(cfg, text, binding, at);
    if (*certify) return cmd_certify(cfg, f, g, binding);
    if (*check) return cmd_check_cert(cfg, path, binding);
    if (*clos) return cmd_closure(cfg, path, levels, probes);
    if (*tcheck) return cmd_tensor_check(cfg, f, g, binding);
    if (*suite) return cmd_suite(cfg, name);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const BindingError& e) {
    std::cerr << "binding error: " << e.what() << "\n";
    return kBinding;
  } catch (const DomainError& e) {
    std::cerr << "binding error: " << e.what() << "\n";
    return kBinding;
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const FuelError& e) {
    std::cerr << "fuel exhausted: " << e.what() << "\n";
    return kBudget;
  } catch (const HypothesisError& e) {
    std::cerr << e.what() << "\n";
    return kCheck;
  }
  return kUsage;
}
