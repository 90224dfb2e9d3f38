// Command-line front end: products, powers, composition, changes of
// variables, norms and the seeded self-check.
//
// Exit codes: 0 success, 1 other failure, 2 schema or usage error,
// 3 dimension mismatch, 4 singular matrix.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "multilin/json_io.hpp"
#include "multilin/multilin.hpp"
#include "multilin/verify.hpp"

namespace {

using multilin::io::Json;

struct Options {
  std::string out;
  int max_weight = 6;
  std::optional<int> max_weight_flag;
};

int env_max_weight() {
  const char* v = std::getenv("MULTILIN_MAX_WEIGHT");
  if (v == nullptr || *v == '\0') return 6;
  try {
    std::size_t used = 0;
    const int w = std::stoi(v, &used);
    if (used != std::string(v).size() || w < 0) throw std::invalid_argument(v);
    return w;
  } catch (const std::exception&) {
    throw multilin::SchemaError(std::string("MULTILIN_MAX_WEIGHT: expected a nonnegative integer, got \"") + v + "\"");
  }
}

void check_weight(const Options& o, long w, const std::string& what) {
  if (w > o.max_weight) {
    throw multilin::SchemaError(what + ": weight " + std::to_string(w) + " exceeds the cap " +
                                std::to_string(o.max_weight) + " (--max-weight / MULTILIN_MAX_WEIGHT)");
  }
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw multilin::Error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw multilin::SchemaError(path + ": invalid JSON: " + e.what());
  }
}

std::string root(const std::string& path) { return path + ":$"; }

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw multilin::Error("cannot write " + o.out);
  f << text;
}

void emit(const Options& o, const Json& j) { emit(o, j.dump(2) + "\n"); }

multilin::SymMatrix read_sym(const Options& o, const std::string& path) {
  auto a = multilin::io::sym_from_json(read_json(path), root(path));
  check_weight(o, std::max(a.p(), a.p_prime()), path);
  return a;
}

multilin::AltMatrix read_alt(const Options& o, const std::string& path) {
  auto a = multilin::io::alt_from_json(read_json(path), root(path));
  check_weight(o, std::max(a.p(), a.p_prime()), path);
  return a;
}

multilin::PolyMap read_polymap(const Options& o, const std::string& path) {
  auto m = multilin::io::polymap_from_json(read_json(path), root(path));
  check_weight(o, m.degree(), path);
  return m;
}

int run(int argc, char** argv) {
  CLI::App app{"Exact matrix calculus for polynomial and multilinear maps"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--out", opt.out, "Write the result to this file instead of stdout");
  app.add_option("--max-weight", opt.max_weight_flag, "Cap on stratum weights (default: MULTILIN_MAX_WEIGHT or 6)");

  std::string a_path, b_path, c_path;
  int k = 0;
  bool raw = false;
  double rho = 1.0;
  std::uint64_t seed = 42;
  std::string kind = "sym";

  auto* odot_cmd = app.add_subcommand("odot", "Symmetric product A (.) B of two sym matrices");
  odot_cmd->add_option("a", a_path)->required();
  odot_cmd->add_option("b", b_path)->required();

  auto* wedge_cmd = app.add_subcommand("wedge", "Wedge product A ^ B of two alt matrices");
  wedge_cmd->add_option("a", a_path)->required();
  wedge_cmd->add_option("b", b_path)->required();

  auto* sym_power_cmd = app.add_subcommand("sym-power", "Normalized power A^(k)/k! of a sym matrix");
  sym_power_cmd->add_option("a", a_path)->required();
  sym_power_cmd->add_option("--k", k)->required()->check(CLI::NonNegativeNumber);
  sym_power_cmd->add_flag("--raw", raw, "Emit A^(k) without dividing by k!");

  auto* wedge_power_cmd = app.add_subcommand("wedge-power", "Compound matrix A^{^k}/k! of a weight-(1,1) alt matrix");
  wedge_power_cmd->add_option("a", a_path)->required();
  wedge_power_cmd->add_option("--k", k)->required()->check(CLI::NonNegativeNumber);
  wedge_power_cmd->add_flag("--raw", raw, "Emit A^{^k} without dividing by k!");

  auto* compose_cmd = app.add_subcommand("compose", "Matrix of phi o psi (psi applied first)");
  compose_cmd->add_option("phi", a_path)->required();
  compose_cmd->add_option("psi", b_path)->required();

  auto* change_cmd = app.add_subcommand("change-vars", "S Exp(M_phi) Exp(T_inv) for changes y' = S(y), x = T_inv(x')");
  change_cmd->add_option("phi", a_path)->required();
  change_cmd->add_option("s", b_path)->required();
  change_cmd->add_option("t_inv", c_path)->required();

  auto* mlprod_cmd = app.add_subcommand("mlprod", "Product of two multilinear maps through a bilinear pairing");
  mlprod_cmd->add_option("--kind", kind)->check(CLI::IsMember({"sym", "alt"}));
  mlprod_cmd->add_option("a", a_path)->required();
  mlprod_cmd->add_option("b", b_path)->required();
  mlprod_cmd->add_option("c", c_path)->required();

  auto* norm_cmd = app.add_subcommand("norm", "rho-norm of an alt matrix");
  norm_cmd->add_option("a", a_path)->required();
  norm_cmd->add_option("--rho", rho)->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run every property suite with a fixed seed");
  verify_cmd->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  opt.max_weight = opt.max_weight_flag ? *opt.max_weight_flag : env_max_weight();
  if (opt.max_weight < 0) throw multilin::SchemaError("--max-weight must be nonnegative");
  namespace io = multilin::io;

  if (*odot_cmd) {
    const auto a = read_sym(opt, a_path), b = read_sym(opt, b_path);
    check_weight(opt, std::max(a.p() + b.p(), a.p_prime() + b.p_prime()), "odot result");
    emit(opt, io::to_json(multilin::odot(a, b)));
  } else if (*wedge_cmd) {
    const auto a = read_alt(opt, a_path), b = read_alt(opt, b_path);
    check_weight(opt, std::max(a.p() + b.p(), a.p_prime() + b.p_prime()), "wedge result");
    emit(opt, io::to_json(multilin::wedge(a, b)));
  } else if (*sym_power_cmd) {
    const auto a = read_sym(opt, a_path);
    check_weight(opt, static_cast<long>(k) * std::max(a.p(), a.p_prime()), "sym-power result");
    emit(opt, io::to_json(raw ? multilin::odot_power(a, k) : multilin::sym_power(a, k)));
  } else if (*wedge_power_cmd) {
    const auto a = read_alt(opt, a_path);
    check_weight(opt, k, "wedge-power result");
    const auto w = multilin::wedge_power(a, k);
    emit(opt, io::to_json(raw ? w : w / multilin::Rational(multilin::factorial(k))));
  } else if (*compose_cmd) {
    const auto phi = read_polymap(opt, a_path), psi = read_polymap(opt, b_path);
    check_weight(opt, static_cast<long>(phi.degree()) * psi.degree(), "compose result");
    emit(opt, io::to_json(multilin::compose(phi, psi)));
  } else if (*change_cmd) {
    const auto phi = read_polymap(opt, a_path), s = read_polymap(opt, b_path), t = read_polymap(opt, c_path);
    check_weight(opt, static_cast<long>(s.degree()) * phi.degree() * t.degree(), "change-vars result");
    emit(opt, io::to_json(multilin::change_of_variables(phi, s, t)));
  } else if (*mlprod_cmd) {
    const Json ja = read_json(a_path), jb = read_json(b_path), jc = read_json(c_path);
    if (kind == "sym") {
      const auto a = io::sym_multimap_from_json(ja, root(a_path));
      const auto b = io::sym_multimap_from_json(jb, root(b_path));
      const auto c = io::bilinear_from_json(jc, a.out_dim(), root(c_path));
      check_weight(opt, a.arity() + b.arity(), "mlprod result");
      emit(opt, io::to_json(multilin::product_sym(a, b, c)));
    } else {
      const auto a = io::alt_multimap_from_json(ja, root(a_path));
      const auto b = io::alt_multimap_from_json(jb, root(b_path));
      const auto c = io::bilinear_from_json(jc, a.out_dim(), root(c_path));
      check_weight(opt, a.arity() + b.arity(), "mlprod result");
      emit(opt, io::to_json(multilin::product_alt(a, b, c)));
    }
  } else if (*norm_cmd) {
    const auto a = read_alt(opt, a_path);
    const double v = multilin::holder_norm(a, multilin::NormParams(rho));
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g\n", v);
    emit(opt, std::string(buf));
  } else if (*verify_cmd) {
    const auto results = multilin::verify::run_criterion(0, seed);
    emit(opt, multilin::verify::format_report(results, seed));
    for (const auto& r : results) {
      if (!r.ok()) return 1;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const multilin::SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return 2;
  } catch (const multilin::DimensionError& e) {
    std::cerr << "dimension error: " << e.what() << "\n";
    return 3;
  } catch (const multilin::SingularMatrixError& e) {
    std::cerr << "singular matrix: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
