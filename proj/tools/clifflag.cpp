#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "clifflag/cli.hpp"

namespace {

int emit(const clifflag::cli::CommandResult& r) {
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = clifflag::cli;

  CLI::App app{"Exact Clifford-algebra arithmetic and Lagrange interpolation over H and R_{0,3}"};
  app.require_subcommand(1);

  std::string problem_path;
  bool verify = false, oracle = false;
  std::optional<std::size_t> decimal, max_degree;
  auto* interp = app.add_subcommand("interpolate", "Interpolate the pairs in a JSON problem file");
  interp->add_option("file", problem_path, "problem file")->required();
  interp->add_flag("--verify", verify, "print P(x) - w for every pair");
  interp->add_flag("--oracle", oracle, "cross-check against the brute-force linear solve");
  interp->add_option("--decimal", decimal, "also print an N-digit decimal approximation");
  interp->add_option("--max-degree", max_degree, "degree bound for the oracle (default: theorem bound)");

  std::string sig_text = "0,2";
  std::string poly_text, point_text;
  auto* eval = app.add_subcommand("eval", "Evaluate a polynomial at a point");
  eval->add_option("--sig", sig_text, "signature p,q")->capture_default_str();
  eval->add_option("polynomial", poly_text, "polynomial, e.g. 'X^3*(e1) + X^2*(1) + (1)'")->required();
  eval->add_option("point", point_text, "multivector, e.g. '1 + e1'")->required();
  eval->add_option("--decimal", decimal, "also print an N-digit decimal approximation");

  std::vector<std::string> diag_points;
  auto* diagnose = app.add_subcommand("diagnose", "Cone membership, invertibility and classes of points");
  diagnose->add_option("--sig", sig_text, "signature p,q")->capture_default_str();
  diagnose->add_option("points", diag_points, "multivectors")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : cli::exit_code::parse;
  }

  int cap = clifflag::kHardMaxDimension;
  try {
    std::string warning;
    cap = cli::resolve_dimension_cap(std::getenv("CLIFFLAG_MAX_DIM"), warning);
    if (!warning.empty()) std::cerr << "warning: " << warning << '\n';
  } catch (const clifflag::Error& e) {
    std::cerr << e.what() << '\n';
    return cli::exit_code::parse;
  }

  if (*interp) {
    std::ifstream in(problem_path);
    if (!in) {
      std::cerr << "cannot read " << problem_path << '\n';
      return cli::exit_code::parse;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return emit(cli::run_interpolate(buffer.str(), {verify, oracle, decimal, max_degree}, cap));
  }

  clifflag::Signature sig;
  try {
    sig = cli::parse_signature(sig_text, cap);
  } catch (const clifflag::Error& e) {
    std::cerr << e.what() << '\n';
    return cli::exit_code::parse;
  }
  if (*eval) return emit(cli::run_eval(sig, poly_text, point_text, decimal));
  return emit(cli::run_diagnose(sig, diag_points));
}
