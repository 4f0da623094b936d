#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "adequacy/report.hpp"

namespace {

int run_command(const std::string& network_path, const std::string& case_sel,
                const std::string& method, const std::string& losses, double eps,
                double tol, int max_iter, const std::string& format,
                const std::string& out_path) {
  std::ifstream in(network_path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read network file: " << network_path << "\n";
    return 2;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string document = buf.str();

  adeq::Network net;
  try {
    net = adeq::parse_network(document);
  } catch (const adeq::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  const adeq::ValidationReport val = adeq::validate_network(net);
  if (!val.ok()) {
    for (const auto& issue : val.issues) std::cerr << "invalid network: " << issue << "\n";
    return 2;
  }

  adeq::RunOptions opt;
  if (case_sel == "all") {
    opt.cases = {adeq::CaseVariant::case1, adeq::CaseVariant::case2,
                 adeq::CaseVariant::case3};
  } else if (case_sel == "1") {
    opt.cases = {adeq::CaseVariant::case1};
  } else if (case_sel == "2") {
    opt.cases = {adeq::CaseVariant::case2};
  } else {
    opt.cases = {adeq::CaseVariant::case3};
  }
  opt.method = method == "pm"     ? adeq::MethodSel::pm
               : method == "mcmf" ? adeq::MethodSel::mcmf
                                  : adeq::MethodSel::both;
  opt.losses = losses == "on"    ? adeq::LossSel::on
               : losses == "off" ? adeq::LossSel::off
                                 : adeq::LossSel::both;
  opt.eps_mw = eps;
  opt.tol_mw = tol;
  opt.max_iter = max_iter;

  adeq::ComparisonReport rep;
  try {
    rep = adeq::run_cases(net, opt, document);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  const std::string text =
      format == "structured" ? adeq::render_structured(rep) : adeq::render_tables(rep);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write output file: " << out_path << "\n";
      return 2;
    }
    out << text;
  }

  for (const auto& cr : rep.cases)
    for (const auto& m : cr.modes)
      if (m.lossy && !m.flow.converged) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"transmission adequacy: demand/generation not served and wheeling loss"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "evaluate adequacy cases on a network file");
  std::string network_path;
  std::string case_sel = "all";
  std::string method = "both";
  std::string losses = "off";
  std::string format = "table";
  std::string out_path;
  double eps = 1e-6;
  double tol = 1e-6;
  int max_iter = 50;

  run->add_option("--network", network_path, "network document (JSON)")->required();
  run->add_option("--case", case_sel, "study case: 1|2|3|all")
      ->check(CLI::IsMember({"1", "2", "3", "all"}));
  run->add_option("--method", method, "pm|mcmf|both")
      ->check(CLI::IsMember({"pm", "mcmf", "both"}));
  run->add_option("--losses", losses, "on|off|both")
      ->check(CLI::IsMember({"on", "off", "both"}));
  run->add_option("--eps", eps, "congestion tolerance, MW");
  run->add_option("--tol", tol, "lossy fixed-point tolerance, MW");
  run->add_option("--max-iter", max_iter, "lossy iteration cap");
  run->add_option("--format", format, "table|structured")
      ->check(CLI::IsMember({"table", "structured"}));
  run->add_option("--out", out_path, "write report to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  return run_command(network_path, case_sel, method, losses, eps, tol, max_iter, format,
                     out_path);
}
