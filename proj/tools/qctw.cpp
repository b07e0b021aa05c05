// qctw: run the verification suites and emit reports or bracket tables.
//
// Exit status: 0 all checks pass, 1 some check fails, 2 usage or I/O error.

#include "qctw/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace {

constexpr int kUsageError = 2;

int write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!(out << text)) {
    std::cerr << "qctw: cannot write " << path << '\n';
    return kUsageError;
  }
  return 0;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int check_table(int n, const std::string& path, qctw::OutputFormat format) {
  const std::string text = read_file(path);
  int table_n = n;
  const auto rows = format == qctw::OutputFormat::json ? qctw::parse_bracket_json(text, &table_n) : qctw::parse_bracket_csv(text);
  const qctw::CheckReport r = qctw::verify_bracket_table(table_n, rows);
  const std::string regenerated = format == qctw::OutputFormat::json ? qctw::bracket_table_json(table_n) : qctw::bracket_table_csv(table_n);
  const bool identical = regenerated == text;
  std::cout << (r.passed() ? "pass" : "fail") << "  " << r.name << " (" << r.trials << " pairs)\n";
  if (r.counterexample) std::cout << "      " << *r.counterexample << '\n';
  std::cout << (identical ? "pass" : "fail") << "  regenerated table is byte-identical\n";
  return r.passed() && identical ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and numeric checks for the twistor space of a quaternionic contact manifold"};
  app.require_subcommand(1);

  qctw::SuiteConfig cfg;
  std::string format = "json";
  std::string check_path;
  const std::map<std::string, qctw::OutputFormat> formats{
      {"json", qctw::OutputFormat::json}, {"csv", qctw::OutputFormat::csv}, {"text", qctw::OutputFormat::text}};

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "quaternionic dimension n")->check(CLI::Range(1, qctw::SuiteConfig::kMaxN));
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", cfg.out, "output file (default: stdout)");
  };
  auto add_suite = [&](CLI::App* sub) {
    add_common(sub);
    sub->add_option("--trials", cfg.trials, "random trials per check");
    sub->add_option("--fd-step", cfg.model.fd_step, "finite-difference step")->check(CLI::PositiveNumber);
    sub->add_option("--tol", cfg.model.residual_tol, "integrability residual tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--eig-floor", cfg.model.eig_floor, "smallest admissible |eigenvalue| of the Levi form")
        ->check(CLI::PositiveNumber);
  };

  auto* algebra = app.add_subcommand("verify-algebra", "exact checks of the graded Lie algebras, phi and the G0 actions");
  auto* model = app.add_subcommand("verify-model", "flat model: definitions, CR structure, Levi form, integrability");
  auto* all = app.add_subcommand("all", "both suites in one report");
  auto* table = app.add_subcommand("bracket-table", "structure constants of the graded basis of sp(Q)");
  for (auto* sub : {algebra, model, all}) add_suite(sub);
  add_common(table);
  table->add_option("--check", check_path, "verify a previously written table instead of writing one");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    cfg.format = formats.at(format);
    cfg.validate();
    if (table->parsed()) {
      if (cfg.format == qctw::OutputFormat::text) cfg.format = qctw::OutputFormat::csv;
      if (!check_path.empty()) return check_table(cfg.n, check_path, cfg.format);
      return write_output(cfg.out, cfg.format == qctw::OutputFormat::json ? qctw::bracket_table_json(cfg.n)
                                                                          : qctw::bracket_table_csv(cfg.n));
    }
    qctw::SuiteResult result;
    if (algebra->parsed())
      result = qctw::run_algebra_suite(cfg);
    else if (model->parsed())
      result = qctw::run_model_suite(cfg);
    else
      result = qctw::run_all_suites(cfg);
    if (const int rc = write_output(cfg.out, qctw::render(result, cfg.format)); rc != 0) return rc;
    return result.passed() ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "qctw: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::runtime_error& e) {
    std::cerr << "qctw: " << e.what() << '\n';
    return kUsageError;
  }
}
