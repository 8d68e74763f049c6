// Command-line front end: latf4 {complete,check,reduce,branchings,oracle}.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "latf4/commands.hpp"

namespace {

  bool read_file(std::string const& path, std::string& text) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      std::cerr << "error: cannot read '" << path << "'\n";
      return false;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
    return true;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Noncommutative Groebner bases by lattice completion of "
               "reduction operators"};
  app.require_subcommand(1);

  std::string file;
  std::string trace_path;
  std::string polynomial;
  std::size_t max_iter = 64;
  std::size_t max_deg  = 12;
  std::size_t oracle_deg  = 6;
  std::size_t oracle_iter = 64;

  auto* complete = app.add_subcommand("complete", "complete a presentation");
  complete->add_option("file", file, "presentation file")->required();
  complete->add_option("--max-iter", max_iter, "iteration cap")
      ->check(CLI::PositiveNumber);
  complete->add_option("--max-deg", max_deg, "cap on rule key length")
      ->check(CLI::PositiveNumber);
  complete->add_option("--trace", trace_path, "write a per-step report");

  auto* check = app.add_subcommand("check", "test confluence");
  check->add_option("file", file, "presentation file")->required();

  auto* reduce = app.add_subcommand("reduce", "normal form of a polynomial");
  reduce->add_option("file", file, "presentation file")->required();
  reduce->add_option("polynomial", polynomial, "polynomial text")
      ->required();

  auto* branchings
      = app.add_subcommand("branchings", "list critical branchings");
  branchings->add_option("file", file, "presentation file")->required();

  auto* oracle = app.add_subcommand(
      "oracle", "compare with a naive Buchberger completion");
  oracle->add_option("file", file, "presentation file")->required();
  oracle->add_option("--max-deg", oracle_deg, "degree cap for both engines")
      ->check(CLI::PositiveNumber);
  oracle->add_option("--max-iter", oracle_iter, "iteration cap")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : latf4::exit_usage;
  }

  std::string text;
  if (!read_file(file, text)) {
    return latf4::exit_usage;
  }

  if (*complete) {
    std::string trace;
    int rc = latf4::cmd_complete(text, {max_iter, max_deg},
                                 trace_path.empty() ? nullptr : &trace,
                                 std::cout, std::cerr);
    if (!trace_path.empty() && rc != latf4::exit_usage) {
      std::ofstream os(trace_path);
      if (!os) {
        std::cerr << "error: cannot write '" << trace_path << "'\n";
        return latf4::exit_usage;
      }
      os << trace;
    }
    return rc;
  }
  if (*check) {
    return latf4::cmd_check(text, std::cout, std::cerr);
  }
  if (*reduce) {
    return latf4::cmd_reduce(text, polynomial, std::cout, std::cerr);
  }
  if (*branchings) {
    return latf4::cmd_branchings(text, std::cout, std::cerr);
  }
  return latf4::cmd_oracle(text, oracle_deg, oracle_iter, std::cout,
                           std::cerr);
}
