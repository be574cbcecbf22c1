#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "dialg/cli.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw dialg::Error(dialg::ErrorKind::Parse, "cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohomology, extensions and deformations of oriented dialgebras"};
  app.require_subcommand(1);
  std::string input;
  std::size_t n = 0;
  std::size_t order = 0;
  bool pretty = false;
  bool json = false;

  for (const auto& name : dialg::cli::command_names()) {
    auto* sub = app.add_subcommand(name);
    if (name != "trees") sub->add_option("--input", input, "bundle file ('-' for stdin)");
    sub->add_option("--n", n, "degree, level or order");
    sub->add_option("--order", order, "truncation order");
    sub->add_flag("--pretty", pretty, "human-readable summary");
    sub->add_flag("--json", json, "JSON output (default)");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  auto* sub = app.get_subcommands().front();
  dialg::cli::Options opts;
  opts.command = sub->get_name();
  opts.pretty = pretty && !json;
  if (sub->count("--n")) opts.n = n;
  if (sub->count("--order")) opts.order = order;
  if (opts.command != "trees") {
    try {
      opts.input = read_input(input);
    } catch (const dialg::Error& e) {
      std::cout << "{\"error\":\"ParseError\",\"message\":\"" << e.what() << "\"}\n";
      return 2;
    }
  }
  const auto result = dialg::cli::run(opts);
  std::cout << result.output;
  return result.exit_code;
}
