#include <fstream>
#include <iostream>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "commands.hpp"
#include "koszul/error.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Koszul duals, PBW tests, Nakayama automorphisms and potentials"};
  app.require_subcommand(1);

  koszul::cli::Options o;
  std::string path;
  std::size_t slack = 0;
  std::size_t gldim = 0;
  std::pair<char const*, char const*> const commands[] = {
      {"dual", "Koszul dual presentation"},
      {"pbw", "Jacobi conditions and bounded PBW test"},
      {"nakayama", "Nakayama automorphism of the algebra or its deformation"},
      {"cy", "Calabi-Yau verdict"},
      {"potential", "potential whose derivatives give the relations"},
      {"frobenius", "Frobenius structure of the Koszul dual"},
  };
  for (auto [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", path, "algebra file (JSON)")->required();
    sub->add_option("--max-degree", o.max_degree, "degree bound for bounded checks")->capture_default_str();
    sub->add_option("--slack", slack, "extra degrees for the PBW span (default N+1)");
    sub->add_option("--dim", o.dim, "2, 3, general or auto")
        ->check(CLI::IsMember({"2", "3", "general", "auto"}))
        ->capture_default_str();
    sub->add_option("--gldim", gldim, "global dimension for the general pipeline");
    sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  }

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(koszul::ErrorClass::Precondition);
  }
  CLI::App* sub = app.get_subcommands().front();
  o.command = sub->get_name();
  if (sub->count("--slack")) o.slack = slack;
  if (sub->count("--gldim")) o.gldim = gldim;

  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: ParseError: cannot open " << path << "\n";
    return static_cast<int>(koszul::ErrorClass::Parse);
  }
  std::stringstream text;
  text << in.rdbuf();

  koszul::cli::Outcome r = koszul::cli::run(o, text.str());
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
