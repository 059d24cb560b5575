// symkit: verify registry examples and analyze pencil files.
//
// Exit codes: 0 every check passed, 1 some check failed or was partial,
// 2 usage, unknown example or unreadable pencil file.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "symkit/commands.hpp"
#include "symkit/registry.hpp"

namespace {

int emit(const symkit::VerificationReport& report, const std::string& format) {
  std::cout << symkit::emit_report(report, format == "json" ? symkit::Format::json : symkit::Format::human);
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of quartic symmetroid claims"};
  app.set_version_flag("--version", symkit::tool_version());
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  std::string format = "human";
  std::string id, file, lambda;
  int budget = 500;

  auto* verify = app.add_subcommand("verify", "run the registered claims of an example");
  verify->add_option("id", id, "example id (see list-examples)")->required();
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--format", format)->check(CLI::IsMember({"human", "json"}));
  verify->add_option("--lambda", lambda, "rational lambda for the lambda family, e.g. 1/2");

  auto* analyze = app.add_subcommand("analyze", "claim-free analysis of a pencil file");
  analyze->add_option("file", file, "pencil file")->required();
  analyze->add_option("--seed", seed, "random seed");
  analyze->add_option("--budget", budget, "positive definite search trials")->check(CLI::PositiveNumber);
  analyze->add_option("--format", format)->check(CLI::IsMember({"human", "json"}));

  auto* list = app.add_subcommand("list-examples", "print the registry");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*list) {
      for (const auto& name : symkit::example_ids())
        std::cout << name << "  " << symkit::find_example(name).summary << '\n';
      std::cout << "lambda-family(<q>)  any nonzero rational q, e.g. verify lambda-family --lambda 1/2\n";
      return 0;
    }
    if (*verify) {
      if (!lambda.empty()) {
        if (id != "lambda-family") throw std::invalid_argument("--lambda applies to lambda-family only");
        id = "lambda-family(" + lambda + ")";
      }
      return emit(symkit::cmd_verify(id, seed), format);
    }
    std::ifstream in(file);
    if (!in) throw std::invalid_argument("cannot read '" + file + "'");
    std::stringstream text;
    text << in.rdbuf();
    auto pencil = symkit::parse_pencil(text.str());
    return emit(symkit::cmd_analyze(pencil, seed, budget, file), format);
  } catch (const symkit::ParseError& e) {
    std::cerr << file << ":" << e.line() << ": " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
