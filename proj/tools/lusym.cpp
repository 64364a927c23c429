#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "commands.hpp"

using namespace lusym;
using namespace lusym::cli;

namespace {

Symbol read_symbol_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw DomainError("cannot open symbol file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw DomainError("symbol file '" + path + "' is not valid JSON: " + e.what());
  }
  return j.get<Symbol>();
}

int emit(const CommandResult& result, const std::string& out_path) {
  if (!result.error.empty())
    std::cerr << "lusym: " << result.error << '\n';
  if (result.output.empty())
    return result.exit_code;
  if (out_path.empty()) {
    std::cout << result.output;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "lusym: cannot write '" << out_path << "'\n";
      return kExitUsage;
    }
    out << result.output;
  }
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lusztig symbols and the theta correspondence of unipotent characters"};
  app.require_subcommand(1);

  std::string format_name = "table";
  std::string out_path;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  app.add_option("--out", out_path, "Write output to FILE instead of stdout");
  app.fallthrough();

  std::string family;
  auto* enumerate = app.add_subcommand("enumerate", "List the unipotent symbols of a family");
  enumerate->add_option("--family", family, "Family tag: U6, Sp4, O+4, O-4")->required();

  std::string pair;
  std::string symbol_text;
  std::string symbol_file;
  auto* theta = app.add_subcommand("theta", "Partners, tau, theta-bar and admissibility");
  theta->add_option("--pair", pair, "Dual pair, e.g. U3:U6 or Sp2:O-2")->required();
  auto* source = theta->add_option_group("symbol source");
  source->add_option("--symbol", symbol_text, "Symbol as [top|bottom]");
  source->add_option("--symbol-file", symbol_file,
                     "JSON file holding {\"top\":[...],\"bottom\":[...]}");
  source->require_option(1);

  VerifyOptions vopt;
  std::string vpair;
  std::string vtarget;
  int k_max = 0;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("suite", vopt.suite,
                     "degree-diff, theta-rank, structural, degree-oracle, "
                     "lusztig-identities or all")
      ->required();
  auto* pair_opt = verify->add_option("--pair", vpair, "Pair kind for degree-diff: SpO, OSp, UU");
  auto* target_opt = verify->add_option("--target", vtarget, "Target for theta-rank: Sp, Oeps, U");
  verify->add_option("--n-max", vopt.n_max, "Largest group size")
      ->check(CLI::Range(1, kMaxSuiteBound))
      ->capture_default_str();
  auto* kmax_opt = verify->add_option("--k-max", k_max, "Largest source size (defaults to --n-max)")
                       ->check(CLI::Range(1, kMaxSuiteBound));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  const Format format = format_name == "json" ? Format::Json : Format::Table;
  try {
    if (*enumerate)
      return emit(cmd_enumerate(family, format), out_path);
    if (*theta) {
      const Symbol s = symbol_file.empty() ? parse_compact_symbol(symbol_text)
                                           : read_symbol_file(symbol_file);
      return emit(cmd_theta(pair, s, format), out_path);
    }
    if (*verify) {
      if (*pair_opt) vopt.pair = vpair;
      if (*target_opt) vopt.target = vtarget;
      if (*kmax_opt) vopt.k_max = k_max;
      return emit(cmd_verify(vopt, format), out_path);
    }
  } catch (const DomainError& e) {
    std::cerr << "lusym: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceError& e) {
    std::cerr << "lusym: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "lusym: internal error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
