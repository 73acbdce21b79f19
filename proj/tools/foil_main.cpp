#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "foil/checked.hpp"
#include "foil/commands.hpp"

namespace {

struct ReadError {
  std::string message;
};

foil::Source read_source(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ReadError{"cannot read " + path};
  std::ostringstream text;
  text << in.rdbuf();
  return foil::Source{path, text.str()};
}

int emit(const foil::CommandResult& r) {
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Capture-avoiding substitution over scope-branded lambda terms"};
  app.require_subcommand(1);

  std::string file;
  std::string file2;
  bool closed = false;
  auto* resolve = app.add_subcommand("resolve", "Resolve names and print the term");
  resolve->add_option("FILE", file, "Source file")->required();
  resolve->add_flag("--closed", closed, "Reject free variables instead of binding them at top level");

  std::string var;
  auto* subst = app.add_subcommand("subst", "Substitute a term for a free variable");
  subst->add_option("FILE", file, "Source file")->required();
  subst->add_option("--var", var, "Free variable to replace")->required();
  subst->add_option("--with", file2, "File holding the replacement term")->required();

  std::uint64_t fuel = foil::kDefaultFuel;
  auto* normalize = app.add_subcommand("normalize", "Normal-order reduction to normal form");
  normalize->add_option("FILE", file, "Source file")->required();
  normalize->add_option("--fuel", fuel, "Maximum number of beta steps")->capture_default_str();

  auto* alpha = app.add_subcommand("alpha-eq", "Exit 0 iff the two terms are alpha-equivalent");
  alpha->add_option("FILE1", file, "First source file")->required();
  alpha->add_option("FILE2", file2, "Second source file")->required();

  foil::FuzzConfig config;
  auto* fuzz = app.add_subcommand("fuzz", "Differential test against the De Bruijn oracle");
  fuzz->add_option("--cases", config.cases, "Number of generated cases")->capture_default_str();
  fuzz->add_option("--seed", config.seed, "Run seed")->capture_default_str();
  fuzz->add_option("--max-depth", config.max_depth, "Depth bound of generated terms")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  fuzz->add_option("--max-free", config.max_free, "Maximum number of top-level free names")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*resolve) return emit(foil::cmd_resolve(read_source(file), closed));
    if (*subst) return emit(foil::cmd_subst(read_source(file), var, read_source(file2)));
    if (*normalize) return emit(foil::cmd_normalize(read_source(file), fuel));
    if (*alpha) return emit(foil::cmd_alpha_eq(read_source(file), read_source(file2)));
    if (*fuzz) return emit(foil::cmd_fuzz(config));
  } catch (const ReadError& e) {
    std::cerr << e.message << "\n";
    return foil::exit_code::parse_error;
  } catch (const foil::InvariantViolation& e) {
    std::cerr << e.what() << "\n";
    return 4;
  }
  return 0;
}
