#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <unistd.h>

#include <CLI11.hpp>

#include "hilbinv/cli.hpp"

namespace {

using namespace hilbinv;

unsigned default_jobs() {
  if (const char* env = std::getenv("JOBS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring JOBS=" << env << "\n";
  }
  return 1;
}

bool use_color() {
  const char* env = std::getenv("COLOR");
  const std::string mode = env ? env : "auto";
  if (mode == "always") return true;
  if (mode == "never") return false;
  return isatty(STDOUT_FILENO) != 0;
}

// Bold comment lines of text reports when styling is on.
std::string stylize(const std::string& text, bool color) {
  if (!color) return text;
  std::string out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    const std::string line = text.substr(pos, end - pos);
    out += line.starts_with("#") ? "\033[1m" + line + "\033[0m" : line;
    if (end < text.size()) out += '\n';
    pos = end + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hilbinv: lattice invariants of the birational involution of S^[n]"};
  app.require_subcommand(1);

  std::int64_t n = 0;
  std::int64_t min_n = 2;
  std::int64_t max_n = 200;
  std::string mode = "appendix";
  std::string format = "text";
  bool verify = false;
  unsigned jobs = default_jobs();
  std::string d;
  std::string kind = "fundamental";
  std::optional<std::string> p;
  std::optional<std::int64_t> bound;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  };
  auto add_mode = [&](CLI::App* sub) {
    sub->add_option("--mode", mode, "appendix or full")->check(CLI::IsMember({"appendix", "full"}));
  };

  auto* scan = app.add_subcommand("scan", "chamber counts C_n over a range of n");
  scan->add_option("--min-n", min_n, "first n (default 2)");
  scan->add_option("--max-n", max_n, "last n (default 200)");
  add_mode(scan);
  add_format(scan);
  scan->add_option("--jobs", jobs, "worker threads (default: JOBS or 1)")->check(CLI::PositiveNumber);

  auto* walls = app.add_subcommand("walls", "walls of the movable cone of S^[n]");
  walls->add_option("--n", n)->required();
  add_mode(walls);
  add_format(walls);
  walls->add_flag("--verify", verify, "check every record's invariants and the involution symmetry");

  auto* sigma = app.add_subcommand("sigma", "NS lattice and Bir finiteness verdict for Sigma");
  sigma->add_option("--n", n)->required();
  add_format(sigma);
  sigma->add_flag("--verify", verify);

  auto* strata = app.add_subcommand("strata", "stratification table of the indeterminacy locus");
  strata->add_option("--n", n)->required();
  add_format(strata);
  strata->add_flag("--verify", verify);

  auto* lemmas = app.add_subcommand("lemmas", "bounded searches for spherical classes and positive decompositions");
  lemmas->add_option("--n", n)->required();
  lemmas->add_option("--bound", bound, "search box (default 4n)");
  add_format(lemmas);

  auto* pell = app.add_subcommand("pell", "Pell equation solvers");
  pell->add_option("--d", d, "D, arbitrary size")->required();
  pell->add_option("--kind", kind, "fundamental, negative or mixed")
      ->check(CLI::IsMember({"fundamental", "negative", "mixed"}));
  pell->add_option("--p", p, "p for the mixed equation p x^2 - D y^2 = -1");
  add_format(pell);
  pell->add_flag("--verify", verify);

  auto* eichler = app.add_subcommand("eichler", "check the period-lattice isometry alpha");
  eichler->add_option("--n", n)->required();
  add_format(eichler);
  eichler->add_flag("--verify", verify);

  auto* formulas = app.add_subcommand("formulas", "closed-form quantities at n");
  formulas->add_option("--n", n)->required();
  add_format(formulas);
  formulas->add_flag("--verify", verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const auto fmt = cli::parse_format(format);
  const auto wall_mode = cli::parse_mode(mode);
  cli::CommandResult res;
  if (*scan) {
    res = cli::cmd_scan({min_n, max_n, wall_mode, fmt, jobs});
  } else if (*walls) {
    res = cli::cmd_walls(n, wall_mode, fmt, verify);
  } else if (*sigma) {
    res = cli::cmd_sigma(n, fmt, verify);
  } else if (*strata) {
    res = cli::cmd_strata(n, fmt, verify);
  } else if (*lemmas) {
    res = cli::cmd_lemmas(n, bound, fmt);
  } else if (*pell) {
    res = cli::cmd_pell(d, cli::parse_pell_kind(kind), p, fmt, verify);
  } else if (*eichler) {
    res = cli::cmd_eichler(n, fmt, verify);
  } else if (*formulas) {
    res = cli::cmd_formulas(n, fmt, verify);
  }

  std::cout << (fmt == cli::Format::Text ? stylize(res.out, use_color()) : res.out);
  std::cerr << res.err;
  return res.exit_code;
}
