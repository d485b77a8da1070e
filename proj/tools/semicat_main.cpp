#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "semicat/driver.hpp"

namespace {

int emit(semicat::RunReport const& report, bool json) {
  if (json) {
    std::cout << semicat::report_to_json(report).dump(2) << "\n";
  } else {
    std::cout << semicat::format_report_text(report);
  }
  return report.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite semigroups, ideal categories, cones and "
               "cross-connections"};
  app.require_subcommand(1);

  semicat::DriverOptions opts;
  std::string report_format = "text";
  app.add_option("--report", report_format, "report format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-enum", opts.max_enum,
                 "cap on the cone enumeration search space");
  app.add_option("--seed", opts.seed, "seed for randomized corpora");

  std::string path;
  bool fixtures = false;
  auto* analyze = app.add_subcommand(
      "analyze", "classify a semigroup and its ideal categories");
  analyze->add_option("path", path, "input file");
  analyze->add_option("--format", opts.format, "input format")
      ->check(CLI::IsMember({"cayley", "socat"}));
  analyze->add_flag("--fixtures", fixtures, "run the built-in corpus");

  auto* rebuild = app.add_subcommand(
      "rebuild", "rebuild a locally inverse semigroup from its "
                 "cross-connection");
  rebuild->add_option("path", path, "Cayley table file")->required();

  auto* rees = app.add_subcommand(
      "rees", "verify the Rees matrix model of a sandwich-matrix spec");
  int random_count = 0;
  rees->add_option("path", path, "Rees spec file");
  rees->add_option("--random", random_count,
                   "run this many random regular specs instead");

  auto* esn = app.add_subcommand(
      "esn", "inductive groupoid and inversive-category round trips");
  esn->add_option("path", path, "Cayley table file")->required();

  CLI11_PARSE(app, argc, argv);
  opts.json = report_format == "json";

  if (analyze->parsed()) {
    if (fixtures) {
      return emit(semicat::cmd_fixtures(opts), opts.json);
    }
    if (path.empty()) {
      std::cerr << "analyze: missing input file\n";
      return 2;
    }
    return emit(semicat::cmd_analyze(path, opts), opts.json);
  }
  if (rebuild->parsed()) {
    return emit(semicat::cmd_rebuild(path, opts), opts.json);
  }
  if (rees->parsed()) {
    if (random_count > 0) {
      return emit(semicat::cmd_rees_random(random_count, opts), opts.json);
    }
    if (path.empty()) {
      std::cerr << "rees: missing input file\n";
      return 2;
    }
    return emit(semicat::cmd_rees(path, opts), opts.json);
  }
  if (esn->parsed()) {
    return emit(semicat::cmd_esn(path, opts), opts.json);
  }
  return 2;
}
