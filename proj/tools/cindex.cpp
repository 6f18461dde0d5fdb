#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "cindex/commands.hpp"

namespace {

void add_input_flags(CLI::App* cmd, cindex::cli::Options& opts) {
  cmd->add_option("--input", opts.input, "Authorship records (CSV or JSON)")->required();
  cmd->add_option("--schema", opts.schema, "Schema config JSON (default: gender/country/field)");
  cmd->add_option("--input-format", opts.input_format, "auto, csv or json")
      ->check(CLI::IsMember({"auto", "csv", "json"}));
  cmd->add_option("--delta", opts.delta, "Novelty bonus strength; overrides the schema")->check(CLI::NonNegativeNumber);
  cmd->add_flag("--skip-solo", opts.skip_solo, "Leave single-author publications out of the mean");
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = cindex::cli;
  CLI::App app{"cindex: community index (co-authorship diversity) calculator"};
  app.require_subcommand(1);

  cli::Options opts;
  std::string demo_dir = ".";
  const std::map<std::string, cindex::ReportFormat> formats{{"csv", cindex::ReportFormat::csv},
                                                            {"json", cindex::ReportFormat::json}};

  auto* validate = app.add_subcommand("validate", "Check that the input builds into a corpus");
  add_input_flags(validate, opts);

  auto* compute = app.add_subcommand("compute", "Rank every author by c-index");
  add_input_flags(compute, opts);
  compute->add_option("--output", opts.output, "Report file (default: stdout)");
  compute->add_option("--format", opts.format, "csv or json")->transform(CLI::CheckedTransformer(formats));
  compute->add_option("--threads", opts.threads, "Worker threads")->check(CLI::PositiveNumber);

  auto* explain = app.add_subcommand("explain", "Show every term behind an author's score");
  add_input_flags(explain, opts);
  explain->add_option("--author", opts.author, "Author key or name")->required();
  explain->add_option("--pub", opts.pub, "Restrict to one publication");

  auto* graph = app.add_subcommand("graph", "Dump the co-authorship graph as JSON");
  add_input_flags(graph, opts);
  graph->add_option("--output", opts.output, "Output file (default: stdout)");

  auto* demo = app.add_subcommand("demo", "Write the worked-example fixtures and expected values");
  demo->add_option("--output,dir", demo_dir, "Target directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : cli::exit_code::validation;
  }

  if (*validate) return cli::cmd_validate(opts, std::cout, std::cerr);
  if (*compute) return cli::cmd_compute(opts, std::cout, std::cerr);
  if (*explain) return cli::cmd_explain(opts, std::cout, std::cerr);
  if (*graph) return cli::cmd_graph(opts, std::cout, std::cerr);
  if (*demo) return cli::cmd_demo(demo_dir, std::cout, std::cerr);
  return cli::exit_code::internal;
}
