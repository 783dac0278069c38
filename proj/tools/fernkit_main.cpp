// fernkit: exact-arithmetic verification CLI. Every subcommand prints one
// deterministic report to stdout (JSON by default) and its timing to
// stderr; the exit status is 0 iff every verdict in the report passed.

#include <cstdio>
#include <exception>
#include <string>

#include "CLI11.hpp"

#include "fernkit/errors.hpp"
#include "fernkit/run.hpp"

namespace {

using fernkit::cli::OutputFormat;
using fernkit::cli::Report;
using fernkit::cli::RunConfig;
using fernkit::cli::Subcommand;

int emit_error(const std::string& type, const std::string& message,
               OutputFormat format) {
  std::fputs(fernkit::cli::render_error(type, message, format).c_str(),
             stdout);
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact rational verification toolkit: Borel envelope decompositions, "
      "local-model tangent spaces, symmetric-group combinatorics, and "
      "refinements of filtered modules."};
  app.require_subcommand(1);

  RunConfig config;
  std::string format = "json";
  std::string phimod_action;

  const auto add_format = [&format](CLI::App* sub) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
  };

  CLI::App* envelope = app.add_subcommand(
      "envelope",
      "verify the full-cycle decomposition of a Borel subalgebra");
  envelope->add_option("--trials", config.trials,
                       "random trials (default 50)");
  envelope->add_option("--n", config.n, "matrix size for trials (default 3)");
  envelope->add_option("--seed", config.seed, "PRNG seed (default 1)");
  envelope->add_option(
      "--input", config.input_path,
      "JSON file {\"g\": matrix, \"w_prime\"?: permutation}");
  add_format(envelope);

  CLI::App* tangent = app.add_subcommand(
      "tangent", "tangent dimension of the graded fiber at A = 0");
  tangent->add_option("--sweep", config.sweep,
                      "evaluate every permutation stratum at this degree");
  tangent->add_option("--input", config.input_path,
                      "JSON file {\"g1\": matrix, \"g2\": matrix}");
  add_format(tangent);

  CLI::App* weyl =
      app.add_subcommand("weyl", "symmetric-group computations");
  weyl->add_option("--op", config.weyl_op, "operation")
      ->required()
      ->check(CLI::IsMember({"length", "cycles", "bruhat", "distinct"}));
  weyl->add_option("--n", config.n, "degree (required for cycle notation)");
  weyl->add_option("--w", config.perm_w,
                   "permutation, e.g. \"(1 3)\" or \"[3,2,1]\"");
  weyl->add_option("--u", config.perm_u, "left operand for --op bruhat");
  add_format(weyl);

  CLI::App* phimod = app.add_subcommand(
      "phimod", "filtered module admissibility and refinements");
  phimod->add_option("action", phimod_action, "what to compute")
      ->required()
      ->check(CLI::IsMember({"check", "refinements", "orbit", "example4"}));
  phimod->add_option("--input", config.input_path, "module JSON file");
  phimod->add_option("--refinement", config.refinement,
                     "base ordering for the orbit table");
  phimod->add_flag("--force", config.force,
                   "report irreducibility even when not weakly admissible");
  add_format(phimod);

  CLI::App* example4 = app.add_subcommand(
      "example4", "bundled rank-4 worked example with golden comparison");
  add_format(example4);

  CLI::App* selftest = app.add_subcommand(
      "selftest", "run the built-in property checks across all modules");
  selftest->add_option("--n", config.n, "degree (default 3)");
  selftest->add_option("--trials", config.trials,
                       "envelope trials (default 50)");
  selftest->add_option("--seed", config.seed, "PRNG seed (default 1)");
  add_format(selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if (*envelope) config.subcommand = Subcommand::envelope;
  if (*tangent) config.subcommand = Subcommand::tangent;
  if (*weyl) config.subcommand = Subcommand::weyl;
  if (*phimod) config.subcommand = Subcommand::phimod;
  if (*example4) config.subcommand = Subcommand::example4;
  if (*selftest) config.subcommand = Subcommand::selftest;
  config.phimod_action = phimod_action;
  config.output_format =
      format == "text" ? OutputFormat::text : OutputFormat::json;

  try {
    const Report report = fernkit::cli::run(config);
    std::fputs(fernkit::cli::render_report(report, config.output_format).c_str(),
               stdout);
    std::fprintf(stderr, "elapsed: %.3fs\n", report.elapsed_seconds);
    return report.all_pass() ? 0 : 1;
  } catch (const fernkit::SchemaError& e) {
    return emit_error("schema", e.what(), config.output_format);
  } catch (const fernkit::PreconditionError& e) {
    return emit_error("precondition", e.what(), config.output_format);
  } catch (const fernkit::GeneratorExhaustedError& e) {
    return emit_error("generator-exhausted", e.what(), config.output_format);
  } catch (const fernkit::SingularityError& e) {
    return emit_error("singularity", e.what(), config.output_format);
  } catch (const fernkit::DimensionError& e) {
    return emit_error("dimension", e.what(), config.output_format);
  } catch (const fernkit::DomainError& e) {
    return emit_error("domain", e.what(), config.output_format);
  } catch (const fernkit::Error& e) {
    return emit_error("error", e.what(), config.output_format);
  } catch (const std::exception& e) {
    return emit_error("internal", e.what(), config.output_format);
  }
}
