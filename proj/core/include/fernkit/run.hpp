#ifndef FERNKIT_RUN_HPP
#define FERNKIT_RUN_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "fernkit/phimod.hpp"

namespace fernkit::cli {

enum class Subcommand { envelope, tangent, weyl, phimod, example4, selftest };
enum class OutputFormat { json, text };

// One fully specified invocation. Identical configs produce byte-identical
// reports: all randomness is seeded and elapsed time never enters the
// rendered output.
struct RunConfig {
  Subcommand subcommand = Subcommand::selftest;
  std::uint64_t seed = 1;
  std::size_t trials = 0;     // 0 picks the subcommand default
  std::size_t n = 0;          // 0 picks the subcommand default
  std::string input_path;     // empty: no input file
  OutputFormat output_format = OutputFormat::json;
  std::string weyl_op;        // length | cycles | bruhat | distinct
  std::string phimod_action;  // check | refinements | orbit | example4
  std::string perm_u;         // bruhat left operand, cycle or one-line text
  std::string perm_w;         // weyl operand, cycle or one-line text
  std::string refinement;     // phimod orbit base ordering
  bool force = false;         // phimod check: report despite inadmissibility
  std::size_t sweep = 0;      // tangent: sweep all of S_n at this degree
};

struct Verdict {
  std::string name;
  bool pass = false;
};

// Subcommand outcome. results_json holds the subcommand-specific payload as
// canonical JSON (object keys sorted); elapsed_seconds is measured but kept
// out of every rendering so reports stay reproducible.
struct Report {
  std::string subcommand;
  std::string inputs_digest;
  std::string results_json;
  std::vector<Verdict> verdicts;
  double elapsed_seconds = 0.0;

  bool all_pass() const;
};

// Dispatches to the owning module. Throws SchemaError (malformed input),
// DomainError/DimensionError/PreconditionError (invalid data), and
// GeneratorExhaustedError; never aborts.
Report run(const RunConfig& config);

// Full report rendering: JSON carries schema_version 1; text prints
// rationals as "a/b" and permutations in one-line and cycle notation.
std::string render_report(const Report& report, OutputFormat format);

// Structured error object in the requested format, for the process shell.
std::string render_error(const std::string& type, const std::string& message,
                         OutputFormat format);

// Rejection-sampled weakly admissible module: jumps with gaps in [1, 50],
// valuations splitting the total jump sum, Hodge flag a unipotent twist of
// the flag opposite to the eigenbasis flag. Reproducible from the seed.
// Throws GeneratorExhaustedError after 10^4 rejected attempts and
// DomainError unless 1 <= n <= 6.
struct GeneratedModule {
  phimod::FilteredPhiModule module;
  int rejections = 0;
};
GeneratedModule generate_random_wa(std::size_t n, std::uint64_t seed);

}  // namespace fernkit::cli

#endif  // FERNKIT_RUN_HPP
