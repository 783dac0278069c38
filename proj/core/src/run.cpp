#include "fernkit/run.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "json_util.hpp"

#include "fernkit/borel.hpp"
#include "fernkit/errors.hpp"
#include "fernkit/local_model.hpp"
#include "fernkit/random.hpp"

namespace fernkit::cli {

namespace {

using exactlin::RMatrix;
using jsonio::json;

struct Outcome {
  json results = json::object();
  std::vector<Verdict> verdicts;
};

const char* subcommand_name(Subcommand s) {
  switch (s) {
    case Subcommand::envelope: return "envelope";
    case Subcommand::tangent: return "tangent";
    case Subcommand::weyl: return "weyl";
    case Subcommand::phimod: return "phimod";
    case Subcommand::example4: return "example4";
    case Subcommand::selftest: return "selftest";
  }
  return "unknown";
}

std::string read_file_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot read input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json parse_input(const std::string& bytes, const std::string& path) {
  try {
    return json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

// Everything that determines the run, including input file contents; the
// output format is presentation only.
std::string digest_source(const RunConfig& c, const std::string& input_bytes) {
  std::ostringstream s;
  s << "subcommand=" << subcommand_name(c.subcommand) << ";seed=" << c.seed
    << ";trials=" << c.trials << ";n=" << c.n << ";weyl_op=" << c.weyl_op
    << ";phimod_action=" << c.phimod_action << ";perm_u=" << c.perm_u
    << ";perm_w=" << c.perm_w << ";refinement=" << c.refinement
    << ";force=" << (c.force ? 1 : 0) << ";sweep=" << c.sweep
    << ";input=" << input_bytes;
  return s.str();
}

std::size_t factorial(std::size_t n) {
  std::size_t out = 1;
  for (std::size_t k = 2; k <= n; ++k) out *= k;
  return out;
}

std::vector<weyl::Permutation> all_permutations(std::size_t n) {
  std::vector<int> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<int>(i + 1);
  std::vector<weyl::Permutation> out;
  out.reserve(factorial(n));
  do {
    out.push_back(weyl::Permutation(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

// ---- envelope ----------------------------------------------------------

json envelope_report_to_json(const RMatrix& g, const borel::EnvelopeReport& rep,
                             bool witness_supplied) {
  json summands = json::array();
  for (const auto& [cycle, dim] : rep.summand_dims) {
    summands.push_back(json{{"cycle", jsonio::permutation_to_json(cycle)},
                            {"dimension", dim}});
  }
  const std::size_t n = g.rows();
  return json{{"g", jsonio::matrix_to_json(g)},
              {"n", n},
              {"witness", jsonio::permutation_to_json(rep.witness)},
              {"witness_supplied", witness_supplied},
              {"summands", std::move(summands)},
              {"total_span_dim", rep.total_span_dim},
              {"borel_dim", n * (n + 1) / 2},
              {"verified", rep.verified}};
}

Outcome run_envelope_input(const json& in) {
  if (!in.is_object() || !in.contains("g")) {
    throw SchemaError("envelope input: missing \"g\"");
  }
  const RMatrix g = jsonio::matrix_from_json(in.at("g"), "g");
  const bool supplied = in.contains("w_prime");
  const weyl::Permutation witness =
      supplied ? jsonio::permutation_from_json(in.at("w_prime"), g.rows(),
                                               "w_prime")
               : borel::envelope_witness(g);
  const borel::EnvelopeReport rep = borel::verify_envelope(g, witness);
  Outcome o;
  o.results = envelope_report_to_json(g, rep, supplied);
  o.verdicts.push_back(Verdict{"envelope_verified", rep.verified});
  return o;
}

Outcome run_envelope_random(std::size_t n, std::size_t trials,
                            std::uint64_t seed) {
  if (n < 1 || n > 6) throw DomainError("envelope trials support 1 <= n <= 6");
  rng::SplitMix64 gen(seed);
  json failures = json::array();
  for (std::size_t t = 0; t < trials; ++t) {
    const RMatrix g = rng::random_invertible(gen, n, -9, 9);
    const borel::EnvelopeReport rep =
        borel::verify_envelope(g, borel::envelope_witness(g));
    if (!rep.verified) failures.push_back(t);
  }
  Outcome o;
  o.results = json{{"n", n},
                   {"trials", trials},
                   {"seed", seed},
                   {"entry_range", json::array({-9, 9})},
                   {"failures", failures},
                   {"all_verified", failures.empty()}};
  o.verdicts.push_back(Verdict{"envelope_all_verified", failures.empty()});
  return o;
}

// ---- tangent -----------------------------------------------------------

json tangent_row(const weyl::Permutation& w,
                 const localmodel::TangentReport& rep) {
  return json{{"w", jsonio::permutation_to_json(w)},
              {"fiber_tangent_dim", rep.fiber_tangent_dim},
              {"formula_dim", rep.formula_dim},
              {"distinct_simple", rep.distinct_simple},
              {"equals_ambient", rep.equality_with_Xw0}};
}

Outcome run_tangent_input(const json& in) {
  if (!in.is_object() || !in.contains("g1") || !in.contains("g2")) {
    throw SchemaError("tangent input: expected {\"g1\", \"g2\"}");
  }
  const RMatrix g1 = jsonio::matrix_from_json(in.at("g1"), "g1");
  const RMatrix g2 = jsonio::matrix_from_json(in.at("g2"), "g2");
  const std::size_t n = g1.rows();
  const localmodel::TangentReport rep = localmodel::tangent_fiber_dim(
      localmodel::LocalModelPoint{g1, RMatrix::zero(n, n), g2});
  Outcome o;
  o.results = json{{"g1", jsonio::matrix_to_json(g1)},
                   {"g2", jsonio::matrix_to_json(g2)},
                   {"stratum", jsonio::permutation_to_json(rep.stratum)},
                   {"ambient_dim", rep.ambient_dim},
                   {"fiber_tangent_dim", rep.fiber_tangent_dim},
                   {"formula_dim", rep.formula_dim},
                   {"distinct_simple", rep.distinct_simple},
                   {"equals_ambient", rep.equality_with_Xw0}};
  o.verdicts.push_back(Verdict{"tangent_formula_matches",
                               rep.fiber_tangent_dim == rep.formula_dim});
  o.verdicts.push_back(Verdict{"tangent_sharpness",
                               rep.equality_with_Xw0 == rep.distinct_simple});
  return o;
}

Outcome run_tangent_sweep(std::size_t n) {
  if (n < 1 || n > 6) throw DomainError("tangent sweep supports 1 <= n <= 6");
  const RMatrix id = RMatrix::identity(n);
  const RMatrix zero = RMatrix::zero(n, n);
  json rows = json::array();
  bool formula_all = true;
  bool sharp_all = true;
  for (const weyl::Permutation& w : all_permutations(n)) {
    const localmodel::TangentReport rep = localmodel::tangent_fiber_dim(
        localmodel::LocalModelPoint{id, zero, w.matrix()});
    rows.push_back(tangent_row(w, rep));
    formula_all = formula_all && rep.fiber_tangent_dim == rep.formula_dim;
    sharp_all = sharp_all && rep.equality_with_Xw0 == rep.distinct_simple;
  }
  Outcome o;
  o.results =
      json{{"n", n}, {"count", rows.size()}, {"rows", std::move(rows)}};
  o.verdicts.push_back(Verdict{"tangent_formula_matches", formula_all});
  o.verdicts.push_back(Verdict{"tangent_sharpness", sharp_all});
  return o;
}

// ---- weyl --------------------------------------------------------------

json permutation_stats(const weyl::Permutation& w) {
  return json{{"w", jsonio::permutation_to_json(w)},
              {"length", weyl::length(w)},
              {"reduced_word", weyl::reduced_word(w)},
              {"support", weyl::support(w)},
              {"cycle_count", weyl::cycle_count(w)},
              {"distinct_simple_product", weyl::is_distinct_simple_product(w)}};
}

Outcome run_weyl(const RunConfig& c) {
  Outcome o;
  if (c.weyl_op == "length" || c.weyl_op == "distinct") {
    if (c.perm_w.empty()) {
      throw SchemaError("weyl --op " + c.weyl_op + " needs --w PERM");
    }
    const weyl::Permutation w = jsonio::permutation_from_text(c.perm_w, c.n);
    o.results = permutation_stats(w);
    if (c.weyl_op == "distinct") {
      const bool dsp = weyl::is_distinct_simple_product(w);
      o.results["carter_identity"] =
          weyl::cycle_count(w) == w.n() - weyl::length(w);
      o.verdicts.push_back(Verdict{"distinct_simple_product", dsp});
    }
    return o;
  }
  if (c.weyl_op == "cycles") {
    if (c.n == 0) throw SchemaError("weyl --op cycles needs --n N");
    const std::vector<weyl::Permutation> cycles = weyl::full_cycles(c.n);
    json items = json::array();
    for (const weyl::Permutation& w : cycles) {
      items.push_back(jsonio::permutation_to_json(w));
    }
    const std::size_t formula = 1 + c.n * (c.n - 1) / 2;
    o.results = json{{"n", c.n},
                     {"count", cycles.size()},
                     {"formula", formula},
                     {"cycles", std::move(items)}};
    o.verdicts.push_back(
        Verdict{"cycle_count_formula", cycles.size() == formula});
    return o;
  }
  if (c.weyl_op == "bruhat") {
    if (c.perm_u.empty() || c.perm_w.empty()) {
      throw SchemaError("weyl --op bruhat needs --u PERM and --w PERM");
    }
    const weyl::Permutation u = jsonio::permutation_from_text(c.perm_u, c.n);
    const weyl::Permutation w =
        jsonio::permutation_from_text(c.perm_w, u.n());
    const bool leq = weyl::bruhat_leq(u, w);
    o.results = json{{"u", jsonio::permutation_to_json(u)},
                     {"w", jsonio::permutation_to_json(w)},
                     {"leq", leq}};
    o.verdicts.push_back(Verdict{"bruhat_leq", leq});
    return o;
  }
  throw SchemaError("weyl: unknown --op (length|cycles|bruhat|distinct)");
}

// ---- phimod ------------------------------------------------------------

json admissibility_to_json(const phimod::AdmissibilityVerdict& v) {
  json violations = json::array();
  for (const phimod::SubsetComparison& sc : v.violations) {
    violations.push_back(json{{"subset", sc.subset},
                              {"tN", jsonio::rational_to_json(sc.newton)},
                              {"tH", jsonio::rational_to_json(sc.hodge)}});
  }
  json crystalline = json::array();
  for (const std::vector<int>& subset : v.crystalline_subobjects) {
    crystalline.push_back(subset);
  }
  return json{{"tN_total", jsonio::rational_to_json(v.tN_total)},
              {"tH_total", jsonio::rational_to_json(v.tH_total)},
              {"is_weakly_admissible", v.is_weakly_admissible},
              {"violations", std::move(violations)},
              {"crystalline_subobjects", std::move(crystalline)}};
}

// One refinement-table row; relative positions are computed once and the
// criticality flags derived from them.
json refinement_row(const phimod::FilteredPhiModule& d,
                    const phimod::Refinement& r, bool* noncritical_out) {
  const weyl::Permutation w0 = weyl::Permutation::longest(d.n());
  const std::vector<weyl::Permutation> rels = phimod::relative_position(d, r);
  bool noncritical = true;
  bool dta = true;
  json rel_json = json::array();
  for (const weyl::Permutation& rel : rels) {
    noncritical = noncritical && rel == w0;
    dta = dta && weyl::is_distinct_simple_product(w0 * rel);
    rel_json.push_back(jsonio::permutation_to_json(rel));
  }
  if (noncritical_out != nullptr) *noncritical_out = noncritical;
  return json{{"sigma", jsonio::permutation_to_json(r.sigma)},
              {"relative_positions", std::move(rel_json)},
              {"noncritical", noncritical},
              {"distinct_transposition_associated", dta},
              {"numerically_noncritical",
               phimod::numerically_noncritical(d, r)}};
}

Outcome phimod_check(const phimod::FilteredPhiModule& d, bool force) {
  const phimod::AdmissibilityVerdict v = phimod::weak_admissibility(d);
  Outcome o;
  o.results = json{{"module", jsonio::module_to_json(d)},
                   {"admissibility", admissibility_to_json(v)},
                   {"sum_criterion_irreducible",
                    phimod::sum_criterion_irreducible(d)}};
  if (v.is_weakly_admissible || force) {
    o.results["is_irreducible"] = phimod::is_irreducible(d, force);
  }
  o.verdicts.push_back(Verdict{"weakly_admissible", v.is_weakly_admissible});
  return o;
}

Outcome phimod_refinements(const phimod::FilteredPhiModule& d) {
  if (d.n() > 7) throw DomainError("refinement table limited to n <= 7");
  json rows = json::array();
  json noncritical_set = json::array();
  for (const phimod::Refinement& r : phimod::refinements(d)) {
    bool noncritical = false;
    rows.push_back(refinement_row(d, r, &noncritical));
    if (noncritical) {
      noncritical_set.push_back(jsonio::permutation_to_json(r.sigma));
    }
  }
  Outcome o;
  const bool count_ok = rows.size() == factorial(d.n());
  o.results = json{{"module", jsonio::module_to_json(d)},
                   {"count", rows.size()},
                   {"rows", std::move(rows)},
                   {"noncritical_set", std::move(noncritical_set)}};
  o.verdicts.push_back(Verdict{"refinement_count_correct", count_ok});
  return o;
}

Outcome phimod_orbit(const phimod::FilteredPhiModule& d,
                     const std::string& refinement_text) {
  if (refinement_text.empty()) {
    throw SchemaError("phimod orbit needs --refinement PERM");
  }
  const phimod::Refinement r0{
      jsonio::permutation_from_text(refinement_text, d.n())};
  const phimod::OrbitReport rep = phimod::cn_orbit_report(d, r0);
  json rows = json::array();
  bool all_dta = true;
  for (const phimod::OrbitRow& row : rep.rows) {
    json rels = json::array();
    for (const weyl::Permutation& rel : row.relative_positions) {
      rels.push_back(jsonio::permutation_to_json(rel));
    }
    rows.push_back(
        json{{"cycle", jsonio::permutation_to_json(row.cycle)},
             {"refinement", jsonio::permutation_to_json(row.refinement.sigma)},
             {"relative_positions", std::move(rels)},
             {"noncritical", row.noncritical},
             {"distinct_transposition", row.distinct_transposition}});
    all_dta = all_dta && row.distinct_transposition;
  }
  Outcome o;
  o.results = json{{"module", jsonio::module_to_json(d)},
                   {"r0", jsonio::permutation_to_json(r0.sigma)},
                   {"count", rows.size()},
                   {"rows", std::move(rows)}};
  o.verdicts.push_back(Verdict{"orbit_all_distinct_transposition", all_dta});
  return o;
}

Outcome run_example4_outcome() {
  const phimod::FilteredPhiModule d = phimod::example4();
  const phimod::AdmissibilityVerdict v = phimod::weak_admissibility(d);

  const std::vector<std::vector<int>> expected_images = {
      {1, 2, 3, 4}, {1, 3, 2, 4}, {4, 2, 3, 1}, {4, 3, 2, 1}};
  json expected = json::array();
  for (const std::vector<int>& images : expected_images) {
    expected.push_back(
        jsonio::permutation_to_json(weyl::Permutation(images)));
  }

  json rows = json::array();
  json noncritical_set = json::array();
  std::vector<std::vector<int>> noncritical_images;
  json numerical_witness;  // noncritical but not numerically noncritical
  for (const phimod::Refinement& r : phimod::refinements(d)) {
    bool noncritical = false;
    json row = refinement_row(d, r, &noncritical);
    if (noncritical) {
      noncritical_set.push_back(jsonio::permutation_to_json(r.sigma));
      noncritical_images.push_back(r.sigma.images());
      if (numerical_witness.is_null() &&
          !phimod::numerically_noncritical(d, r)) {
        numerical_witness = jsonio::permutation_to_json(r.sigma);
      }
    }
    rows.push_back(std::move(row));
  }

  const bool set_matches = [&] {
    std::vector<std::vector<int>> got = noncritical_images;
    std::vector<std::vector<int>> want = expected_images;
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    return got == want;
  }();
  const bool crystalline_empty = v.crystalline_subobjects.empty();
  const bool violation_reported = [&] {
    if (v.is_weakly_admissible) return false;
    for (const phimod::SubsetComparison& sc : v.violations) {
      if (sc.subset == std::vector<int>{1, 4} && sc.newton == 28 &&
          sc.hodge == 30) {
        return true;
      }
    }
    return false;
  }();

  Outcome o;
  o.results = json{
      {"module", jsonio::module_to_json(d)},
      {"admissibility", admissibility_to_json(v)},
      {"refinement_count", rows.size()},
      {"rows", std::move(rows)},
      {"noncritical_set", std::move(noncritical_set)},
      {"expected_noncritical_set", std::move(expected)},
      {"noncritical_not_numerically_noncritical", std::move(numerical_witness)}};
  o.verdicts.push_back(Verdict{"noncritical_set_matches", set_matches});
  o.verdicts.push_back(
      Verdict{"crystalline_subobjects_empty", crystalline_empty});
  o.verdicts.push_back(Verdict{"wa_violation_reported", violation_reported});
  return o;
}

Outcome run_phimod(const RunConfig& c) {
  const std::string& act = c.phimod_action;
  if (act == "example4") {
    Outcome o = run_example4_outcome();
    o.results["action"] = "example4";
    return o;
  }
  if (act != "check" && act != "refinements" && act != "orbit") {
    throw SchemaError("phimod: unknown action (check|refinements|orbit|example4)");
  }
  if (c.input_path.empty()) {
    throw SchemaError("phimod " + act + " needs --input FILE");
  }
  const phimod::FilteredPhiModule d = jsonio::module_from_json(
      parse_input(read_file_bytes(c.input_path), c.input_path));
  if (act == "check") return phimod_check(d, c.force);
  if (act == "refinements") return phimod_refinements(d);
  return phimod_orbit(d, c.refinement);
}

// ---- selftest ----------------------------------------------------------

Outcome run_selftest(const RunConfig& c) {
  const std::size_t n = c.n == 0 ? 3 : c.n;
  const std::size_t trials = c.trials == 0 ? 50 : c.trials;
  if (n < 1 || n > 6) throw DomainError("selftest supports 1 <= n <= 6");
  Outcome o;

  // Envelope property run.
  rng::SplitMix64 gen(c.seed);
  std::size_t envelope_failures = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const RMatrix g = rng::random_invertible(gen, n, -9, 9);
    if (!borel::verify_envelope(g, borel::envelope_witness(g)).verified) {
      ++envelope_failures;
    }
  }

  // Tangent sweep.
  const RMatrix id = RMatrix::identity(n);
  const RMatrix zero = RMatrix::zero(n, n);
  bool tangent_formula = true;
  bool tangent_sharp = true;
  for (const weyl::Permutation& w : all_permutations(n)) {
    const localmodel::TangentReport rep = localmodel::tangent_fiber_dim(
        localmodel::LocalModelPoint{id, zero, w.matrix()});
    tangent_formula =
        tangent_formula && rep.fiber_tangent_dim == rep.formula_dim;
    tangent_sharp = tangent_sharp && rep.equality_with_Xw0 == rep.distinct_simple;
  }

  // Weyl combinatorics.
  bool cycles_ok = true;
  for (std::size_t m = 1; m <= 8; ++m) {
    cycles_ok = cycles_ok && weyl::full_cycles(m).size() == 1 + m * (m - 1) / 2;
  }
  bool carter_ok = true;
  for (std::size_t m = 1; m <= 5; ++m) {
    for (const weyl::Permutation& w : all_permutations(m)) {
      if (weyl::is_distinct_simple_product(w)) {
        carter_ok = carter_ok && weyl::cycle_count(w) == m - weyl::length(w);
      }
    }
  }
  bool bruhat_ok = true;
  bool words_ok = true;
  const weyl::Permutation w0 = weyl::Permutation::longest(n);
  const weyl::Permutation e = weyl::Permutation::identity(n);
  for (const weyl::Permutation& w : all_permutations(n)) {
    bruhat_ok = bruhat_ok && weyl::bruhat_leq(e, w) && weyl::bruhat_leq(w, w0) &&
                weyl::bruhat_leq(w, w);
    const std::vector<int> word = weyl::reduced_word(w);
    weyl::Permutation prod = e;
    for (int letter : word) {
      prod = prod * weyl::Permutation::simple(n, letter);
    }
    words_ok = words_ok && prod == w && word.size() == weyl::length(w);
  }

  // Phimod: bundled fixture plus the seeded generator.
  const Outcome example = run_example4_outcome();
  bool example_noncritical = false;
  bool example_crystalline = false;
  bool example_violation = false;
  for (const Verdict& v : example.verdicts) {
    if (v.name == "noncritical_set_matches") example_noncritical = v.pass;
    if (v.name == "crystalline_subobjects_empty") example_crystalline = v.pass;
    if (v.name == "wa_violation_reported") example_violation = v.pass;
  }
  bool generator_wa = true;
  bool generator_det = true;
  json generator_stats = json::array();
  for (std::size_t m = 2; m <= 3; ++m) {
    const GeneratedModule a = generate_random_wa(m, c.seed + m);
    const GeneratedModule b = generate_random_wa(m, c.seed + m);
    generator_wa = generator_wa &&
                   phimod::weak_admissibility(a.module).is_weakly_admissible;
    generator_det = generator_det &&
                    jsonio::module_to_json(a.module) ==
                        jsonio::module_to_json(b.module) &&
                    a.rejections == b.rejections;
    generator_stats.push_back(
        json{{"n", m}, {"rejections", a.rejections}});
  }

  o.results = json{
      {"envelope",
       json{{"n", n},
            {"trials", trials},
            {"seed", c.seed},
            {"failures", envelope_failures}}},
      {"tangent", json{{"n", n}, {"count", factorial(n)}}},
      {"weyl", json{{"cycle_counts_to", 8}, {"carter_to", 5}, {"n", n}}},
      {"phimod", json{{"generator", std::move(generator_stats)}}}};
  o.verdicts.push_back(
      Verdict{"envelope_all_verified", envelope_failures == 0});
  o.verdicts.push_back(Verdict{"tangent_formula_matches", tangent_formula});
  o.verdicts.push_back(Verdict{"tangent_sharpness", tangent_sharp});
  o.verdicts.push_back(Verdict{"weyl_cycle_count_formula", cycles_ok});
  o.verdicts.push_back(Verdict{"weyl_carter_identity", carter_ok});
  o.verdicts.push_back(Verdict{"weyl_bruhat_sanity", bruhat_ok});
  o.verdicts.push_back(Verdict{"weyl_reduced_words", words_ok});
  o.verdicts.push_back(
      Verdict{"phimod_example4_noncritical_set", example_noncritical});
  o.verdicts.push_back(
      Verdict{"phimod_example4_no_crystalline_subobjects", example_crystalline});
  o.verdicts.push_back(
      Verdict{"phimod_example4_wa_violation_reported", example_violation});
  o.verdicts.push_back(
      Verdict{"phimod_generator_weakly_admissible", generator_wa});
  o.verdicts.push_back(
      Verdict{"phimod_generator_deterministic", generator_det});
  return o;
}

}  // namespace

bool Report::all_pass() const {
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](const Verdict& v) { return v.pass; });
}

Report run(const RunConfig& config) {
  const auto t0 = std::chrono::steady_clock::now();
  std::string input_bytes;
  if (!config.input_path.empty()) {
    input_bytes = read_file_bytes(config.input_path);
  }

  Outcome outcome;
  switch (config.subcommand) {
    case Subcommand::envelope:
      outcome = config.input_path.empty()
                    ? run_envelope_random(config.n == 0 ? 3 : config.n,
                                          config.trials == 0 ? 50
                                                             : config.trials,
                                          config.seed)
                    : run_envelope_input(
                          parse_input(input_bytes, config.input_path));
      break;
    case Subcommand::tangent:
      if (config.sweep > 0) {
        outcome = run_tangent_sweep(config.sweep);
      } else if (!config.input_path.empty()) {
        outcome = run_tangent_input(parse_input(input_bytes, config.input_path));
      } else {
        throw SchemaError("tangent needs --sweep N or --input FILE");
      }
      break;
    case Subcommand::weyl:
      outcome = run_weyl(config);
      break;
    case Subcommand::phimod:
      outcome = run_phimod(config);
      break;
    case Subcommand::example4:
      outcome = run_example4_outcome();
      break;
    case Subcommand::selftest:
      outcome = run_selftest(config);
      break;
  }

  Report report;
  report.subcommand = subcommand_name(config.subcommand);
  report.inputs_digest =
      jsonio::digest_string(digest_source(config, input_bytes));
  report.results_json = outcome.results.dump();
  report.verdicts = std::move(outcome.verdicts);
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return report;
}

std::string render_report(const Report& report, OutputFormat format) {
  const json results = json::parse(report.results_json);
  if (format == OutputFormat::json) {
    json verdicts = json::array();
    for (const Verdict& v : report.verdicts) {
      verdicts.push_back(json{{"name", v.name}, {"pass", v.pass}});
    }
    const json j = json{{"schema_version", 1},
                        {"subcommand", report.subcommand},
                        {"inputs_digest", report.inputs_digest},
                        {"results", results},
                        {"verdicts", std::move(verdicts)}};
    return j.dump(2) + "\n";
  }
  std::string out;
  out += "subcommand: " + report.subcommand + "\n";
  out += "inputs_digest: " + report.inputs_digest + "\n";
  out += "results:\n" + jsonio::pretty_text(results, 2);
  out += "verdicts:\n";
  for (const Verdict& v : report.verdicts) {
    out += "  " + v.name + ": " + (v.pass ? "PASS" : "FAIL") + "\n";
  }
  out += std::string("overall: ") + (report.all_pass() ? "PASS" : "FAIL") + "\n";
  return out;
}

std::string render_error(const std::string& type, const std::string& message,
                         OutputFormat format) {
  if (format == OutputFormat::json) {
    const json j =
        json{{"schema_version", 1},
             {"error", json{{"type", type}, {"message", message}}}};
    return j.dump(2) + "\n";
  }
  return "error [" + type + "]: " + message + "\n";
}

}  // namespace fernkit::cli
