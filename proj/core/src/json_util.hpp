// JSON (de)serialization shared by the run layer. Private to the library
// implementation: public headers stay JSON-free.

#ifndef FERNKIT_SRC_JSON_UTIL_HPP
#define FERNKIT_SRC_JSON_UTIL_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "json.hpp"

#include "fernkit/matrix.hpp"
#include "fernkit/permutation.hpp"
#include "fernkit/phimod.hpp"
#include "fernkit/rational.hpp"
#include "fernkit/subspace.hpp"

namespace fernkit::jsonio {

using json = nlohmann::json;

std::uint64_t fnv1a64(std::string_view bytes);
// "fnv1a:" followed by 16 lowercase hex digits.
std::string digest_string(std::string_view bytes);

// Rationals travel as "a/b" strings (plain "a" when the denominator is 1);
// integral JSON numbers are accepted on input. `field` names the offending
// location in SchemaError messages.
json rational_to_json(const exactlin::Rational& x);
exactlin::Rational rational_from_json(const json& j, const std::string& field);

// Matrices are arrays of row arrays.
json matrix_to_json(const exactlin::RMatrix& m);
exactlin::RMatrix matrix_from_json(const json& j, const std::string& field);

// Permutations serialize as {"cycles": "(1 3)", "images": [3,2,1]} so both
// notations appear in every report; input accepts a plain 1-based image
// array, a cycle string, or such an object.
json permutation_to_json(const weyl::Permutation& w);
weyl::Permutation permutation_from_json(const json& j, std::size_t n,
                                        const std::string& field);

// CLI text form: "id", "()", "(2 1)(4 3)", "[2,1]", or "2,1". One-line
// forms infer the degree; cycle forms require n_hint > 0.
weyl::Permutation permutation_from_text(const std::string& text,
                                        std::size_t n_hint);

// Reduced row-echelon basis rows.
json subspace_to_json(const exactlin::Subspace& s);

// Module schema (schema_version 1): n, p, e, f, eigenvalue_valuations or
// exact eigenvalues, embeddings with jumps and hodge_flag. Flags list the
// proper steps deepest-first; each entry is either the full list of
// spanning vectors of that step or a single new vector extending the
// previous step.
json module_to_json(const phimod::FilteredPhiModule& d);
phimod::FilteredPhiModule module_from_json(const json& j);

// Reads and parses, translating failures into SchemaError.
json load_json_file(const std::string& path);

// Deterministic human-readable rendering (objects iterate in sorted key
// order). Strings print unquoted; scalar arrays print inline.
std::string pretty_text(const json& j, int indent);

}  // namespace fernkit::jsonio

#endif  // FERNKIT_SRC_JSON_UTIL_HPP
