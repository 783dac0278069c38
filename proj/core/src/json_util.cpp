#include "json_util.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "fernkit/errors.hpp"

namespace fernkit::jsonio {

namespace {

using exactlin::Rational;
using exactlin::RMatrix;
using exactlin::Subspace;

long long_from_json(const json& j, const std::string& field) {
  if (!j.is_number_integer() && !j.is_number_unsigned()) {
    throw SchemaError(field + ": expected an integer");
  }
  return j.get<long>();
}

std::size_t count_from_json(const json& j, const std::string& field) {
  const long v = long_from_json(j, field);
  if (v < 0) throw SchemaError(field + ": expected a nonnegative integer");
  return static_cast<std::size_t>(v);
}

std::vector<Rational> vector_from_json(const json& j,
                                       const std::string& field) {
  if (!j.is_array() || j.empty()) {
    throw SchemaError(field + ": expected a nonempty array");
  }
  std::vector<Rational> out;
  out.reserve(j.size());
  for (std::size_t k = 0; k < j.size(); ++k) {
    out.push_back(
        rational_from_json(j[k], field + "[" + std::to_string(k) + "]"));
  }
  return out;
}

}  // namespace

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string digest_string(std::string_view bytes) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "fnv1a:%016llx",
                static_cast<unsigned long long>(fnv1a64(bytes)));
  return std::string(buf);
}

json rational_to_json(const exactlin::Rational& x) {
  return exactlin::to_string(x);
}

Rational rational_from_json(const json& j, const std::string& field) {
  if (j.is_number_integer() || j.is_number_unsigned()) {
    return Rational(j.get<long>());
  }
  if (j.is_string()) {
    try {
      return exactlin::parse_rational(j.get<std::string>());
    } catch (const Error& e) {
      throw SchemaError(field + ": " + e.what());
    }
  }
  throw SchemaError(field + ": expected an integer or an \"a/b\" string");
}

json matrix_to_json(const RMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      row.push_back(rational_to_json(m.at(i, j)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

RMatrix matrix_from_json(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) {
    throw SchemaError(field + ": expected a nonempty array of rows");
  }
  const std::size_t rows = j.size();
  std::vector<std::vector<Rational>> data;
  data.reserve(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    data.push_back(vector_from_json(j[i], field + "[" + std::to_string(i) + "]"));
    if (data[i].size() != data[0].size()) {
      throw SchemaError(field + ": rows must all have the same length");
    }
  }
  RMatrix m(rows, data[0].size());
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t k = 0; k < data[i].size(); ++k) {
      m.at(i, k) = data[i][k];
    }
  }
  return m;
}

json permutation_to_json(const weyl::Permutation& w) {
  return json{{"cycles", w.cycle_string()}, {"images", w.images()}};
}

weyl::Permutation permutation_from_json(const json& j, std::size_t n,
                                        const std::string& field) {
  try {
    if (j.is_string()) {
      return weyl::Permutation::from_cycles(j.get<std::string>(), n);
    }
    if (j.is_object() && j.contains("images")) {
      return permutation_from_json(j.at("images"), n, field + ".images");
    }
    if (j.is_array()) {
      std::vector<int> images;
      images.reserve(j.size());
      for (std::size_t k = 0; k < j.size(); ++k) {
        images.push_back(static_cast<int>(
            long_from_json(j[k], field + "[" + std::to_string(k) + "]")));
      }
      if (n != 0 && images.size() != n) {
        throw SchemaError(field + ": expected a permutation of degree " +
                          std::to_string(n));
      }
      return weyl::Permutation(std::move(images));
    }
  } catch (const SchemaError&) {
    throw;
  } catch (const Error& e) {
    throw SchemaError(field + ": " + e.what());
  }
  throw SchemaError(field +
                    ": expected an image array, a cycle string, or an object "
                    "with \"images\"");
}

weyl::Permutation permutation_from_text(const std::string& text,
                                        std::size_t n_hint) {
  std::string t;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  }
  if (t.empty()) throw SchemaError("empty permutation argument");
  try {
    if (t == "id" || t == "()" || t.front() == '(') {
      if (n_hint == 0) {
        throw SchemaError(
            "cycle-notation permutations need an explicit degree (--n)");
      }
      return weyl::Permutation::from_cycles(text, n_hint);
    }
    std::string body = t;
    if (body.front() == '[') {
      if (body.back() != ']') throw SchemaError("unbalanced '[' in permutation");
      body = body.substr(1, body.size() - 2);
    }
    std::vector<int> images;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) throw SchemaError("empty entry in permutation list");
      images.push_back(std::stoi(item));
    }
    if (n_hint != 0 && images.size() != n_hint) {
      throw SchemaError("expected a permutation of degree " +
                        std::to_string(n_hint));
    }
    return weyl::Permutation(std::move(images));
  } catch (const SchemaError&) {
    throw;
  } catch (const Error& e) {
    throw SchemaError(std::string("bad permutation argument: ") + e.what());
  } catch (const std::exception&) {
    throw SchemaError("bad permutation argument: " + text);
  }
}

json subspace_to_json(const Subspace& s) { return matrix_to_json(s.basis()); }

json module_to_json(const phimod::FilteredPhiModule& d) {
  json embeddings = json::array();
  for (const phimod::EmbeddingData& emb : d.embeddings()) {
    json steps = json::array();
    for (std::size_t k = 1; k < d.n(); ++k) {
      steps.push_back(subspace_to_json(emb.hodge_flag.step(k)));
    }
    embeddings.push_back(json{{"jumps", emb.jumps}, {"hodge_flag", steps}});
  }
  json eigenvalues = json::array();
  for (const exactlin::Rational& ev : d.eigenvalues()) {
    eigenvalues.push_back(rational_to_json(ev));
  }
  return json{{"n", d.n()},
              {"p", d.p()},
              {"e", d.e()},
              {"f", d.f()},
              {"eigenvalue_valuations", d.valuations()},
              {"eigenvalues", std::move(eigenvalues)},
              {"genericity_assumed", d.genericity_assumed()},
              {"embeddings", std::move(embeddings)}};
}

namespace {

exactlin::Flag flag_from_json(const json& j, std::size_t n,
                              const std::string& field) {
  if (!j.is_array() || j.size() != n - 1) {
    throw SchemaError(field + ": expected " + std::to_string(n - 1) +
                      " proper flag steps, deepest first");
  }
  std::vector<Subspace> steps;
  std::vector<std::vector<Rational>> spanning;
  for (std::size_t k = 0; k < n - 1; ++k) {
    const json& entry = j[k];
    const std::string entry_field = field + "[" + std::to_string(k) + "]";
    if (!entry.is_array() || entry.empty()) {
      throw SchemaError(entry_field + ": expected a vector or vector list");
    }
    if (entry[0].is_array()) {
      // Full spanning set for this step.
      spanning.clear();
      for (std::size_t v = 0; v < entry.size(); ++v) {
        spanning.push_back(vector_from_json(
            entry[v], entry_field + "[" + std::to_string(v) + "]"));
      }
    } else {
      // A single vector extending the previous step.
      spanning.push_back(vector_from_json(entry, entry_field));
    }
    for (const std::vector<Rational>& v : spanning) {
      if (v.size() != n) {
        throw SchemaError(entry_field + ": vectors must have length " +
                          std::to_string(n));
      }
    }
    Subspace step = Subspace::span_of_vectors(spanning, n);
    if (step.dim() != k + 1) {
      throw SchemaError(entry_field + ": step must have dimension " +
                        std::to_string(k + 1) + ", got " +
                        std::to_string(step.dim()));
    }
    steps.push_back(std::move(step));
  }
  steps.push_back(Subspace::full(n));
  try {
    return exactlin::Flag(std::move(steps));
  } catch (const Error& e) {
    throw SchemaError(field + ": " + e.what());
  }
}

}  // namespace

phimod::FilteredPhiModule module_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("module: expected a JSON object");
  if (j.contains("schema_version") &&
      !(j.at("schema_version").is_number_integer() &&
        j.at("schema_version").get<long>() == 1)) {
    throw SchemaError("module.schema_version: expected 1");
  }
  for (const char* key : {"n", "p", "e", "f", "embeddings"}) {
    if (!j.contains(key)) {
      throw SchemaError(std::string("module.") + key + ": missing field");
    }
  }
  const std::size_t n = count_from_json(j.at("n"), "module.n");
  if (n == 0) throw SchemaError("module.n: must be positive");
  const long p = long_from_json(j.at("p"), "module.p");
  const std::size_t e = count_from_json(j.at("e"), "module.e");
  const std::size_t f = count_from_json(j.at("f"), "module.f");

  const json& jemb = j.at("embeddings");
  if (!jemb.is_array()) {
    throw SchemaError("module.embeddings: expected an array");
  }
  std::vector<phimod::EmbeddingData> embeddings;
  for (std::size_t k = 0; k < jemb.size(); ++k) {
    const std::string field = "module.embeddings[" + std::to_string(k) + "]";
    const json& entry = jemb[k];
    if (!entry.is_object() || !entry.contains("jumps") ||
        !entry.contains("hodge_flag")) {
      throw SchemaError(field + ": expected {\"jumps\", \"hodge_flag\"}");
    }
    const json& jjumps = entry.at("jumps");
    if (!jjumps.is_array() || jjumps.size() != n) {
      throw SchemaError(field + ".jumps: expected " + std::to_string(n) +
                        " integers");
    }
    std::vector<long> jumps;
    for (std::size_t i = 0; i < n; ++i) {
      jumps.push_back(long_from_json(
          jjumps[i], field + ".jumps[" + std::to_string(i) + "]"));
    }
    embeddings.push_back(phimod::EmbeddingData{
        std::move(jumps),
        flag_from_json(entry.at("hodge_flag"), n, field + ".hodge_flag")});
  }

  try {
    if (j.contains("eigenvalues")) {
      return phimod::FilteredPhiModule::create(
          n, p, e, f,
          vector_from_json(j.at("eigenvalues"), "module.eigenvalues"),
          std::move(embeddings));
    }
    if (!j.contains("eigenvalue_valuations")) {
      throw SchemaError(
          "module: needs \"eigenvalues\" or \"eigenvalue_valuations\"");
    }
    const json& jvals = j.at("eigenvalue_valuations");
    if (!jvals.is_array() || jvals.size() != n) {
      throw SchemaError("module.eigenvalue_valuations: expected " +
                        std::to_string(n) + " integers");
    }
    std::vector<long> vals;
    for (std::size_t i = 0; i < n; ++i) {
      vals.push_back(long_from_json(
          jvals[i], "module.eigenvalue_valuations[" + std::to_string(i) + "]"));
    }
    return phimod::FilteredPhiModule::from_valuations(n, p, e, f, vals,
                                                      std::move(embeddings));
  } catch (const SchemaError&) {
    throw;
  } catch (const Error& e2) {
    throw SchemaError(std::string("module: ") + e2.what());
  }
}

json load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot read input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

namespace {

bool is_scalar(const json& j) {
  return j.is_primitive();
}

bool is_scalar_array(const json& j) {
  if (!j.is_array()) return false;
  for (const json& item : j) {
    if (!is_scalar(item)) return false;
  }
  return true;
}

std::string scalar_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

std::string inline_array(const json& a) {
  std::string out = "[";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i > 0) out += ", ";
    out += scalar_text(a[i]);
  }
  out += "]";
  return out;
}

void render(const json& j, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (is_scalar(value)) {
        out += pad + key + ": " + scalar_text(value) + "\n";
      } else if (is_scalar_array(value)) {
        out += pad + key + ": " + inline_array(value) + "\n";
      } else {
        out += pad + key + ":\n";
        render(value, indent + 2, out);
      }
    }
    return;
  }
  if (j.is_array()) {
    for (const json& item : j) {
      if (is_scalar(item)) {
        out += pad + "- " + scalar_text(item) + "\n";
      } else if (is_scalar_array(item)) {
        out += pad + "- " + inline_array(item) + "\n";
      } else {
        out += pad + "-\n";
        render(item, indent + 2, out);
      }
    }
    return;
  }
  out += pad + scalar_text(j) + "\n";
}

}  // namespace

std::string pretty_text(const json& j, int indent) {
  std::string out;
  render(j, indent, out);
  return out;
}

}  // namespace fernkit::jsonio
