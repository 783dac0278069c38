#include "fernkit/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "fernkit/errors.hpp"

namespace fernkit::weyl {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const std::size_t n = images_.size();
  if (n == 0) {
    throw DomainError("permutation on an empty set");
  }
  std::vector<bool> seen(n, false);
  for (int v : images_) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[v - 1]) {
      throw DomainError("one-line notation is not a bijection of {1..n}");
    }
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> im(n);
  for (std::size_t i = 0; i < n; ++i) {
    im[i] = static_cast<int>(i + 1);
  }
  return Permutation(std::move(im));
}

Permutation Permutation::longest(std::size_t n) {
  if (n == 0) {
    throw DomainError("longest element needs n >= 1");
  }
  std::vector<int> im(n);
  for (std::size_t i = 0; i < n; ++i) {
    im[i] = static_cast<int>(n - i);
  }
  return Permutation(std::move(im));
}

Permutation Permutation::simple(std::size_t n, int i) {
  if (i < 1 || static_cast<std::size_t>(i) >= n) {
    throw DomainError("simple reflection index out of range");
  }
  auto im = identity(n).images();
  std::swap(im[i - 1], im[i]);
  return Permutation(std::move(im));
}

Permutation Permutation::descending_cycle(std::size_t n, int i, int j) {
  if (j < 1 || i < j || static_cast<std::size_t>(i) > n) {
    throw DomainError("descending cycle needs 1 <= j <= i <= n");
  }
  auto im = identity(n).images();
  im[j - 1] = i;  // j -> i
  for (int m = j + 1; m <= i; ++m) {
    im[m - 1] = m - 1;  // m -> m-1
  }
  return Permutation(std::move(im));
}

Permutation Permutation::from_cycles(const std::string& text, std::size_t n) {
  std::string trimmed;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c)) || !trimmed.empty()) {
      trimmed.push_back(c);
    }
  }
  while (!trimmed.empty() &&
         std::isspace(static_cast<unsigned char>(trimmed.back()))) {
    trimmed.pop_back();
  }
  auto im = identity(n).images();
  if (trimmed.empty() || trimmed == "id" || trimmed == "()") {
    return Permutation(std::move(im));
  }
  std::size_t pos = 0;
  std::vector<bool> moved(n, false);
  while (pos < trimmed.size()) {
    if (trimmed[pos] != '(') {
      throw DomainError("cycle notation: expected '(' in '" + text + "'");
    }
    const std::size_t close = trimmed.find(')', pos);
    if (close == std::string::npos) {
      throw DomainError("cycle notation: unbalanced '(' in '" + text + "'");
    }
    std::string body = trimmed.substr(pos + 1, close - pos - 1);
    for (char& c : body) {
      if (c == ',') c = ' ';
    }
    std::istringstream in(body);
    std::vector<int> cycle;
    int v = 0;
    while (in >> v) {
      if (v < 1 || static_cast<std::size_t>(v) > n) {
        throw DomainError("cycle notation: entry out of range in '" + text +
                          "'");
      }
      if (moved[v - 1]) {
        throw DomainError("cycle notation: repeated entry in '" + text + "'");
      }
      moved[v - 1] = true;
      cycle.push_back(v);
    }
    if (!in.eof()) {
      throw DomainError("cycle notation: bad entry in '" + text + "'");
    }
    for (std::size_t k = 0; k + 1 < cycle.size(); ++k) {
      im[cycle[k] - 1] = cycle[k + 1];
    }
    if (cycle.size() > 1) {
      im[cycle.back() - 1] = cycle.front();
    }
    pos = close + 1;
    while (pos < trimmed.size() &&
           std::isspace(static_cast<unsigned char>(trimmed[pos]))) {
      ++pos;
    }
  }
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> im(n());
  for (std::size_t i = 0; i < n(); ++i) {
    im[images_[i] - 1] = static_cast<int>(i + 1);
  }
  return Permutation(std::move(im));
}

Permutation operator*(const Permutation& u, const Permutation& w) {
  if (u.n() != w.n()) {
    throw DomainError("composing permutations of different degrees");
  }
  std::vector<int> im(u.n());
  for (std::size_t i = 0; i < u.n(); ++i) {
    im[i] = u(w(static_cast<int>(i + 1)));
  }
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < n(); ++i) {
    if (images_[i] != static_cast<int>(i + 1)) return false;
  }
  return true;
}

exactlin::RMatrix Permutation::matrix() const {
  exactlin::RMatrix p(n(), n());
  for (std::size_t j = 0; j < n(); ++j) {
    p.at(images_[j] - 1, j) = 1;
  }
  return p;
}

std::string Permutation::cycle_string() const {
  std::vector<bool> seen(n(), false);
  std::string out;
  for (std::size_t start = 0; start < n(); ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    std::size_t cur = start;
    while (!seen[cur]) {
      seen[cur] = true;
      cycle.push_back(static_cast<int>(cur + 1));
      cur = static_cast<std::size_t>(images_[cur] - 1);
    }
    if (cycle.size() < 2) continue;
    out.push_back('(');
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k > 0) out.push_back(' ');
      out += std::to_string(cycle[k]);
    }
    out.push_back(')');
  }
  return out.empty() ? "id" : out;
}

bool lexicographic_less(const Permutation& a, const Permutation& b) {
  return a.images() < b.images();
}

std::size_t length(const Permutation& w) {
  std::size_t inversions = 0;
  const auto& im = w.images();
  for (std::size_t i = 0; i < im.size(); ++i) {
    for (std::size_t j = i + 1; j < im.size(); ++j) {
      if (im[i] > im[j]) ++inversions;
    }
  }
  return inversions;
}

std::vector<Permutation> full_cycles(std::size_t n) {
  if (n == 0) {
    throw DomainError("full_cycles needs n >= 1");
  }
  std::vector<Permutation> out;
  out.push_back(Permutation::identity(n));
  for (std::size_t len = 1; len < n; ++len) {
    for (std::size_t j = 1; j + len <= n; ++j) {
      out.push_back(Permutation::descending_cycle(
          n, static_cast<int>(j + len), static_cast<int>(j)));
    }
  }
  return out;
}

bool bruhat_leq(const Permutation& u, const Permutation& w) {
  if (u.n() != w.n()) {
    throw DomainError("Bruhat comparison of different degrees");
  }
  const std::size_t n = u.n();
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      std::size_t cu = 0;
      std::size_t cw = 0;
      for (std::size_t a = 1; a <= i; ++a) {
        if (u(static_cast<int>(a)) <= static_cast<int>(j)) ++cu;
        if (w(static_cast<int>(a)) <= static_cast<int>(j)) ++cw;
      }
      if (cu < cw) return false;
    }
  }
  return true;
}

std::vector<int> reduced_word(const Permutation& w) {
  // Right-multiplying by the first descent s_i sorts the one-line notation;
  // reversing the removal order gives a reduced word for w.
  std::vector<int> im = w.images();
  std::vector<int> removed;
  bool sorted = false;
  while (!sorted) {
    sorted = true;
    for (std::size_t i = 0; i + 1 < im.size(); ++i) {
      if (im[i] > im[i + 1]) {
        std::swap(im[i], im[i + 1]);
        removed.push_back(static_cast<int>(i + 1));
        sorted = false;
        break;
      }
    }
  }
  std::reverse(removed.begin(), removed.end());
  return removed;
}

std::vector<int> support(const Permutation& w) {
  const auto word = reduced_word(w);
  std::set<int> letters(word.begin(), word.end());
  return std::vector<int>(letters.begin(), letters.end());
}

bool is_distinct_simple_product(const Permutation& w) {
  // A product of pairwise-distinct simple reflections is reduced, so w is
  // such a product iff its length equals its support size.
  return length(w) == support(w).size();
}

std::size_t cycle_count(const Permutation& w) {
  std::vector<bool> seen(w.n(), false);
  std::size_t cycles = 0;
  for (std::size_t start = 0; start < w.n(); ++start) {
    if (seen[start]) continue;
    ++cycles;
    std::size_t cur = start;
    while (!seen[cur]) {
      seen[cur] = true;
      cur = static_cast<std::size_t>(w.images()[cur] - 1);
    }
  }
  return cycles;
}

Permutation relpos(const exactlin::Flag& f, const exactlin::Flag& g) {
  if (f.n() != g.n()) {
    throw DomainError("relpos of flags with different ambients");
  }
  const std::size_t n = f.n();
  // d[i][j] = dim(F_i ∩ G_j), with d[0][*] = d[*][0] = 0.
  std::vector<std::vector<long>> d(n + 1, std::vector<long>(n + 1, 0));
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      d[i][j] = static_cast<long>(intersect(f.step(i), g.step(j)).dim());
    }
  }
  std::vector<int> im(n, 0);
  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t i = 1; i <= n; ++i) {
      if (d[i][j] - d[i - 1][j] - d[i][j - 1] + d[i - 1][j - 1] == 1) {
        im[j - 1] = static_cast<int>(i);
      }
    }
  }
  return Permutation(std::move(im));  // ctor validates the bijection
}

}  // namespace fernkit::weyl
