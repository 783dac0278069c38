#include "fernkit/rational.hpp"

#include <cctype>

#include "fernkit/errors.hpp"

namespace fernkit::exactlin {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw DomainError("rational with zero denominator");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) {
    throw DomainError("empty rational literal");
  }
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '/' && c != '-' &&
        c != '+') {
      throw DomainError("bad rational literal: '" + text + "'");
    }
  }
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return make_rational(Integer(text), 1);
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (num.empty() || den.empty() || den.find('/') != std::string::npos) {
      throw DomainError("bad rational literal: '" + text + "'");
    }
    return make_rational(Integer(num), Integer(den));
  } catch (const std::invalid_argument&) {
    throw DomainError("bad rational literal: '" + text + "'");
  }
}

std::string to_string(const Rational& x) {
  return x.get_str();  // "a/b", or "a" when b = 1
}

PadicValuation vp(const Rational& x, const Integer& p) {
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0) {
    throw DomainError("vp requires a prime, got " + p.get_str());
  }
  if (x == 0) {
    return PadicValuation::infinity();
  }
  Integer scratch;
  const long in_num = static_cast<long>(
      mpz_remove(scratch.get_mpz_t(), x.get_num().get_mpz_t(), p.get_mpz_t()));
  const long in_den = static_cast<long>(
      mpz_remove(scratch.get_mpz_t(), x.get_den().get_mpz_t(), p.get_mpz_t()));
  return PadicValuation::finite(in_num - in_den);
}

}  // namespace fernkit::exactlin
