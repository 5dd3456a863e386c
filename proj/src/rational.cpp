#include "trisys/rational.hpp"

#include <cctype>

namespace trisys {

std::optional<Rational> parse_rational(std::string_view text) {
  size_t pos = 0;
  const size_t n = text.size();
  if (pos < n && text[pos] == '-') ++pos;
  size_t num_begin = pos;
  while (pos < n && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == num_begin) return std::nullopt;
  if (pos < n) {
    if (text[pos] != '/') return std::nullopt;
    ++pos;
    size_t den_begin = pos;
    while (pos < n && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == den_begin || pos != n) return std::nullopt;
    mpz_class den(std::string(text.substr(den_begin)), 10);
    if (den == 0) return std::nullopt;
    mpz_class num(std::string(text.substr(0, den_begin - 1)), 10);
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  return Rational(mpz_class(std::string(text), 10));
}

}  // namespace trisys
