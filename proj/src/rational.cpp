#include "leibniz/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace leibniz {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
  }
  if (std::all_of(den.begin(), den.end(), [](char c) { return c == '0'; })) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  Rational q;
  q.get_num().set_str(std::string(num), 10);
  q.get_den().set_str(std::string(den), 10);
  q.canonicalize();
  if (!text.empty() && text.front() == '-') q = -q;
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
}

}  // namespace leibniz
