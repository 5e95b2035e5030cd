#include "realclass/rational.hpp"

#include <stdexcept>
#include <string>

namespace realclass {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(long num, long den) {
  return make_rational(Integer(num), Integer(den));
}

namespace {

Integer parse_integer(std::string_view digits) {
  if (digits.empty()) throw std::invalid_argument("empty integer literal");
  for (char ch : digits) {
    if (ch < '0' || ch > '9') {
      throw std::invalid_argument("bad integer literal '" +
                                  std::string(digits) + "'");
    }
  }
  return Integer(std::string(digits), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  Rational q;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    q = make_rational(parse_integer(text.substr(0, slash)),
                      parse_integer(text.substr(slash + 1)));
  } else {
    q = Rational(parse_integer(text));
  }
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace realclass
