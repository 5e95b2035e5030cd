#include "realclass/parser.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

namespace realclass {

namespace {

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}
bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars)
      : text_(text), vars_(vars) {}

  Poly parse() {
    Poly p = expr();
    skip_space();
    if (pos_ != text_.size())
      throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return p;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  std::optional<char> peek() {
    skip_space();
    if (pos_ >= text_.size()) return std::nullopt;
    return text_[pos_];
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = unary();
    while (accept('*')) acc = acc * unary();
    // Juxtaposition such as "2x" or "x y" is not multiplication.
    if (auto c = peek(); c && (is_ident_start(*c) || is_digit(*c) || *c == '('))
      throw ParseError("implicit multiplication is not allowed", pos_);
    return acc;
  }

  Poly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = primary();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t start = pos_;
    if (pos_ >= text_.size() || !is_digit(text_[pos_]))
      throw ParseError("exponent must be a non-negative integer literal", pos_);
    std::string digits = read_digits();
    if (digits.size() > 3 || std::stoi(digits) > kMaxExponent)
      throw ParseError("exponent exceeds " + std::to_string(kMaxExponent), start);
    return base.pow(std::stoi(digits));
  }

  Poly primary() {
    auto c = peek();
    if (!c) throw ParseError("unexpected end of input", pos_);
    if (*c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (is_digit(*c)) return Poly::constant(vars_, number());
    if (is_ident_start(*c)) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) throw ParseError("unknown variable '" + name + "'", start);
      return Poly::variable(vars_, static_cast<std::size_t>(it - vars_.begin()));
    }
    throw ParseError(std::string("unexpected '") + *c + "'", pos_);
  }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Rational number() {
    const std::size_t start = pos_;
    const std::string num = read_digits();
    if (accept('/')) {
      skip_space();
      if (pos_ >= text_.size() || !is_digit(text_[pos_]))
        throw ParseError("expected integer denominator", pos_);
      const std::string den = read_digits();
      if (Integer(den) == 0) throw ParseError("zero denominator", start);
      return make_rational(Integer(num), Integer(den));
    }
    return Rational(Integer(num));
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const std::vector<std::string>& variables) {
  return Parser(text, variables).parse();
}

std::vector<std::string> parse_variable_list(std::string_view text) {
  std::vector<std::string> vars;
  std::size_t pos = 0;
  for (;;) {
    const std::size_t comma = text.find(',', pos);
    std::string_view item = text.substr(pos, comma == std::string_view::npos
                                                  ? std::string_view::npos
                                                  : comma - pos);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front())))
      item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back())))
      item.remove_suffix(1);
    if (item.empty() || !is_ident_start(item.front()) ||
        !std::all_of(item.begin(), item.end(), is_ident_char))
      throw ParseError("invalid variable name '" + std::string(item) + "'", pos);
    if (std::find(vars.begin(), vars.end(), item) != vars.end())
      throw ParseError("duplicate variable '" + std::string(item) + "'", pos);
    vars.emplace_back(item);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return vars;
}

}  // namespace realclass
