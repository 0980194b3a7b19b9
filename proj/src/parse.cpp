#include "oncgl2/parse.hpp"

#include <cctype>
#include <climits>

namespace oncgl2 {

ParseError::ParseError(std::size_t column, const std::string& message)
    : std::runtime_error("column " + std::to_string(column) + ": " + message), column_(column) {}

namespace {

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  NCElement run() {
    skip_space();
    if (at_end()) fail("empty expression");
    NCElement x = expr();
    skip_space();
    if (!at_end()) fail("unexpected '" + std::string(1, peek()) + "'");
    return x;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_ + 1, msg); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool starts_factor() {
    skip_space();
    char c = peek();
    return c == '(' || c == 'a' || c == 'b' || c == 'c' || c == 'd' || c == 'D' ||
           std::isdigit(static_cast<unsigned char>(c));
  }

  NCElement expr() {
    NCElement x = term();
    for (;;) {
      skip_space();
      char c = peek();
      if (c != '+' && c != '-') return x;
      ++pos_;
      NCElement y = term();
      if (c == '+') x += y;
      else x -= y;
    }
  }

  NCElement term() {
    skip_space();
    bool negate = false;
    while (peek() == '-' || peek() == '+') {
      negate ^= peek() == '-';
      ++pos_;
      skip_space();
    }
    NCElement x = factor();
    for (;;) {
      skip_space();
      if (peek() == '*') {
        ++pos_;
        skip_space();
        if (!starts_factor()) fail(at_end() ? "expected a factor at end of input" : "expected a factor");
        x = x * factor();
      } else if (starts_factor()) {
        x = x * factor();
      } else {
        break;
      }
    }
    return negate ? -x : x;
  }

  unsigned long integer() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a digit");
    unsigned long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<unsigned long>(peek() - '0');
      if (v > UINT_MAX) fail("number too large");
      ++pos_;
    }
    return v;
  }

  NCElement factor() {
    NCElement base = primary();
    skip_space();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      base = power(base, static_cast<unsigned>(integer()));
    }
    return base;
  }

  NCElement primary() {
    skip_space();
    char c = peek();
    if (c == '(') {
      ++pos_;
      NCElement x = expr();
      skip_space();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return x;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      std::string num(text_.substr(start, pos_ - start));
      if (peek() == '/') {
        ++pos_;
        const std::size_t den_start = pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a denominator");
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        std::string den(text_.substr(den_start, pos_ - den_start));
        if (den.find_first_not_of('0') == std::string::npos) throw ParseError(den_start + 1, "zero denominator");
        num += "/" + den;
      }
      return NCElement(parse_rational(num));
    }
    switch (c) {
      case 'a':
        ++pos_;
        return NCElement::generator(Letter::A);
      case 'b':
        ++pos_;
        return NCElement::generator(Letter::B);
      case 'c':
        ++pos_;
        return NCElement::generator(Letter::C);
      case 'd':
        ++pos_;
        return NCElement::generator(Letter::D);
      case 'D':
        ++pos_;
        if (peek() == 'i') {
          ++pos_;
          return NCElement::generator(Letter::DeltaInv);
        }
        return NCElement::generator(Letter::Delta);
      default:
        break;
    }
    if (at_end()) fail("expected a factor at end of input");
    fail("expected a factor");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

bool parse_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  std::size_t k = 0;
  bool neg = false;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    k = 1;
  }
  if (k == s.size()) return false;
  long v = 0;
  for (; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    v = v * 10 + (s[k] - '0');
    if (v > INT_MAX / 4) return false;
  }
  out = static_cast<int>(neg ? -v : v);
  return true;
}

// Splits "name^exp"; missing exponent means 1.
void split_power(std::string_view piece, std::size_t column, std::string_view& name, int& exponent) {
  auto caret = piece.find('^');
  name = piece.substr(0, caret);
  exponent = 1;
  if (caret != std::string_view::npos && !parse_int(piece.substr(caret + 1), exponent))
    throw ParseError(column + caret + 1, "malformed exponent");
}

}  // namespace

NCElement parse_expression(std::string_view text) { return ExpressionParser(text).run(); }

LambdaWord parse_lambda(std::string_view text) {
  if (text == "1") return {};
  if (text.empty()) throw ParseError(1, "empty weight word");
  std::vector<LambdaWord::Block> blocks;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t dot = text.find('.', start);
    if (dot == std::string_view::npos) dot = text.size();
    std::string_view piece = text.substr(start, dot - start);
    if (piece.empty()) throw ParseError(start + 1, "empty block");
    std::string_view name;
    int e = 1;
    split_power(piece, start, name, e);
    if (name == "d") {
      if (e < 0) throw ParseError(start + 1, "negative power of d");
      blocks.push_back({LambdaWord::Kind::D, e});
    } else if (name == "D") {
      blocks.push_back({LambdaWord::Kind::Delta, e});
    } else if (name == "Di") {
      blocks.push_back({LambdaWord::Kind::Delta, -e});
    } else if (name == "1" && piece.size() == 1) {
      // explicit unit factor
    } else {
      throw ParseError(start + 1, "unknown block '" + std::string(piece) + "'");
    }
    start = dot + 1;
  }
  return LambdaWord::from_blocks(blocks);
}

Weight parse_weight(std::string_view text) {
  if (text == "1") return {};
  if (text.empty()) throw ParseError(1, "empty weight");
  Weight w;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t star = text.find('*', start);
    if (star == std::string_view::npos) star = text.size();
    std::string_view piece = text.substr(start, star - start);
    std::string_view name;
    int e = 1;
    split_power(piece, start, name, e);
    if (name == "a") w.i += e;
    else if (name == "d") w.j += e;
    else throw ParseError(start + 1, "expected a or d");
    start = star + 1;
  }
  return w;
}

std::vector<RepSymbol> parse_tensor_word(std::string_view text) {
  std::vector<RepSymbol> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    char c = text[pos];
    if (c == ' ' || c == '*' || c == '.') {
      ++pos;
    } else if (c == 'V') {
      out.push_back(RepSymbol::V);
      ++pos;
    } else if (c == 'R') {
      if (pos + 1 < text.size() && text[pos + 1] == 'i') {
        out.push_back(RepSymbol::Rinv);
        pos += 2;
      } else {
        out.push_back(RepSymbol::R);
        ++pos;
      }
    } else {
      throw ParseError(pos + 1, "expected V, R or Ri");
    }
  }
  return out;
}

}  // namespace oncgl2
