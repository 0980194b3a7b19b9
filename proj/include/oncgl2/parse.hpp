#pragma once

// Text syntax.
//   expressions:  a b c d D Di, products by '*' or juxtaposition, + -, p/q, ^n, ( )
//   weight words: dot-separated blocks such as d.Di.d^2, D^3, 1
//   weights:      a^i*d^j, with factors of exponent 0 or 1 abbreviated
//   tensor words: V, R, Ri separated by spaces, '*' or '.'

#include "oncgl2/lambda.hpp"
#include "oncgl2/ncalg.hpp"
#include "oncgl2/standard.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace oncgl2 {

class ParseError : public std::runtime_error {
 public:
  /// column is 1-based.
  ParseError(std::size_t column, const std::string& message);
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

NCElement parse_expression(std::string_view text);
LambdaWord parse_lambda(std::string_view text);
Weight parse_weight(std::string_view text);
std::vector<RepSymbol> parse_tensor_word(std::string_view text);

}  // namespace oncgl2
