#include "oncgl2/checks.hpp"
#include "oncgl2/parse.hpp"

#include <doctest.h>

using namespace oncgl2;

TEST_CASE("expression grammar") {
  CHECK(parse_expression("d*a - b*c") == NCElement::generator(Letter::Delta));
  CHECK(parse_expression("d a - b c") == parse_expression("d*a - b*c"));
  CHECK(parse_expression("(a + b)^2") == parse_expression("a*a + a*b + b*a + b*b"));
  CHECK(parse_expression("-3/4 a") == parse_expression("a") * Rational(-3, 4));
  CHECK(parse_expression("D Di") == NCElement(1));
  CHECK(parse_expression("2 * 3") == NCElement(6));
}

TEST_CASE("syntax errors carry a column") {
  auto column = [](const char* text) -> std::size_t {
    try {
      parse_expression(text);
    } catch (const ParseError& e) {
      return e.column();
    }
    return 0;
  };
  CHECK(column("d**a") == 3);
  CHECK(column("a + ") == 5);
  CHECK(column("(a") == 3);
  CHECK(column("a x") == 3);
  CHECK(column("1/0") == 3);
}

TEST_CASE("round trips") {
  for (const char* text : {"a*Di*d - 1", "D^2*b - 1/3*c", "0", "1", "Di^3*a*b*c*d"}) {
    const NCElement x = parse_expression(text);
    CHECK(parse_expression(x.to_string()) == x);
    CHECK(parse_expression(x.to_string(PrintStyle::Pretty)) == x);
  }
  for (const auto& l : enumerate_lambda(4)) CHECK(parse_lambda(l.to_string()) == l);
}

TEST_CASE("weight words and weights") {
  CHECK(parse_lambda("d.Di.d^2").blocks().size() == 3);
  CHECK(parse_lambda("1").empty());
  CHECK_THROWS_AS(parse_lambda("d.."), ParseError);
  CHECK_THROWS_AS(parse_lambda("x"), ParseError);
  CHECK_THROWS_AS(parse_lambda("d^-1"), ParseError);
  CHECK(parse_weight("a^-1*d^2") == Weight{-1, 2});
  CHECK(parse_weight("d") == Weight{0, 1});
  CHECK(parse_weight("1") == Weight{});
  CHECK_THROWS_AS(parse_weight("b"), ParseError);
  CHECK(parse_tensor_word("V Ri V") == std::vector<RepSymbol>{RepSymbol::V, RepSymbol::Rinv, RepSymbol::V});
  CHECK_THROWS_AS(parse_tensor_word("V Q"), ParseError);
}

TEST_CASE("check suites at small bounds") {
  CHECK(check_suite_names().size() == 10);
  for (const auto& name : check_suite_names()) {
    const CheckResult r = run_check(name, 2);
    CHECK_MESSAGE(r.pass, name << ": " << (r.failures.empty() ? "" : r.failures.front()));
    CHECK(r.bound == 2);
    CHECK(r.cases > 0);
  }
  CHECK_THROWS_AS(run_check("nonsense"), std::invalid_argument);
  CHECK(default_bound("hopf") == 3);
}
