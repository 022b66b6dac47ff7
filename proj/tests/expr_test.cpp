#include <doctest.h>

#include <random>

#include "cubicsurf/catalog.hpp"
#include "cubicsurf/expr.hpp"

using namespace cubicsurf;

TEST_CASE("parsing the basics") {
  CHECK(parse_class("3l - b1 - b2 - b3 - b4 - b5 - b6") == hyperplane_class());
  CHECK(parse_class("L[1,2]") == DivisorClass(1, -1, -1, 0, 0, 0, 0));
  CHECK(parse_class("H - T[1,2,3]") == DivisorClass(1, 0, 0, 0, -1, -1, -1));
  CHECK(parse_class("K") == canonical_class());
  CHECK(parse_class("2*H - 3*b4") == 2 * hyperplane_class() - 3 * b(4));
  CHECK(parse_class("2H") == 2 * hyperplane_class());
  CHECK(parse_class("[1,-1,0,0,2,0,-3]") == DivisorClass(1, -1, 0, 0, 2, 0, -3));
  CHECK(parse_class("-l") == -ell());
  CHECK(parse_class("0l").is_zero());
}

TEST_CASE("named atoms") {
  CHECK(parse_class("T[]") == ell());
  CHECK(parse_class("T[0]") == ell());
  CHECK(parse_class("T^[]") == DivisorClass(5, -2, -2, -2, -2, -2, -2));
  CHECK(parse_class("T^[0]") == DivisorClass(5, -2, -2, -2, -2, -2, -2));
  CHECK(parse_class("T[1|2]") == DivisorClass(3, -2, 0, -1, -1, -1, -1));
  CHECK(parse_class("T^[1,2,3]") == DivisorClass(4, -1, -1, -1, -2, -2, -2));
  CHECK(parse_class("L^[1]") == DivisorClass(2, 0, -1, -1, -1, -1, -1));
  CHECK(parse_class("C^[1,2]") == DivisorClass(2, 0, 0, -1, -1, -1, -1));
  CHECK(parse_class("C[3]") == ell() - b(3));
  // unsorted index sets canonicalize
  CHECK(parse_class("T[3,1,2]") == parse_class("T[1,2,3]"));
}

TEST_CASE("rejections carry a position") {
  auto expect_error = [](const std::string& text) {
    try {
      parse_class(text);
      FAIL_CHECK("no error for ", text);
      return std::string::npos;
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("position") != std::string::npos);
      return e.position;
    }
  };
  CHECK(expect_error("b7") <= 2);
  expect_error("b0");
  expect_error("L[1,1]");
  expect_error("L[7]");
  expect_error("T[1,2]");
  expect_error("T[1|1]");
  expect_error("C[1,2]");
  expect_error("H + ");
  expect_error("");
  expect_error("[1,2,3]");
  expect_error("H Q");
  expect_error("2*");
}

TEST_CASE("print/parse round trip") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> coeff(-9, 9);
  for (int trial = 0; trial < 500; ++trial) {
    DivisorClass d;
    for (std::size_t i = 0; i < 7; ++i) d.c[i] = coeff(rng);
    CHECK(parse_class(print_class(d)) == d);
  }
  CHECK(parse_class(print_class(DivisorClass())) == DivisorClass());
}

TEST_CASE("ClassExpression keeps source and canonical forms in sync") {
  const auto e = ClassExpression::parse("2*H - T[]");
  CHECK(e.source == "2*H - T[]");
  CHECK(e.value == 2 * hyperplane_class() - ell());
  CHECK(parse_class(e.canonical()) == e.value);
  CHECK_THROWS_AS(ClassExpression::parse("b9"), ParseError);
}

TEST_CASE("named labels round trip through their CLI spelling") {
  for (const auto& cls : lines()) {
    const auto lab = label_of(cls);
    REQUIRE(lab.has_value());
    CHECK(parse_class(lab->str()) == cls);
  }
  for (const auto& cls : cubics()) {
    const auto lab = label_of(cls);
    REQUIRE(lab.has_value());
    CHECK(parse_class(lab->str()) == cls);
  }
}
