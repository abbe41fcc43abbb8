#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "coxeter/errors.hpp"
#include "test_support.hpp"

using namespace testing;

TEST_CASE("word syntax") {
  CHECK(parse_word("s2 s3 s2", 4) == Word{2, 3, 2});
  CHECK(parse_word("s2.s3.s2", 4) == Word{2, 3, 2});
  CHECK(parse_word("  s0\ts1  ", 2) == Word{0, 1});
  CHECK(parse_word("e", 3).empty());
  CHECK(parse_word("", 3).empty());
  CHECK(parse_word("s1 e s1", 3) == Word{1, 1});
  CHECK(parse_word("s12", 13) == Word{12});
}

TEST_CASE("word errors carry positions") {
  auto position_of = [](const char* text, int rank) -> std::size_t {
    try {
      parse_word(text, rank);
    } catch (const ParseError& e) {
      return e.position();
    }
    FAIL("expected ParseError for " << text);
    return 0;
  };
  CHECK(position_of("s0 x1", 3) == 3);
  CHECK(position_of("s0 s", 3) == 4);
  CHECK(position_of("s0 s3", 3) == 3);
  CHECK(position_of("s0s1", 3) == 2);
  CHECK(position_of("s99999999999999999999", 3) == 0);
  CHECK(position_of("ee", 3) == 0);
}

TEST_CASE("mask syntax") {
  CHECK(parse_mask("s0,s1", 4) == ParabolicMask{0, 1});
  CHECK(parse_mask(" s0 , s2 ", 4) == ParabolicMask{0, 2});
  CHECK(parse_mask("~s3", 4) == ParabolicMask{0, 1, 2});
  CHECK(parse_mask("~s0,s1", 4) == ParabolicMask{2, 3});
  CHECK(parse_mask("", 4).empty());
  CHECK(parse_mask("~", 4) == ParabolicMask::full(4));
  CHECK_THROWS_AS(parse_mask("s0,", 4), ParseError);
  CHECK_THROWS_AS(parse_mask("s0 s1", 4), ParseError);
  CHECK_THROWS_AS(parse_mask("s4", 4), ParseError);
  CHECK_THROWS_AS(parse_mask(",s1", 4), ParseError);
}

TEST_CASE("formatting") {
  const CoxeterSystem b4 = make_system("B4");
  CHECK(format_element(b4.identity()) == "e");
  CHECK(format_element(el(b4, "s3.s2.s1.s0")) == "s3 s2 s1 s0");
  CHECK(format_set(DescentSet{0, 2, 3}) == "{s0,s2,s3}");
  CHECK(format_set(DescentSet{}) == "{}");
  CHECK(format_word(Word{}) == "e");
}
