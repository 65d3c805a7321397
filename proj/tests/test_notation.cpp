#include "doctest.h"

#include "dicot/enumerate.hpp"
#include "dicot/errors.hpp"
#include "dicot/notation.hpp"
#include "support.hpp"

using namespace dicot;

TEST_CASE("parse") {
  Store s;
  const FormId zero = s.zero();
  const FormId star = s.star();
  CHECK(parse(s, "0") == zero);
  CHECK(parse(s, "{|}") == zero);
  CHECK(parse(s, "*") == star);
  CHECK(parse(s, "*1") == star);
  CHECK(parse(s, "{0|0}") == star);
  CHECK(parse(s, "*3") == s.nimber(3));
  CHECK(parse(s, "{0|*2}") == s.intern({zero}, {s.nimber(2)}));
  CHECK(parse(s, "*+*") == s.intern({star}, {star}));
  CHECK(parse(s, " { 0 , * | 0 } ") == s.intern({zero, star}, {zero}));
  CHECK(parse(s, "-{0|*2}") == parse(s, "{*2|0}"));
  CHECK(parse(s, "{*+*|0}") == s.intern({s.intern({star}, {star})}, {zero}));
  CHECK(parse(s, "*2+-*2") == s.sum(s.nimber(2), s.nimber(2)));
  CHECK(parse(s, "*31") == s.nimber(31));
}

TEST_CASE("parse errors carry positions") {
  Store s;
  const auto position = [&](const char* text) -> std::size_t {
    try {
      parse(s, text);
    } catch (const SyntaxError& e) {
      return e.position();
    }
    FAIL("no syntax error for " << text);
    return 0;
  };
  CHECK(position("") == 0);
  CHECK(position("*0") == 1);
  CHECK(position("*32") == 1);
  CHECK(position("{0,*}") == 4);
  CHECK(position("{0|0") == 4);
  CHECK(position("0 0") == 2);
  CHECK(position("--*") == 1);
  CHECK(position("{0|0}+") == 6);
  CHECK(position("x") == 0);
  CHECK(position("* 2") == 2);
  CHECK_THROWS_AS(parse(s, "{0|}"), DicotViolation);
  CHECK_THROWS_AS(parse(s, "{|*}"), DicotViolation);
}

TEST_CASE("print") {
  Store s;
  CHECK(print(s, s.zero()) == "0");
  CHECK(print(s, s.star()) == "*");
  CHECK(print(s, parse(s, "{0,*|0,*}")) == "*2");
  CHECK(print(s, parse(s, "{0|{0,*|0,*}}")) == "{0|*2}");
  CHECK(print(s, parse(s, "*+*")) == "{*|*}");
  CHECK(print(s, parse(s, "{*,0|0}")) == "{0,*|0}");
  // Past the shorthand limit nimbers are written out.
  const std::string big = print(s, s.nimber(32));
  CHECK(big.front() == '{');
  CHECK(parse(s, big) == s.nimber(32));
}

TEST_CASE("print and parse round-trip every form of birthday <= 3 in a sample") {
  Store s;
  for (FormId g : enumerate_dicots(s, 2)) CHECK(parse(s, print(s, g)) == g);
  for (FormId g : enumerate_dicots(s, EnumerateOptions{.max_birthday = 3, .limit = 2000})) {
    CHECK(parse(s, print(s, g)) == g);
  }
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const FormId g = testing::random_dicot(s, rng, 4);
    CHECK(parse(s, print(s, g)) == g);
  }
}
