#include "doctest.h"

#include "dicot/engine.hpp"
#include "dicot/enumerate.hpp"
#include "dicot/notation.hpp"
#include "support.hpp"

using namespace dicot;

TEST_CASE("geq") {
  Engine e;
  Store& s = e.store;
  const FormId zero = s.zero();
  const FormId star_star = parse(s, "*+*");
  for (FormId g : enumerate_dicots(s, 2)) CHECK(e.order.geq(g, g));
  CHECK(e.order.geq(star_star, zero));
  CHECK(e.order.geq(zero, star_star));

  const FormId g_minus_g = parse(s, "{0|*2}+-{0|*2}");
  CHECK_FALSE(e.order.geq(zero, g_minus_g));
}

TEST_CASE("zero tests") {
  Engine e;
  Store& s = e.store;
  CHECK(e.order.geq_zero(s.zero()));
  CHECK(e.order.geq_zero(parse(s, "*+*")));
  CHECK_FALSE(e.order.geq_zero(s.star()));
  CHECK(e.order.eq_zero(parse(s, "*+*")));
  CHECK_FALSE(e.order.eq_zero(parse(s, "*2+*2")));
  CHECK_FALSE(e.order.eq_zero(parse(s, "{0|*2}+-{0|*2}")));
  CHECK(e.order.eq_zero(s.zero()));
}

TEST_CASE("compare") {
  Engine e;
  Store& s = e.store;
  const FormId g = parse(s, "{0|*2}");
  CHECK(e.order.compare(g, g) == OrderResult::EQ);
  CHECK(e.order.compare(parse(s, "*+*"), s.zero()) == OrderResult::EQ);
  CHECK(e.order.compare(s.star(), s.zero()) == OrderResult::CONFUSED);
  CHECK(e.order.compare(parse(s, "{0,*|*}"), s.zero()) == OrderResult::GT);
  CHECK(e.order.compare(parse(s, "{*|0,*}"), s.zero()) == OrderResult::LT);
  // Outcome L, yet Right's move to 0 has no Left answer.
  CHECK(e.order.compare(parse(s, "{*|0}"), s.zero()) == OrderResult::CONFUSED);

  CHECK(to_string(OrderResult::GT) == ">");
  CHECK(to_string(OrderResult::LT) == "<");
  CHECK(to_string(OrderResult::EQ) == "=");
  CHECK(to_string(OrderResult::CONFUSED) == "||");
}

TEST_CASE("compare is antisymmetric under conjugation") {
  Engine e;
  Store& s = e.store;
  const auto small = enumerate_dicots(s, 2);
  for (FormId g : small) {
    for (FormId h : small) {
      CHECK(e.order.geq(g, h) == e.order.geq(s.conjugate(h), s.conjugate(g)));
      const OrderResult r = e.order.compare(g, h);
      const OrderResult flipped = e.order.compare(h, g);
      if (r == OrderResult::GT) CHECK(flipped == OrderResult::LT);
      if (r == OrderResult::EQ || r == OrderResult::CONFUSED) CHECK(flipped == r);
    }
  }
}

// geq modulo dicots implies the outcome inequality in every dicot context;
// the naive tree solver checks this against contexts of birthday <= 2.
TEST_CASE("geq is sound against tree minimax in small contexts") {
  Engine e;
  Store& s = e.store;
  const auto small = enumerate_dicots(s, 2);
  const auto rank = [](char a, char b) {
    return a == b || a == 'L' || b == 'R';
  };
  std::size_t applicable = 0;
  for (FormId g : small) {
    for (FormId h : small) {
      if (!e.order.geq(g, h)) continue;
      ++applicable;
      for (FormId x : small) {
        const char og = testing::tree_outcome(testing::tree_sum(testing::to_tree(s, g), testing::to_tree(s, x)));
        const char oh = testing::tree_outcome(testing::tree_sum(testing::to_tree(s, h), testing::to_tree(s, x)));
        CHECK(rank(og, oh));
      }
    }
  }
  CHECK(applicable > small.size());
}
