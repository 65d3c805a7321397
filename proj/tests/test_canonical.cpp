#include <set>

#include "doctest.h"

#include "dicot/engine.hpp"
#include "dicot/enumerate.hpp"
#include "dicot/notation.hpp"
#include "support.hpp"

using namespace dicot;

TEST_CASE("reduce_once") {
  Engine e;
  Store& s = e.store;
  CHECK_FALSE(e.canon.reduce_once(s.star()).has_value());
  CHECK_FALSE(e.canon.reduce_once(s.zero()).has_value());

  const auto step = e.canon.reduce_once(parse(s, "{*|*}"));
  REQUIRE(step.has_value());
  CHECK(step->first == s.zero());
  CHECK(step->second.kind == ReductionKind::Substitution);

  // *2 reverses through its Right option * and is replaced by 0, which is
  // already there.
  const FormId g = parse(s, "{0,*,*2|0}");
  const auto first = e.canon.reduce_once(g);
  REQUIRE(first.has_value());
  CHECK(first->second.at == g);
  CHECK(first->second.kind == ReductionKind::NonAtomicReverseL);
  CHECK(s.right(first->first).size() == 1);
  CHECK(s.left(first->first).size() < s.left(g).size());
}

TEST_CASE("each rule") {
  Engine e;
  Store& s = e.store;
  const auto kind_of = [&](const char* text) {
    const auto r = e.canon.reduce_once(parse(s, text));
    REQUIRE(r.has_value());
    return r->second.kind;
  };
  // {*|0,*} < 0 < {0,*|*}.
  CHECK(kind_of("{0,{*|0,*}|0}") == ReductionKind::DominationL);
  CHECK(kind_of("{0|0,{0,*|*}}") == ReductionKind::DominationR);
  CHECK(kind_of("{*|*}") == ReductionKind::Substitution);

  // Atomic reversal keeps the only winning Left move as *.
  const auto star_l = e.canon.reduce_once(parse(s, "{{0,*|0}|*}"));
  REQUIRE(star_l.has_value());
  CHECK(star_l->second.kind == ReductionKind::AtomicReverseStarL);
  CHECK(star_l->first == parse(s, "{*|*}"));
  CHECK(e.order.eq(star_l->first, parse(s, "{{0,*|0}|*}")));
}

TEST_CASE("canonical") {
  Engine e;
  Store& s = e.store;
  CHECK(e.canon.canonical(parse(s, "{0,*,*2|0}")) == parse(s, "{0,*|0}"));
  CHECK(e.canon.canonical(parse(s, "{0|*2}")) == parse(s, "{0|*2}"));
  const FormId h = parse(s, "{0,*|{*|0,*},{0|0,*}}");
  CHECK(e.canon.canonical(h) == h);
  CHECK(e.canon.canonical(parse(s, "*+*")) == s.zero());
  CHECK_FALSE(e.order.eq_zero(e.canon.canonical(parse(s, "*2+*2"))));
}

TEST_CASE("is_canonical") {
  Engine e;
  Store& s = e.store;
  CHECK(e.canon.is_canonical(s.zero()));
  CHECK_FALSE(e.canon.is_canonical(parse(s, "{*|*}")));
  CHECK(e.canon.is_canonical(parse(s, "{0|*2}")));
}

TEST_CASE("explain") {
  Engine e;
  Store& s = e.store;
  CHECK(e.canon.explain(s.star()).empty());

  const auto star_star = e.canon.explain(parse(s, "{*|*}"));
  REQUIRE(star_star.size() == 1);
  CHECK(star_star[0].kind == ReductionKind::Substitution);

  const FormId g = parse(s, "{0,*,*2|0}");
  const auto trace = e.canon.explain(g);
  REQUIRE_FALSE(trace.empty());
  CHECK(trace.back().after == parse(s, "{0,*|0}"));
  CHECK(replay(s, g, trace) == e.canon.canonical(g));
}

TEST_CASE("traces replay and every step preserves equality") {
  Engine e;
  Store& s = e.store;
  auto forms = enumerate_dicots(s, 2);
  const auto sample = enumerate_dicots(s, EnumerateOptions{.max_birthday = 3, .limit = 300,
                                                           .exact_birthday = true});
  forms.insert(forms.end(), sample.begin(), sample.end());
  std::size_t steps = 0;
  for (FormId g : forms) {
    const auto trace = e.canon.explain(g);
    CHECK(replay(s, g, trace) == e.canon.canonical(g));
    for (const ReductionStep& step : trace) {
      ++steps;
      CHECK(e.order.eq(step.at, step.after));
      CHECK(step.at != step.after);
    }
  }
  CHECK(steps > forms.size());
}

TEST_CASE("canonical forms are unique on birthday <= 2") {
  Engine e;
  Store& s = e.store;
  const auto small = enumerate_dicots(s, 2);
  std::set<FormId> canonical_forms;
  for (FormId g : small) {
    canonical_forms.insert(e.canon.canonical(g));
    for (FormId h : small) {
      CHECK(e.order.eq(g, h) == (e.canon.canonical(g) == e.canon.canonical(h)));
    }
  }
  // Only {*|*} collapses (to 0).
  CHECK(canonical_forms.size() == 9);
}

TEST_CASE("canonical forms found in a birthday-3 sample are pairwise distinct") {
  Engine e;
  Store& s = e.store;
  std::set<FormId> canonical_forms;
  for (FormId g : enumerate_dicots(s, EnumerateOptions{.max_birthday = 3, .limit = 400})) {
    const FormId c = e.canon.canonical(g);
    CHECK(e.canon.is_canonical(c));
    CHECK(s.birthday(c) <= s.birthday(g));
    canonical_forms.insert(c);
  }
  const std::vector<FormId> list(canonical_forms.begin(), canonical_forms.end());
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = i + 1; j < list.size(); ++j) CHECK_FALSE(e.order.eq(list[i], list[j]));
  }
}
