#include <set>

#include "doctest.h"

#include "dicot/enumerate.hpp"
#include "dicot/errors.hpp"
#include "dicot/notation.hpp"

using namespace dicot;

namespace {

// Every "{A|B}" over nonempty subsets of `names`, plus "0", built as text.
std::set<std::string> brute_force_layer(const std::vector<std::string>& names) {
  std::set<std::string> out{"0"};
  const unsigned n = static_cast<unsigned>(names.size());
  const auto join = [&](unsigned mask) {
    std::string s;
    for (unsigned i = 0; i < n; ++i) {
      if (mask & (1u << i)) s += (s.empty() ? "" : ",") + names[i];
    }
    return s;
  };
  for (unsigned l = 1; l < (1u << n); ++l) {
    for (unsigned r = 1; r < (1u << n); ++r) out.insert("{" + join(l) + "|" + join(r) + "}");
  }
  return out;
}

}  // namespace

TEST_CASE("small birthdays") {
  Store s;
  CHECK(enumerate_dicots(s, 0) == std::vector<FormId>{s.zero()});
  CHECK(enumerate_dicots(s, 1) == std::vector<FormId>{s.zero(), s.star()});
  CHECK(enumerate_dicots(s, 2).size() == 10);
}

TEST_CASE("birthday 2 matches brute force over notation") {
  Store s;
  std::set<FormId> expected;
  for (const auto& text : brute_force_layer({"0", "*"})) expected.insert(parse(s, text));
  const auto listed = enumerate_dicots(s, 2);
  CHECK(std::set<FormId>(listed.begin(), listed.end()) == expected);
  CHECK(expected.size() == 10);
}

TEST_CASE("birthday 3 population size") {
  Store s;
  std::size_t count = 0;
  std::set<FormId> distinct;
  for_each_dicot(s, EnumerateOptions{.max_birthday = 3, .limit = std::nullopt},
                 [&](FormId g) {
                   ++count;
                   if (count % 97 == 0) distinct.insert(g);
                   CHECK(s.birthday(g).value <= 3);
                 });
  // 0 plus all pairs of nonempty subsets of the ten forms of birthday <= 2.
  CHECK(count == 1 + 1023 * 1023);
  CHECK(s.size() == count);  // nothing listed twice
}

TEST_CASE("order is ascending by birthday and deterministic") {
  Store a;
  Store b;
  const auto first = enumerate_dicots(a, 2);
  const auto second = enumerate_dicots(b, 2);
  REQUIRE(first.size() == second.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK(print(a, first[i]) == print(b, second[i]));
    if (i > 0) CHECK(a.birthday(first[i - 1]) <= a.birthday(first[i]));
  }
}

TEST_CASE("sampling") {
  Store a;
  Store b;
  const EnumerateOptions options{.max_birthday = 3, .limit = 500, .exact_birthday = true};
  const auto first = enumerate_dicots(a, options);
  const auto second = enumerate_dicots(b, options);
  CHECK(first.size() == 500);
  CHECK(std::set<FormId>(first.begin(), first.end()).size() == 500);
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK(a.birthday(first[i]).value == 3);
    CHECK(print(a, first[i]) == print(b, second[i]));
  }

  EnumerateOptions other = options;
  other.seed = 1;
  CHECK(enumerate_dicots(a, other) != first);

  // A limit at least the population size lists the whole population.
  CHECK(enumerate_dicots(a, EnumerateOptions{.max_birthday = 2, .limit = 50}) ==
        enumerate_dicots(a, 2));
  CHECK(enumerate_dicots(a, EnumerateOptions{.max_birthday = 2, .limit = 4}).size() == 4);
  CHECK(enumerate_dicots(a, EnumerateOptions{.max_birthday = 2, .limit = 0}).empty());
}

TEST_CASE("bound") {
  Store s;
  CHECK_THROWS_AS(enumerate_dicots(s, 4), BoundExceeded);
  EnumerateOptions wide{.max_birthday = 4, .limit = 10, .bound = 4};
  CHECK_THROWS_AS(enumerate_dicots(s, wide), BoundExceeded);
}
