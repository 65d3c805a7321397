#include <algorithm>

#include "dicot/order.hpp"

namespace dicot {

std::string_view to_string(OrderResult r) {
  switch (r) {
    case OrderResult::GT: return ">";
    case OrderResult::LT: return "<";
    case OrderResult::EQ: return "=";
    case OrderResult::CONFUSED: return "||";
  }
  return "?";
}

bool Order::geq(FormId g, FormId h) {
  if (g == h) return true;
  const std::uint64_t key = pair_key(g, h);
  if (auto hit = geq_memo_.find(key)) return *hit;

  const auto decide = [&] {
    if (!outcome_geq(outcomes_.outcome(g), outcomes_.outcome(h))) return false;
    for (FormId gr : store_.right(g)) {
      const bool answered =
          std::ranges::any_of(store_.right(h), [&](FormId hr) { return geq(gr, hr); }) ||
          std::ranges::any_of(store_.left(gr), [&](FormId grl) { return geq(grl, h); });
      if (!answered) return false;
    }
    for (FormId hl : store_.left(h)) {
      const bool answered =
          std::ranges::any_of(store_.left(g), [&](FormId gl) { return geq(gl, hl); }) ||
          std::ranges::any_of(store_.right(hl), [&](FormId hlr) { return geq(g, hlr); });
      if (!answered) return false;
    }
    return true;
  };
  return geq_memo_.insert(key, decide());
}

OrderResult Order::compare(FormId g, FormId h) {
  const bool ge = geq(g, h);
  const bool le = geq(h, g);
  if (ge && le) return OrderResult::EQ;
  if (ge) return OrderResult::GT;
  if (le) return OrderResult::LT;
  return OrderResult::CONFUSED;
}

bool Order::geq_zero(FormId g) {
  const std::uint64_t key = std::uint64_t{g.value} * 2;
  if (auto hit = zero_memo_.find(key)) return *hit;
  const Outcome o = outcomes_.outcome(g);
  bool result = o == Outcome::L || o == Outcome::N;
  for (FormId gr : store_.right(g)) {
    if (!result) break;
    result = std::ranges::any_of(store_.left(gr), [&](FormId grl) { return geq_zero(grl); });
  }
  return zero_memo_.insert(key, result);
}

bool Order::leq_zero(FormId g) {
  const std::uint64_t key = std::uint64_t{g.value} * 2 + 1;
  if (auto hit = zero_memo_.find(key)) return *hit;
  const Outcome o = outcomes_.outcome(g);
  bool result = o == Outcome::R || o == Outcome::N;
  for (FormId gl : store_.left(g)) {
    if (!result) break;
    result = std::ranges::any_of(store_.right(gl), [&](FormId glr) { return leq_zero(glr); });
  }
  return zero_memo_.insert(key, result);
}

bool Order::eq_zero(FormId g) {
  if (outcomes_.outcome(g) != Outcome::N) return false;
  for (FormId gr : store_.right(g)) {
    if (!std::ranges::any_of(store_.left(gr), [&](FormId grl) { return geq_zero(grl); })) {
      return false;
    }
  }
  for (FormId gl : store_.left(g)) {
    if (!std::ranges::any_of(store_.right(gl), [&](FormId glr) { return leq_zero(glr); })) {
      return false;
    }
  }
  return true;
}

}  // namespace dicot
