#include <algorithm>
#include <cassert>
#include <unordered_map>
#include <unordered_set>

#include "dicot/canonical.hpp"

namespace dicot {
namespace {

using Rewrite = std::optional<std::pair<FormId, ReductionStep>>;

std::vector<FormId> without(std::span<const FormId> ids, FormId drop) {
  std::vector<FormId> out;
  for (FormId x : ids) {
    if (x != drop) out.push_back(x);
  }
  return out;
}

}  // namespace

std::string_view to_string(ReductionKind kind) {
  switch (kind) {
    case ReductionKind::DominationL: return "DominationL";
    case ReductionKind::DominationR: return "DominationR";
    case ReductionKind::NonAtomicReverseL: return "NonAtomicReverseL";
    case ReductionKind::NonAtomicReverseR: return "NonAtomicReverseR";
    case ReductionKind::AtomicReverseDropL: return "AtomicReverseDropL";
    case ReductionKind::AtomicReverseStarL: return "AtomicReverseStarL";
    case ReductionKind::AtomicReverseDropR: return "AtomicReverseDropR";
    case ReductionKind::AtomicReverseStarR: return "AtomicReverseStarR";
    case ReductionKind::Substitution: return "Substitution";
  }
  return "?";
}

Rewrite Canonicalizer::dominate(FormId g, bool left_side) {
  const auto options = left_side ? store_.left(g) : store_.right(g);
  for (FormId a : options) {
    for (FormId b : options) {
      if (a == b) continue;
      // Left drops A <= B; Right drops A >= B.
      const bool dominated = left_side ? order_.geq(b, a) : order_.geq(a, b);
      if (!dominated) continue;
      std::vector<FormId> kept = without(options, a);
      const FormId after = left_side
          ? store_.intern(std::move(kept), store_.form(g).right)
          : store_.intern(store_.form(g).left, std::move(kept));
      return std::pair{after, ReductionStep{left_side ? ReductionKind::DominationL
                                                      : ReductionKind::DominationR,
                                            g, after, {a}, {}}};
    }
  }
  return std::nullopt;
}

Rewrite Canonicalizer::reverse_non_atomic(FormId g, bool left_side) {
  const auto options = left_side ? store_.left(g) : store_.right(g);
  for (FormId a : options) {
    const auto responses = left_side ? store_.right(a) : store_.left(a);
    for (FormId b : responses) {
      const auto replacement = left_side ? store_.left(b) : store_.right(b);
      if (replacement.empty()) continue;
      const bool reversible = left_side ? order_.geq(g, b) : order_.geq(b, g);
      if (!reversible) continue;
      std::vector<FormId> side = without(options, a);
      side.insert(side.end(), replacement.begin(), replacement.end());
      const FormId after = left_side ? store_.intern(std::move(side), store_.form(g).right)
                                     : store_.intern(store_.form(g).left, std::move(side));
      return std::pair{after, ReductionStep{left_side ? ReductionKind::NonAtomicReverseL
                                                      : ReductionKind::NonAtomicReverseR,
                                            g, after, {a},
                                            std::vector<FormId>(replacement.begin(),
                                                                replacement.end())}};
    }
  }
  return std::nullopt;
}

// A left-atomic response of a dicot has no options at all, so the reversing
// option is exactly 0 and "B <= G" is "G >= 0".
bool Canonicalizer::atomic_reversible_left(FormId g, FormId a) {
  const auto responses = store_.right(a);
  if (!std::ranges::binary_search(responses, store_.zero())) return false;
  return order_.geq_zero(g);
}

bool Canonicalizer::atomic_reversible_right(FormId g, FormId a) {
  const auto responses = store_.left(a);
  if (!std::ranges::binary_search(responses, store_.zero())) return false;
  return order_.leq_zero(g);
}

Rewrite Canonicalizer::reverse_atomic(FormId g, bool left_side) {
  const auto options = left_side ? store_.left(g) : store_.right(g);
  for (FormId a : options) {
    // Any response B with an empty replacement set is the endgame.
    assert(std::ranges::none_of(left_side ? store_.right(a) : store_.left(a), [&](FormId b) {
      return (left_side ? store_.left(b) : store_.right(b)).empty() && b != store_.zero();
    }));
    const bool reversible =
        left_side ? atomic_reversible_left(g, a) : atomic_reversible_right(g, a);
    if (!reversible) continue;

    const bool other_winning_move = std::ranges::any_of(options, [&](FormId c) {
      return c != a && (left_side ? outcomes_.is_left_winning_move(c)
                                  : outcomes_.is_right_winning_move(c));
    });
    std::vector<FormId> side = without(options, a);
    ReductionStep step{ReductionKind::Substitution, g, g, {a}, {}};
    if (other_winning_move) {
      step.kind = left_side ? ReductionKind::AtomicReverseDropL : ReductionKind::AtomicReverseDropR;
    } else {
      const FormId star = store_.star();
      // Replacing * by * changes nothing and is not a rewrite.
      if (a == star) continue;
      step.kind = left_side ? ReductionKind::AtomicReverseStarL : ReductionKind::AtomicReverseStarR;
      if (!std::ranges::binary_search(options, star)) step.added.push_back(star);
      side.push_back(star);
    }
    const FormId after = left_side ? store_.intern(std::move(side), store_.form(g).right)
                                   : store_.intern(store_.form(g).left, std::move(side));
    step.after = after;
    return std::pair{after, std::move(step)};
  }
  return std::nullopt;
}

Rewrite Canonicalizer::substitute(FormId g) {
  const auto left = store_.left(g);
  const auto right = store_.right(g);
  if (left.size() != 1 || right.size() != 1) return std::nullopt;
  if (!atomic_reversible_left(g, left[0]) || !atomic_reversible_right(g, right[0])) {
    return std::nullopt;
  }
  const FormId zero = store_.zero();
  return std::pair{zero, ReductionStep{ReductionKind::Substitution, g, zero, {}, {}}};
}

Rewrite Canonicalizer::reduce_once(FormId g) {
  if (g == store_.zero()) return std::nullopt;
  for (bool left_side : {true, false}) {
    if (auto r = dominate(g, left_side)) return r;
  }
  for (bool left_side : {true, false}) {
    if (auto r = reverse_non_atomic(g, left_side)) return r;
  }
  for (bool left_side : {true, false}) {
    if (auto r = reverse_atomic(g, left_side)) return r;
  }
  return substitute(g);
}

FormId Canonicalizer::with_canonical_options(FormId g) {
  std::vector<FormId> left, right;
  for (FormId x : store_.left(g)) left.push_back(canonical(x));
  for (FormId x : store_.right(g)) right.push_back(canonical(x));
  return store_.intern(std::move(left), std::move(right));
}

FormId Canonicalizer::canonical(FormId g) {
  if (g == store_.zero()) return g;
  if (auto hit = memo_.find(g.value)) return *hit;
  FormId current = with_canonical_options(g);
  while (auto r = reduce_once(current)) current = r->first;
  memo_.insert(current.value, current);
  return memo_.insert(g.value, current);
}

std::vector<ReductionStep> Canonicalizer::explain(FormId g) {
  std::vector<ReductionStep> trace;
  std::unordered_set<FormId> done;
  const auto visit = [&](auto&& self, FormId f) -> void {
    if (!done.insert(f).second) return;
    for (FormId x : store_.left(f)) self(self, x);
    for (FormId x : store_.right(f)) self(self, x);
    FormId current = with_canonical_options(f);
    while (auto r = reduce_once(current)) {
      current = r->first;
      trace.push_back(std::move(r->second));
    }
  };
  visit(visit, g);
  return trace;
}

FormId replay(Store& store, FormId g, std::span<const ReductionStep> trace) {
  std::unordered_map<FormId, FormId> next;
  for (const ReductionStep& step : trace) next.emplace(step.at, step.after);
  std::unordered_map<FormId, FormId> rebuilt;
  const auto rebuild = [&](auto&& self, FormId f) -> FormId {
    if (auto it = rebuilt.find(f); it != rebuilt.end()) return it->second;
    std::vector<FormId> left, right;
    for (FormId x : store.left(f)) left.push_back(self(self, x));
    for (FormId x : store.right(f)) right.push_back(self(self, x));
    FormId current = store.intern(std::move(left), std::move(right));
    for (auto it = next.find(current); it != next.end(); it = next.find(current)) {
      current = it->second;
    }
    rebuilt.emplace(f, current);
    return current;
  };
  return rebuild(rebuild, g);
}

}  // namespace dicot
