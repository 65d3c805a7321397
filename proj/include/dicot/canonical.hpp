#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "dicot/forms.hpp"
#include "dicot/memo.hpp"
#include "dicot/order.hpp"

namespace dicot {

enum class ReductionKind {
  DominationL,
  DominationR,
  NonAtomicReverseL,
  NonAtomicReverseR,
  AtomicReverseDropL,
  AtomicReverseStarL,
  AtomicReverseDropR,
  AtomicReverseStarR,
  Substitution,
};

std::string_view to_string(ReductionKind kind);

/// One rewrite of a single form; `after` equals `at` modulo the universe.
struct ReductionStep {
  ReductionKind kind;
  FormId at;
  FormId after;
  /// Options taken out of (resp. put into) the rewritten side. Substitution
  /// records nothing here: the whole form becomes 0.
  std::vector<FormId> removed;
  std::vector<FormId> added;
};

/// Reduction of dicot forms to canonical form.
///
/// Each node is handled bottom-up: its options are first replaced by their
/// canonical forms, then rewrites are applied until none applies, scanning
/// in a fixed order: domination, non-atomic reversibility, atomic
/// reversibility, substitution; Left before Right, lowest id first.
class Canonicalizer {
 public:
  Canonicalizer(Store& store, Order& order)
      : store_(store), order_(order), outcomes_(order.outcomes()) {}

  /// The first applicable rewrite of g. Assumes every proper follower of g
  /// is canonical.
  std::optional<std::pair<FormId, ReductionStep>> reduce_once(FormId g);

  FormId canonical(FormId g);
  bool is_canonical(FormId g) { return canonical(g) == g; }

  /// Every rewrite performed while canonicalizing g, children before
  /// parents, each distinct follower once.
  std::vector<ReductionStep> explain(FormId g);

 private:
  std::optional<std::pair<FormId, ReductionStep>> dominate(FormId g, bool left_side);
  std::optional<std::pair<FormId, ReductionStep>> reverse_non_atomic(FormId g, bool left_side);
  std::optional<std::pair<FormId, ReductionStep>> reverse_atomic(FormId g, bool left_side);
  std::optional<std::pair<FormId, ReductionStep>> substitute(FormId g);

  bool atomic_reversible_left(FormId g, FormId a);
  bool atomic_reversible_right(FormId g, FormId a);

  /// g with its options replaced by their canonical forms.
  FormId with_canonical_options(FormId g);

  Store& store_;
  Order& order_;
  OutcomeSolver& outcomes_;
  ConcurrentMemo<std::uint32_t, FormId, MixHash> memo_;
};

/// Rebuilds the canonical form of g from a trace produced by explain:
/// options are rebuilt recursively and every recorded rewrite is replayed.
FormId replay(Store& store, FormId g, std::span<const ReductionStep> trace);

}  // namespace dicot
