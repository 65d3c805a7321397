#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dicot/canonical.hpp"
#include "dicot/forms.hpp"
#include "dicot/order.hpp"

namespace dicot {

struct InvertReport {
  FormId input;
  FormId canonical;
  /// o(f + conjugate(f)) for every follower f of `canonical`, sorted by id.
  std::vector<std::pair<FormId, Outcome>> follower_outcomes;
  bool verdict = false;
  /// Lowest-id follower with f + conjugate(f) in P; set iff !verdict.
  std::optional<FormId> witness;
};

/// Invertibility in the misère dicot universe.
///
/// A canonical dicot is invertible iff no follower f has f + (-f) in P.
/// The conjugate is the only candidate inverse, which gives the independent
/// check g + (-g) = 0.
class Inverter {
 public:
  Inverter(Store& store, Order& order, Canonicalizer& canon)
      : store_(store), order_(order), canon_(canon) {}

  /// Canonicalizes g first; the follower criterion only holds for canonical forms.
  InvertReport is_invertible(FormId g);

  /// -canonical(g) when g is invertible.
  std::optional<FormId> inverse(FormId g);

  /// g + conjugate(g) = 0.
  bool oracle_invertible(FormId g);

  /// A position telling h + (-h) apart from 0, or nothing if h + (-h) = 0.
  /// When h + (-h) is in P this is *; otherwise it is
  ///   X = { 0 | { adjoints of all followers of h + (-h) | 0 } },
  /// and Left moving first wins h + (-h) + X but loses X.
  std::optional<FormId> lemma_witness(FormId h);

  /// For g > 0, whether g + h + (-h) is not < 0. Always true for dicots;
  /// throws PreconditionViolated unless g > 0.
  bool lemma_check(FormId g, FormId h);

 private:
  Store& store_;
  Order& order_;
  Canonicalizer& canon_;
};

}  // namespace dicot
