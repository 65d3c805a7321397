#pragma once

#include <optional>
#include <string_view>

#include "dicot/forms.hpp"
#include "dicot/memo.hpp"
#include "dicot/outcomes.hpp"

namespace dicot {

enum class OrderResult { GT, LT, EQ, CONFUSED };

/// ">", "<", "=", "||".
std::string_view to_string(OrderResult r);

/// Comparison modulo the misère dicot universe, decided on the two forms
/// alone: g >= h iff o(g) >= o(h) and
///   every g^R has some h^R <= g^R or some g^RL >= h, and
///   every h^L has some g^L >= h^L or some h^LR <= g.
class Order {
 public:
  explicit Order(OutcomeSolver& outcomes) : outcomes_(outcomes), store_(outcomes.store()) {}

  bool geq(FormId g, FormId h);
  bool leq(FormId g, FormId h) { return geq(h, g); }
  bool eq(FormId g, FormId h) { return geq(g, h) && geq(h, g); }
  OrderResult compare(FormId g, FormId h);

  /// g >= 0: o(g) >= N and every g^R has some g^RL >= 0.
  bool geq_zero(FormId g);
  /// g <= 0: o(g) <= N and every g^L has some g^LR <= 0.
  bool leq_zero(FormId g);
  /// g = 0: o(g) = N, every g^R has some g^RL >= 0, every g^L has some g^LR <= 0.
  bool eq_zero(FormId g);

  OutcomeSolver& outcomes() { return outcomes_; }

 private:
  OutcomeSolver& outcomes_;
  const Store& store_;
  ConcurrentMemo<std::uint64_t, bool, MixHash> geq_memo_;
  // Key is id*2 + (0 for >= 0, 1 for <= 0).
  ConcurrentMemo<std::uint64_t, bool, MixHash> zero_memo_;
};

}  // namespace dicot
