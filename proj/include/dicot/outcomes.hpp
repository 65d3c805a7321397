#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "dicot/forms.hpp"
#include "dicot/memo.hpp"

namespace dicot {

/// Misère outcome class, partially ordered L > N > R and L > P > R.
enum class Outcome : std::uint8_t { L, N, P, R };

/// a >= b in the outcome order; N and P are incomparable.
constexpr bool outcome_geq(Outcome a, Outcome b) {
  if (a == b || a == Outcome::L || b == Outcome::R) return true;
  return false;
}

/// Swaps L and R; fixes N and P.
constexpr Outcome conjugate_outcome(Outcome a) {
  switch (a) {
    case Outcome::L: return Outcome::R;
    case Outcome::R: return Outcome::L;
    default: return a;
  }
}

constexpr char to_char(Outcome a) {
  constexpr char names[] = {'L', 'N', 'P', 'R'};
  return names[static_cast<int>(a)];
}

std::optional<Outcome> outcome_from_char(char c);

/// Misère minimax over a store: the player unable to move wins.
class OutcomeSolver {
 public:
  explicit OutcomeSolver(const Store& store) : store_(store) {}

  bool left_wins_moving_first(FormId g);
  bool right_wins_moving_first(FormId g);
  Outcome outcome(FormId g);

  /// Left moving to g wins: Right, now on move, loses.
  bool is_left_winning_move(FormId g) {
    const Outcome o = outcome(g);
    return o == Outcome::L || o == Outcome::P;
  }
  bool is_right_winning_move(FormId g) {
    const Outcome o = outcome(g);
    return o == Outcome::R || o == Outcome::P;
  }

  const Store& store() const { return store_; }

 private:
  const Store& store_;
  // Key is id*2 + (0 for Left first, 1 for Right first).
  ConcurrentMemo<std::uint64_t, bool, MixHash> memo_;
};

}  // namespace dicot
