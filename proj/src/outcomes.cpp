#include "dicot/outcomes.hpp"

namespace dicot {

std::optional<Outcome> outcome_from_char(char c) {
  switch (c) {
    case 'L': return Outcome::L;
    case 'N': return Outcome::N;
    case 'P': return Outcome::P;
    case 'R': return Outcome::R;
    default: return std::nullopt;
  }
}

bool OutcomeSolver::left_wins_moving_first(FormId g) {
  const std::uint64_t key = std::uint64_t{g.value} * 2;
  if (auto hit = memo_.find(key)) return *hit;
  bool wins = store_.left(g).empty();
  for (FormId x : store_.left(g)) {
    if (!right_wins_moving_first(x)) {
      wins = true;
      break;
    }
  }
  return memo_.insert(key, wins);
}

bool OutcomeSolver::right_wins_moving_first(FormId g) {
  const std::uint64_t key = std::uint64_t{g.value} * 2 + 1;
  if (auto hit = memo_.find(key)) return *hit;
  bool wins = store_.right(g).empty();
  for (FormId x : store_.right(g)) {
    if (!left_wins_moving_first(x)) {
      wins = true;
      break;
    }
  }
  return memo_.insert(key, wins);
}

Outcome OutcomeSolver::outcome(FormId g) {
  const bool left_first = left_wins_moving_first(g);
  const bool right_first = right_wins_moving_first(g);
  if (left_first && right_first) return Outcome::N;
  if (left_first) return Outcome::L;
  if (right_first) return Outcome::R;
  return Outcome::P;
}

}  // namespace dicot
