#pragma once

// Test-only oracles: explicit game trees with naive, unmemoized misère
// minimax and sums. They share no code with the engine.

#include <cstdint>
#include <random>
#include <vector>

#include "dicot/forms.hpp"

namespace dicot::testing {

struct Tree {
  std::vector<Tree> left;
  std::vector<Tree> right;
};

inline Tree to_tree(const Store& store, FormId g) {
  Tree t;
  for (FormId x : store.left(g)) t.left.push_back(to_tree(store, x));
  for (FormId x : store.right(g)) t.right.push_back(to_tree(store, x));
  return t;
}

inline Tree tree_sum(const Tree& g, const Tree& h) {
  Tree t;
  for (const Tree& x : g.left) t.left.push_back(tree_sum(x, h));
  for (const Tree& x : h.left) t.left.push_back(tree_sum(g, x));
  for (const Tree& x : g.right) t.right.push_back(tree_sum(x, h));
  for (const Tree& x : h.right) t.right.push_back(tree_sum(g, x));
  return t;
}

inline Tree tree_conjugate(const Tree& g) {
  Tree t;
  for (const Tree& x : g.right) t.left.push_back(tree_conjugate(x));
  for (const Tree& x : g.left) t.right.push_back(tree_conjugate(x));
  return t;
}

inline bool tree_right_first(const Tree& g);

// The player with no move wins.
inline bool tree_left_first(const Tree& g) {
  if (g.left.empty()) return true;
  for (const Tree& x : g.left) {
    if (!tree_right_first(x)) return true;
  }
  return false;
}

inline bool tree_right_first(const Tree& g) {
  if (g.right.empty()) return true;
  for (const Tree& x : g.right) {
    if (!tree_left_first(x)) return true;
  }
  return false;
}

/// 'L', 'N', 'P' or 'R'.
inline char tree_outcome(const Tree& g) {
  const bool l = tree_left_first(g);
  const bool r = tree_right_first(g);
  if (l && r) return 'N';
  if (l) return 'L';
  if (r) return 'R';
  return 'P';
}

/// Random dicot of birthday <= depth with at most `width` options a side.
inline FormId random_dicot(Store& store, std::mt19937_64& rng, unsigned depth, unsigned width = 3) {
  if (depth == 0 || rng() % 5 == 0) return store.zero();
  const auto side = [&] {
    std::vector<FormId> ids;
    const unsigned n = 1 + rng() % width;
    for (unsigned i = 0; i < n; ++i) ids.push_back(random_dicot(store, rng, depth - 1, width));
    return ids;
  };
  std::vector<FormId> left = side();
  return store.intern(std::move(left), side());
}

}  // namespace dicot::testing
