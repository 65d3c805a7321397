#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "dicot/forms.hpp"

namespace dicot {

/// Seed of the sampling generator (std::mt19937_64).
inline constexpr std::uint64_t kEnumerationSeed = 20190531;

struct EnumerateOptions {
  unsigned max_birthday = 0;
  /// When set and smaller than the population, draw that many distinct forms
  /// uniformly at random instead of listing every form.
  std::optional<std::size_t> limit;
  /// Restrict to forms whose birthday equals max_birthday.
  bool exact_birthday = false;
  std::uint64_t seed = kEnumerationSeed;
  /// Largest max_birthday accepted; BoundExceeded above it.
  unsigned bound = 3;
};

/// Calls `visit` on every dicot of birthday <= max_birthday exactly once, by
/// ascending birthday and, within one birthday, by (left, right) subset
/// masks over the previous population. With a limit, visits a reproducible
/// sample in draw order instead.
void for_each_dicot(Store& store, const EnumerateOptions& options,
                    const std::function<void(FormId)>& visit);

std::vector<FormId> enumerate_dicots(Store& store, const EnumerateOptions& options);

/// Shorthand for the full population of birthday <= max_birthday.
std::vector<FormId> enumerate_dicots(Store& store, unsigned max_birthday);

}  // namespace dicot
