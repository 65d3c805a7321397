#include <random>
#include <string>
#include <unordered_set>

#include "dicot/enumerate.hpp"
#include "dicot/errors.hpp"

namespace dicot {
namespace {

// Masks index into a population of at most this many forms.
constexpr std::size_t kMaxFullWidth = 62;
constexpr std::size_t kMaxSampleWidth = 31;

std::vector<FormId> select(const std::vector<FormId>& population, std::uint64_t mask) {
  std::vector<FormId> out;
  for (std::size_t i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1) out.push_back(population[i]);
  }
  return out;
}

bool reaches(const Store& store, const std::vector<FormId>& population, std::uint64_t mask,
             unsigned birthday) {
  for (std::size_t i = 0; mask != 0; ++i, mask >>= 1) {
    if ((mask & 1) && store.birthday(population[i]).value == birthday) return true;
  }
  return false;
}

// Unbiased draw from [0, range) on top of the engine's raw 64-bit output,
// which unlike the std distributions is identical on every platform.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t range) {
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % range;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % range;
}

// Appends every form of birthday exactly `birthday` built over `previous`
// (all forms of birthday < `birthday`) in mask order.
void full_layer(Store& store, const std::vector<FormId>& previous, unsigned birthday,
                const std::function<void(FormId)>& visit) {
  if (previous.size() > kMaxFullWidth) {
    throw BoundExceeded("population of " + std::to_string(previous.size()) +
                        " forms is too large to enumerate exhaustively");
  }
  const std::uint64_t masks = (std::uint64_t{1} << previous.size()) - 1;
  for (std::uint64_t l = 1; l <= masks; ++l) {
    const bool left_reaches = reaches(store, previous, l, birthday - 1);
    for (std::uint64_t r = 1; r <= masks; ++r) {
      if (!left_reaches && !reaches(store, previous, r, birthday - 1)) continue;
      visit(store.intern(select(previous, l), select(previous, r)));
    }
  }
}

}  // namespace

void for_each_dicot(Store& store, const EnumerateOptions& options,
                    const std::function<void(FormId)>& visit) {
  if (options.max_birthday > options.bound) {
    throw BoundExceeded("birthday " + std::to_string(options.max_birthday) +
                        " exceeds the enumeration bound " + std::to_string(options.bound));
  }
  const unsigned top = options.max_birthday;

  // Size of the population below `top`, checked before building anything.
  if (top > 0) {
    std::uint64_t below_size = 1;
    for (unsigned b = 1; b < top; ++b) {
      if (below_size > kMaxFullWidth) break;
      const std::uint64_t masks = (std::uint64_t{1} << below_size) - 1;
      below_size = masks > (std::uint64_t{1} << 32) ? ~std::uint64_t{0} : 1 + masks * masks;
    }
    const bool sampling = options.limit.has_value();
    if (below_size > (sampling ? kMaxSampleWidth : kMaxFullWidth)) {
      throw BoundExceeded("forms of birthday below " + std::to_string(top) +
                          " are too many to " + (sampling ? "sample" : "enumerate") + " over");
    }
  }

  // All forms of birthday < top.
  std::vector<FormId> below;
  if (top > 0) {
    below.push_back(store.zero());
    for (unsigned b = 1; b < top; ++b) {
      std::vector<FormId> layer;
      full_layer(store, below, b, [&](FormId g) { layer.push_back(g); });
      below.insert(below.end(), layer.begin(), layer.end());
    }
  }

  const auto emit_all = [&] {
    if (top == 0) {
      visit(store.zero());
      return;
    }
    if (!options.exact_birthday) {
      for (FormId g : below) visit(g);
    }
    full_layer(store, below, top, visit);
  };

  if (!options.limit || top == 0) {
    if (options.limit && *options.limit == 0) return;
    emit_all();
    return;
  }

  if (below.size() > kMaxSampleWidth) {
    throw BoundExceeded("population of " + std::to_string(below.size()) +
                        " forms is too large to sample");
  }
  // Nonempty (left, right) subset pairs of `below` are exactly the nonzero
  // forms of birthday <= top; forms below `top` other than 0 are
  // themselves such pairs.
  const std::uint64_t masks = (std::uint64_t{1} << below.size()) - 1;
  const std::uint64_t pairs = masks * masks;
  const std::uint64_t population =
      options.exact_birthday ? pairs - (below.size() - 1) : pairs + 1;
  if (*options.limit >= population) {
    emit_all();
    return;
  }

  std::mt19937_64 rng(options.seed);
  std::unordered_set<std::uint64_t> drawn;
  std::size_t emitted = 0;
  while (emitted < *options.limit) {
    const std::uint64_t index = options.exact_birthday ? draw(rng, pairs) + 1 : draw(rng, pairs + 1);
    if (index == 0) {
      if (drawn.insert(0).second) {
        visit(store.zero());
        ++emitted;
      }
      continue;
    }
    const std::uint64_t l = (index - 1) / masks + 1;
    const std::uint64_t r = (index - 1) % masks + 1;
    if (options.exact_birthday && !reaches(store, below, l, top - 1) &&
        !reaches(store, below, r, top - 1)) {
      continue;
    }
    if (!drawn.insert(index).second) continue;
    visit(store.intern(select(below, l), select(below, r)));
    ++emitted;
  }
}

std::vector<FormId> enumerate_dicots(Store& store, const EnumerateOptions& options) {
  std::vector<FormId> out;
  for_each_dicot(store, options, [&](FormId g) { out.push_back(g); });
  return out;
}

std::vector<FormId> enumerate_dicots(Store& store, unsigned max_birthday) {
  return enumerate_dicots(store, EnumerateOptions{.max_birthday = max_birthday, .limit = std::nullopt});
}

}  // namespace dicot
