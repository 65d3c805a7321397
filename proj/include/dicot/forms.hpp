#pragma once

#include <atomic>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "dicot/memo.hpp"

namespace dicot {

/// Handle of an interned form. Equal ids denote structurally identical forms.
struct FormId {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(FormId, FormId) = default;
};

/// Formal depth of a game tree: 0 for the endgame, else 1 + max over options.
struct Birthday {
  unsigned value = 0;

  friend constexpr auto operator<=>(Birthday, Birthday) = default;
};

/// Option sets of a dicot, each sorted by id and free of duplicates.
struct GameForm {
  std::vector<FormId> left;
  std::vector<FormId> right;

  bool is_endgame() const { return left.empty(); }
};

/// splitmix64 finalizer; used for every id-keyed hash table.
struct MixHash {
  std::size_t operator()(std::uint64_t x) const noexcept {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return static_cast<std::size_t>(x ^ (x >> 31));
  }
};

/// Append-only, hash-consed table of dicotic forms.
///
/// Interning is an atomic get-or-insert: concurrent interns of the same form
/// return the same id. Reads of an id are lock-free once the id has been
/// handed out. The endgame 0 = {|} is always id 0.
///
/// Sum, conjugate and adjoint are memoized here because they only depend on
/// the structure of forms.
class Store {
 public:
  Store();
  Store(const Store&) = delete;
  Store& operator=(const Store&) = delete;
  ~Store();

  /// Interns {left | right}. The sets may be unsorted and contain duplicates.
  /// Throws DicotViolation if exactly one side is empty and UnknownId for an
  /// option that was never interned.
  FormId intern(std::vector<FormId> left, std::vector<FormId> right);

  const GameForm& form(FormId g) const { return node(g).form; }
  std::span<const FormId> left(FormId g) const { return node(g).form.left; }
  std::span<const FormId> right(FormId g) const { return node(g).form.right; }
  Birthday birthday(FormId g) const { return Birthday{node(g).birthday}; }

  /// n when g is structurally the nimber *n, nothing otherwise.
  std::optional<unsigned> nimber_value(FormId g) const;

  bool contains(FormId g) const { return g.value < size(); }
  std::size_t size() const { return size_.load(std::memory_order_acquire); }

  FormId zero() const { return FormId{0}; }
  FormId star() { return nimber(1); }
  /// *n = {0,*,...,*(n-1) | 0,*,...,*(n-1)}.
  FormId nimber(unsigned n);

  FormId conjugate(FormId g);
  FormId sum(FormId g, FormId h);
  FormId adjoint(FormId g);

  /// Every position reachable from g, g included, sorted by id.
  std::vector<FormId> followers(FormId g) const;

 private:
  struct Node {
    GameForm form;
    unsigned birthday = 0;
    int nimber = -1;
  };

  static constexpr unsigned kChunkBits = 12;
  static constexpr std::size_t kChunkSize = std::size_t{1} << kChunkBits;
  static constexpr std::size_t kMaxChunks = std::size_t{1} << 18;

  const Node& node(FormId g) const {
    return chunks_[g.value >> kChunkBits][g.value & (kChunkSize - 1)];
  }

  static std::size_t hash_form(const GameForm& f);

  mutable std::mutex intern_mutex_;
  std::unique_ptr<std::unique_ptr<Node[]>[]> chunks_;
  std::atomic<std::size_t> size_{0};
  std::unordered_multimap<std::size_t, std::uint32_t> index_;

  ConcurrentMemo<std::uint32_t, FormId, MixHash> conjugate_memo_;
  ConcurrentMemo<std::uint64_t, FormId, MixHash> sum_memo_;
  ConcurrentMemo<std::uint32_t, FormId, MixHash> adjoint_memo_;
};

/// Key of an ordered pair of ids.
inline std::uint64_t pair_key(FormId a, FormId b) {
  return (std::uint64_t{a.value} << 32) | b.value;
}

}  // namespace dicot

template <>
struct std::hash<dicot::FormId> {
  std::size_t operator()(dicot::FormId g) const noexcept { return dicot::MixHash{}(g.value); }
};
