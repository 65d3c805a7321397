#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <mutex>
#include <optional>
#include <unordered_map>

namespace dicot {

/// Sharded get-or-insert cache. Values are computed outside the lock; the
/// first value inserted for a key wins, so concurrent callers that computed
/// the same pure function agree on the stored result.
template <class Key, class Value, class Hash = std::hash<Key>>
class ConcurrentMemo {
 public:
  std::optional<Value> find(const Key& key) const {
    const Shard& shard = shard_for(key);
    std::lock_guard lock(shard.mutex);
    auto it = shard.map.find(key);
    if (it == shard.map.end()) return std::nullopt;
    return it->second;
  }

  /// Inserts `value` unless `key` is present; returns the stored value.
  Value insert(const Key& key, Value value) {
    Shard& shard = shard_for(key);
    std::lock_guard lock(shard.mutex);
    return shard.map.try_emplace(key, std::move(value)).first->second;
  }

  std::size_t size() const {
    std::size_t n = 0;
    for (const Shard& shard : shards_) {
      std::lock_guard lock(shard.mutex);
      n += shard.map.size();
    }
    return n;
  }

 private:
  static constexpr std::size_t kShards = 16;

  struct Shard {
    mutable std::mutex mutex;
    std::unordered_map<Key, Value, Hash> map;
  };

  Shard& shard_for(const Key& key) { return shards_[Hash{}(key) % kShards]; }
  const Shard& shard_for(const Key& key) const { return shards_[Hash{}(key) % kShards]; }

  std::array<Shard, kShards> shards_;
};

}  // namespace dicot
