#pragma once

#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

namespace quatdirac::detail {

struct VecHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::int64_t x : v) {
      h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

/// Shared memo table keyed on flattened integer vectors.  Values are pure
/// functions of the key, so concurrent writers store identical values.
template <typename V>
class MemoTable {
 public:
  using Key = std::vector<std::int64_t>;

  std::optional<V> find(const Key& key) const {
    std::shared_lock lock(mutex_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }

  void store(const Key& key, const V& value) {
    std::unique_lock lock(mutex_);
    map_.insert_or_assign(key, value);
  }

  template <typename F>
  V get_or_compute(const Key& key, F&& compute) {
    if (auto hit = find(key)) return *hit;
    V value = compute();
    store(key, value);
    return value;
  }

  template <typename F>
  void for_each(F&& f) const {
    std::shared_lock lock(mutex_);
    for (const auto& [k, v] : map_) f(k, v);
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return map_.size();
  }

  void clear() {
    std::unique_lock lock(mutex_);
    map_.clear();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<Key, V, VecHash> map_;
};

}  // namespace quatdirac::detail
