#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>

namespace albanese {

// Thread-safe memo table. Two threads may compute the same entry; the first
// insert wins and later inserts are ignored, so lookups stay idempotent.
template <class Key, class Value, class Compare = std::less<Key>>
class MemoTable {
 public:
  std::optional<Value> find(const Key& key) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }

  const Value& insert(const Key& key, Value value) {
    std::unique_lock lock(mutex_);
    auto [it, inserted] = table_.emplace(key, std::move(value));
    return it->second;
  }

  template <class Fn>
  Value get_or_compute(const Key& key, Fn&& compute) {
    if (auto hit = find(key)) return *hit;
    return insert(key, compute());
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<Key, Value, Compare> table_;
};

}  // namespace albanese
