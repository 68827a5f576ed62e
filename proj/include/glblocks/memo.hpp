#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>

namespace glblocks::detail {

// Process-wide memo table: concurrent lookups, serialized insertion.
template <class Key, class Value>
class Memo {
public:
    std::optional<Value> find(const Key& key) const
    {
        std::shared_lock lock(mutex_);
        auto it = table_.find(key);
        if (it == table_.end()) return std::nullopt;
        return it->second;
    }

    const Value& insert(const Key& key, Value value)
    {
        std::unique_lock lock(mutex_);
        return table_.try_emplace(key, std::move(value)).first->second;
    }

    template <class Compute>
    Value get_or_compute(const Key& key, Compute&& compute)
    {
        if (auto hit = find(key)) return *hit;
        // computed outside the lock: recursive callers re-enter the same table
        Value value = compute();
        return insert(key, std::move(value));
    }

    std::size_t size() const
    {
        std::shared_lock lock(mutex_);
        return table_.size();
    }

private:
    mutable std::shared_mutex mutex_;
    std::map<Key, Value> table_;
};

}  // namespace glblocks::detail
