#pragma once

#include <map>
#include <mutex>

namespace qgroot::detail {

/// Thread-safe memo table. The computation runs outside the lock, so
/// recursive calls into the same table are fine; a racing duplicate
/// computation simply yields the same value.
template <class Key, class Value>
class Memo {
 public:
  template <class F>
  Value get(const Key& key, F compute) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = table_.find(key);
      if (it != table_.end()) return it->second;
    }
    Value v = compute();
    std::lock_guard<std::mutex> lock(mu_);
    return table_.emplace(key, std::move(v)).first->second;
  }

 private:
  std::mutex mu_;
  std::map<Key, Value> table_;
};

}  // namespace qgroot::detail
