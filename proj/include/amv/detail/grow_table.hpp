#ifndef AMV_DETAIL_GROW_TABLE_HPP
#define AMV_DETAIL_GROW_TABLE_HPP

#include <atomic>
#include <cstddef>
#include <memory>
#include <mutex>
#include <vector>

namespace amv::detail {

// Append-only memo table. Readers get an immutable snapshot; a writer that
// needs more entries builds a longer copy and publishes it atomically, so
// entries are written once per key and never mutated afterwards.
template <typename T>
class GrowTable {
public:
  using Snapshot = std::shared_ptr<const std::vector<T>>;

  template <typename Extend>
  Snapshot at_least(std::size_t size, Extend&& extend) {
    Snapshot cur = std::atomic_load_explicit(&data_, std::memory_order_acquire);
    if (cur && cur->size() >= size) return cur;

    std::lock_guard lock(mu_);
    cur = std::atomic_load_explicit(&data_, std::memory_order_acquire);
    if (cur && cur->size() >= size) return cur;
    auto next = cur ? std::make_shared<std::vector<T>>(*cur) : std::make_shared<std::vector<T>>();
    extend(*next, size);
    Snapshot published = std::move(next);
    std::atomic_store_explicit(&data_, published, std::memory_order_release);
    return published;
  }

private:
  std::mutex mu_;
  Snapshot data_;
};

} // namespace amv::detail

#endif // AMV_DETAIL_GROW_TABLE_HPP
