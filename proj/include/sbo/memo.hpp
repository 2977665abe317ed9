#ifndef SBO_MEMO_HPP
#define SBO_MEMO_HPP

#include <functional>
#include <map>
#include <mutex>
#include <shared_mutex>

namespace sbo
{

/** Thread-safe memo table. Values are immutable once inserted; concurrent
 *  readers share the lock and a miss computes outside it.
 */
template <class Key, class Value>
class MemoTable
{
public:
    template <class F>
    Value get(const Key& key, F&& compute)
    {
        {
            std::shared_lock lock(mutex_);
            if (auto it = table_.find(key); it != table_.end())
                return it->second;
        }
        Value v = std::invoke(std::forward<F>(compute));
        std::unique_lock lock(mutex_);
        return table_.emplace(key, std::move(v)).first->second;
    }

private:
    std::shared_mutex mutex_;
    std::map<Key, Value> table_;
};

} // namespace sbo

#endif
