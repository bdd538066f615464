// Minimal parallel-map capability.  The CLI sizes it from --workers; library
// code stays agnostic of threading details.  Results are written into
// per-index slots, so reductions done afterwards in index order are
// deterministic regardless of scheduling.
#ifndef CRITLINE_PARALLEL_HPP
#define CRITLINE_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace critline {

class ParallelMap {
public:
    explicit ParallelMap(unsigned workers = 1)
        : workers_(workers == 0 ? 1 : workers) {}

    unsigned workers() const { return workers_; }

    // Runs fn(i) for i in [0, count).  fn must only touch state owned by
    // index i.  The first exception thrown by any worker is rethrown.
    void for_each(std::size_t count, const std::function<void(std::size_t)>& fn) const {
        if (count == 0) return;
        unsigned n = workers_;
        if (n <= 1 || count == 1) {
            for (std::size_t i = 0; i < count; ++i) fn(i);
            return;
        }
        if (n > count) n = static_cast<unsigned>(count);

        std::atomic<std::size_t> next{0};
        std::atomic<bool> failed{false};
        std::exception_ptr err;
        std::vector<std::thread> pool;
        pool.reserve(n);
        for (unsigned w = 0; w < n; ++w) {
            pool.emplace_back([&] {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= count || failed.load()) return;
                    try {
                        fn(i);
                    } catch (...) {
                        if (!failed.exchange(true)) err = std::current_exception();
                        return;
                    }
                }
            });
        }
        for (auto& t : pool) t.join();
        if (failed.load() && err) std::rethrow_exception(err);
    }

private:
    unsigned workers_;
};

} // namespace critline

#endif
