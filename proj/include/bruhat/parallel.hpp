#pragma once

#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace bruhat {

/// Worker cap for internal parallelism. Defaults to BRUHAT_THREADS from the
/// environment, else 1; the CLI overrides it from --threads.
int max_threads();
void set_max_threads(int n);

/// Runs fn(i) for i in [0, n) across up to max_threads() workers and returns
/// the results in index order, so output is identical for any thread count.
/// The first exception thrown by a worker is rethrown.
template <class R, class Fn>
std::vector<R> parallel_map(std::int64_t n, Fn fn) {
    std::vector<R> out(static_cast<size_t>(n));
    const int workers = static_cast<int>(std::min<std::int64_t>(max_threads(), n));
    if (workers <= 1) {
        for (std::int64_t i = 0; i < n; ++i) out[static_cast<size_t>(i)] = fn(i);
        return out;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<size_t>(workers));
    for (int t = 0; t < workers; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (std::int64_t i = t; i < n; i += workers)
                    out[static_cast<size_t>(i)] = fn(i);
            } catch (...) {
                errors[static_cast<size_t>(t)] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

} // namespace bruhat
