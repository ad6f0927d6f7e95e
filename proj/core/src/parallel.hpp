#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace spectra::detail {

// Runs fn(i) for every i in [0, count). With more than one worker the
// iterations are pulled from a shared counter; per-index results must be
// written by fn into caller-owned slots, which keeps outcomes independent of
// the worker count. Exceptions are rethrown in index order.
inline void parallel_for(std::size_t count, unsigned workers,
                         const std::function<void(std::size_t)>& fn) {
    if (count == 0) {
        return;
    }
    if (workers <= 1 || count == 1) {
        for (std::size_t i = 0; i < count; ++i) {
            fn(i);
        }
        return;
    }
    unsigned use = static_cast<unsigned>(
        std::min<std::size_t>(workers, count));
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(count);
    auto body = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) {
                return;
            }
            try {
                fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(use);
    for (unsigned w = 0; w < use; ++w) {
        pool.emplace_back(body);
    }
    for (std::thread& th : pool) {
        th.join();
    }
    for (std::exception_ptr& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

}  // namespace spectra::detail
