#ifndef WINDOWCALC_PARALLEL_HPP
#define WINDOWCALC_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

#include <windowcalc/errors.hpp>

namespace windowcalc
{

/// Worker count: WINDOWCALC_THREADS when set (positive integer), otherwise the
/// hardware concurrency.
inline std::size_t thread_cap()
{
    if (const char *env = std::getenv("WINDOWCALC_THREADS"); env != nullptr && *env != '\0') {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(env, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used != std::string(env).size() || v <= 0) {
            throw PreconditionError("WINDOWCALC_THREADS must be a positive integer, got '" + std::string(env) + "'");
        }
        return static_cast<std::size_t>(v);
    }
    return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

/// out[j] = f(in[j]). Output order follows input order regardless of scheduling;
/// the first exception thrown by any worker is rethrown.
template <typename T, typename F>
auto parallel_map(const std::vector<T> &in, F f) -> std::vector<decltype(f(in.front()))>
{
    using R = decltype(f(in.front()));
    std::vector<R> out(in.size());
    const std::size_t workers = std::min(thread_cap(), in.size());
    if (workers <= 1) {
        for (std::size_t j = 0; j < in.size(); ++j) {
            out[j] = f(in[j]);
        }
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    auto work = [&]() {
        for (std::size_t j = next++; j < in.size() && !failed; j = next++) {
            try {
                out[j] = f(in[j]);
            } catch (...) {
                if (!failed.exchange(true)) {
                    error = std::current_exception();
                }
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back(work);
    }
    for (auto &t : pool) {
        t.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
    return out;
}

} // namespace windowcalc

#endif
