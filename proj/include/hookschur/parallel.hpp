#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace hookschur {

// Worker count: HOOKSCHUR_THREADS when set (minimum 1), otherwise the
// hardware concurrency.
inline int thread_budget() {
    if (const char* env = std::getenv("HOOKSCHUR_THREADS")) {
        int n = std::atoi(env);
        return n >= 1 ? n : 1;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw >= 1 ? static_cast<int>(hw) : 1;
}

// Applies fn to 0..n-1 with static striping and returns the results in index
// order, so the caller sees a deterministic sequence regardless of budget.
template <typename T>
std::vector<T> parallel_map(int n, const std::function<T(int)>& fn) {
    std::vector<T> out(n);
    int workers = std::min(thread_budget(), n);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w]() {
            for (int i = w; i < n; i += workers) out[i] = fn(i);
        });
    for (auto& t : pool) t.join();
    return out;
}

}  // namespace hookschur
