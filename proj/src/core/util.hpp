#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace weyldft {

// Thread count: WEYLDFT_THREADS caps it, defaults to hardware concurrency.
inline unsigned thread_count() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("WEYLDFT_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && static_cast<unsigned>(v) < hw) return static_cast<unsigned>(v);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    return hw;
}

// Static partition of [0, n) across worker threads; body(i) must be
// independent per index.  Results stay deterministic because each index
// is computed exactly once by a single thread.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
    unsigned nt = thread_count();
    if (nt <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    if (nt > n) nt = static_cast<unsigned>(n);
    std::vector<std::thread> workers;
    workers.reserve(nt);
    for (unsigned t = 0; t < nt; ++t) {
        workers.emplace_back([&, t] {
            for (std::size_t i = t; i < n; i += nt) body(i);
        });
    }
    for (auto& w : workers) w.join();
}

}  // namespace weyldft
