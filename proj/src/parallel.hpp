#pragma once

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

#include "bomol/oracle.hpp"

namespace bomol {

namespace detail {

// Runs job(i) for i in [0, n) on up to oracle_threads() workers. Each job writes only
// its own slot, so results do not depend on scheduling.
template <class Job>
void parallel_for(int n, Job job) {
    const int workers = std::min(n, oracle_threads());
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) job(i);
        return;
    }
    std::vector<std::exception_ptr> errs(n);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (int i = w; i < n; i += workers) {
                try {
                    job(i);
                } catch (...) {
                    errs[i] = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
}

} // namespace detail

} // namespace bomol
