#pragma once

#include <future>
#include <vector>

namespace cutgap {

/// Runs fn(i) for i in [0, count) on up to `threads` async workers. Work is
/// split into contiguous chunks; callers write results into preallocated
/// slots indexed by i, so the output is deterministic regardless of the
/// thread count.
template <class Fn>
void parallel_for(long long count, int threads, Fn&& fn) {
    if (count <= 0) return;
    if (threads <= 1 || count == 1) {
        for (long long i = 0; i < count; ++i) fn(i);
        return;
    }
    int workers = static_cast<int>(std::min<long long>(threads, count));
    long long chunk = (count + workers - 1) / workers;
    std::vector<std::future<void>> futs;
    futs.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        long long begin = w * chunk;
        long long end = std::min(count, begin + chunk);
        if (begin >= end) break;
        futs.push_back(std::async(std::launch::async, [begin, end, &fn] {
            for (long long i = begin; i < end; ++i) fn(i);
        }));
    }
    for (auto& f : futs) f.get();
}

}  // namespace cutgap
