#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace journalnet {

// Deterministic parallel reduction: the index range is cut into fixed-size
// blocks, each block produces a partial vector, and the partials are folded
// in ascending block order. The block layout does not depend on the thread
// count, so the floating-point result is bit-identical for any `threads`.
//
// BlockFn: std::vector<double>(std::size_t begin, std::size_t end)
template <class BlockFn>
std::vector<double> blocked_parallel_sum(std::size_t n, std::size_t result_size,
                                         std::size_t block_size, unsigned threads, BlockFn fn) {
    std::vector<double> total(result_size, 0.0);
    if (n == 0) return total;
    if (block_size == 0) block_size = 1;
    const std::size_t blocks = (n + block_size - 1) / block_size;

    std::vector<std::vector<double>> partials(blocks);
    auto run_block = [&](std::size_t b) {
        const std::size_t begin = b * block_size;
        const std::size_t end = std::min(n, begin + block_size);
        partials[b] = fn(begin, end);
    };

    if (threads <= 1 || blocks == 1) {
        for (std::size_t b = 0; b < blocks; ++b) run_block(b);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t b = next.fetch_add(1); b < blocks; b = next.fetch_add(1))
                run_block(b);
        };
        std::vector<std::thread> pool;
        const unsigned use = std::min<std::size_t>(threads, blocks);
        pool.reserve(use);
        for (unsigned t = 0; t < use; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    for (std::size_t b = 0; b < blocks; ++b)
        for (std::size_t i = 0; i < result_size; ++i) total[i] += partials[b][i];
    return total;
}

// Independent per-item map with slot-addressed results; deterministic for any
// thread count. Fn: T(std::size_t index)
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, unsigned threads, Fn fn) {
    std::vector<T> out(n);
    if (n == 0) return out;
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) out[i] = fn(i);
    };
    std::vector<std::thread> pool;
    const unsigned use = std::min<std::size_t>(threads, n);
    pool.reserve(use);
    for (unsigned t = 0; t < use; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return out;
}

}  // namespace journalnet
