#pragma once

/* Chunked parallel sweep over an index range.  Work items are pure; each chunk
 * writes only its own slot, and results merge in index order, so output is
 * deterministic regardless of scheduling. */

#include <future>
#include <vector>

namespace ainfty {

template <class R>
std::vector<R> parallel_chunks(std::size_t n, std::size_t min_chunk,
                               const std::function<R(std::size_t, std::size_t)>& work) {
    std::size_t threads = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    std::size_t chunk = std::max(min_chunk, (n + threads - 1) / std::max<std::size_t>(threads, 1));
    std::vector<std::future<R>> futs;
    for (std::size_t begin = 0; begin < n; begin += chunk) {
        std::size_t end = std::min(n, begin + chunk);
        futs.push_back(std::async(std::launch::async, work, begin, end));
    }
    std::vector<R> out;
    out.reserve(futs.size());
    for (auto& f : futs) out.push_back(f.get());
    return out;
}

}  // namespace ainfty
