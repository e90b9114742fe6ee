#include "atanid/parallel.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <future>
#include <thread>
#include <vector>

namespace atanid {

unsigned default_worker_count() {
    if (const char* env = std::getenv(kWorkerEnvVar)) {
        unsigned n = 0;
        const char* end = env + std::strlen(env);
        auto [ptr, ec] = std::from_chars(env, end, n);
        if (ec == std::errc() && ptr == end && n > 0)
            return n;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

BigRational partitioned_sum(std::size_t first, std::size_t last, unsigned workers,
                            const std::function<BigRational(std::size_t, std::size_t)>& block) {
    if (last <= first)
        return 0;
    const std::size_t n = last - first;
    const std::size_t parts = std::clamp<std::size_t>(workers, 1, n);
    if (parts == 1)
        return block(first, last);

    std::vector<std::future<BigRational>> pending;
    pending.reserve(parts);
    for (std::size_t p = 0; p < parts; ++p) {
        const std::size_t b = first + n * p / parts;
        const std::size_t e = first + n * (p + 1) / parts;
        pending.push_back(std::async(std::launch::async, block, b, e));
    }
    BigRational total;
    for (auto& f : pending)
        total += f.get();
    return total;
}

}  // namespace atanid
