#include "acm/common.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <thread>
#include <vector>

namespace acm {

long long binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) {
        // r * (n - k + i) is exact before the division because r holds C(n-k+i-1, i-1) * i! / ...;
        // the intermediate product fits checked below.
        long long m = n - k + i;
        if (r > std::numeric_limits<long long>::max() / m)
            throw Error("binomial overflow");
        r = r * m / i;
    }
    return r;
}

long long isqrt(long long n) {
    if (n < 0) throw Error("isqrt of negative value");
    if (n < 2) return n;
    long long s = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (s > 0 && s * s > n) --s;
    while ((s + 1) * (s + 1) <= n) ++s;
    return s;
}

namespace {
std::atomic<int> g_workers{1};
}

void set_worker_threads(int n) { g_workers.store(n < 1 ? 1 : n); }

int worker_threads() { return g_workers.load(); }

void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn) {
    int workers = worker_threads();
    if (workers <= 1 || n < 2) {
        if (n) fn(0, n);
        return;
    }
    std::size_t nw = static_cast<std::size_t>(workers);
    if (nw > n) nw = n;
    std::size_t chunk = (n + nw - 1) / nw;
    std::vector<std::thread> pool;
    pool.reserve(nw);
    for (std::size_t w = 0; w < nw; ++w) {
        std::size_t b = w * chunk;
        std::size_t e = std::min(n, b + chunk);
        if (b >= e) break;
        pool.emplace_back([&fn, b, e] { fn(b, e); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace acm
