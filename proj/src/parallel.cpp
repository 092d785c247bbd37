#include "zeroapn/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace zeroapn {

unsigned worker_count()
{
    if (const char* env = std::getenv("ZEROAPN_THREADS")) {
        try {
            int v = std::stoi(env);
            if (v >= 1) return unsigned(v);
        } catch (...) {
        }
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? hc : 1;
}

void parallel_for(size_t count, const std::function<void(size_t)>& body)
{
    unsigned workers = worker_count();
    if (workers <= 1 || count < 2) {
        for (size_t i = 0; i < count; ++i) body(i);
        return;
    }
    if (workers > count) workers = unsigned(count);
    std::atomic<size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    auto run = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lk(err_mu);
                if (!err) err = std::current_exception();
                next = count;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < workers; ++t) pool.emplace_back(run);
    run();
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

} // namespace zeroapn
