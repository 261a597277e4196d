#include "wstrat/engine.hpp"

namespace wstrat {

Engine& Engine::get() {
    static Engine instance;
    return instance;
}

void Engine::set_deadline_after(double seconds) {
    deadline_ = std::chrono::steady_clock::now() +
                std::chrono::microseconds(
                    static_cast<std::int64_t>(seconds * 1e6));
    has_deadline_ = true;
}

void Engine::check_deadline() const {
    if (has_deadline_ && std::chrono::steady_clock::now() > deadline_)
        throw timeout_error("computation exceeded the configured time limit");
}

void Engine::reset_counters() {
    gb_calls_ = 0;
    decompositions_ = 0;
    max_basis_ = 0;
}

void Engine::note_basis_size(std::uint64_t n) {
    std::uint64_t cur = max_basis_.load();
    while (cur < n && !max_basis_.compare_exchange_weak(cur, n)) {
    }
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    int workers = Engine::get().threads();
    if (workers <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    if (static_cast<std::size_t>(workers) > n)
        workers = static_cast<int>(n);
    std::atomic<std::size_t> next{0};
    std::mutex err_mutex;
    std::exception_ptr first_error;
    auto body = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(body);
    for (std::thread& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace wstrat
