#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

#include "wstrat/rational.hpp"

namespace wstrat {

// Process-wide engine knobs and observability counters.  The CLI configures
// this once per run; library code polls the deadline inside long loops and
// bumps counters as work happens.
class Engine {
  public:
    static Engine& get();

    void set_threads(int n) { threads_ = n < 1 ? 1 : n; }
    int threads() const { return threads_; }

    void set_deadline_after(double seconds);
    void clear_deadline() { has_deadline_ = false; }
    // Throws timeout_error once the configured wall-clock budget is spent.
    void check_deadline() const;

    void reset_counters();
    void count_gb_call() { ++gb_calls_; }
    void count_decomposition() { ++decompositions_; }
    void note_basis_size(std::uint64_t n);
    std::uint64_t gb_calls() const { return gb_calls_.load(); }
    std::uint64_t decompositions() const { return decompositions_.load(); }
    std::uint64_t max_basis_size() const { return max_basis_.load(); }

  private:
    Engine() = default;
    int threads_ = 1;
    std::atomic<bool> has_deadline_{false};
    std::chrono::steady_clock::time_point deadline_{};
    std::atomic<std::uint64_t> gb_calls_{0};
    std::atomic<std::uint64_t> decompositions_{0};
    std::atomic<std::uint64_t> max_basis_{0};
};

// Applies fn to every index in [0, n); runs on the configured number of
// threads and rethrows the first exception raised by any worker.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace wstrat
