#include "barygeo/runner.hpp"

#include <exception>
#include <mutex>

namespace barygeo {

std::vector<CheckReport> run_trials_serial(std::size_t n, const TrialFn& fn) {
    std::vector<CheckReport> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
}

std::vector<CheckReport> run_trials_parallel(std::size_t n, const TrialFn& fn) {
    std::vector<CheckReport> out(n);
    std::exception_ptr error;
    std::mutex error_mutex;
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(n); ++i) {
        try {
            out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    return out;
}

std::vector<CheckReport> run_trials(std::size_t n, const TrialFn& fn, bool parallel) {
    return parallel ? run_trials_parallel(n, fn) : run_trials_serial(n, fn);
}

}  // namespace barygeo
