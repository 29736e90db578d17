#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "barygeo/report.hpp"

namespace barygeo {

// One trial maps its index to a report; trials must be independent (each
// derives its own RNG stream from the run seed and the index).
using TrialFn = std::function<CheckReport(std::size_t)>;

// Serial reference runner, kept alongside the OpenMP one for testing.
std::vector<CheckReport> run_trials_serial(std::size_t n, const TrialFn& fn);

// OpenMP runner; yields the same reports in the same order regardless of
// thread count, since slot i only ever holds trial i.
std::vector<CheckReport> run_trials_parallel(std::size_t n, const TrialFn& fn);

std::vector<CheckReport> run_trials(std::size_t n, const TrialFn& fn, bool parallel);

}  // namespace barygeo
