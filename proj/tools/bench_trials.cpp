// Benchmark: OpenMP trial runner against the serial reference path, with a
// byte-level equality check of the produced reports.

#include <chrono>
#include <cstdio>
#include <string>

#include <omp.h>

#include "barygeo/verify.hpp"

using namespace barygeo;

namespace {

double run_ms(VerifyConfig cfg, bool parallel, std::string& digest) {
    cfg.parallel = parallel;
    auto t0 = std::chrono::steady_clock::now();
    VerifySummary s = run_verify(cfg);
    auto t1 = std::chrono::steady_clock::now();
    digest = s.document.dump();
    if (!s.all_passed) std::fprintf(stderr, "warning: %s reported failures\n", cfg.check_id.c_str());
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    std::size_t trials = 200;
    if (argc > 1) trials = std::stoul(argv[1]);

    std::printf("trial runner benchmark: %zu trials per check, %d OpenMP threads\n", trials,
                omp_get_max_threads());
    std::printf("%-12s %12s %12s %9s %8s\n", "check", "serial[ms]", "openmp[ms]", "speedup",
                "equal");

    bool all_equal = true;
    for (const char* id : {"theorem5", "theorem7", "theorem10", "lemma9"}) {
        VerifyConfig cfg;
        cfg.check_id = id;
        cfg.seed = 42;
        cfg.trials = trials;
        std::string serial_digest, parallel_digest;
        double ts = run_ms(cfg, false, serial_digest);
        double tp = run_ms(cfg, true, parallel_digest);
        bool equal_reports = (serial_digest == parallel_digest);
        all_equal = all_equal && equal_reports;
        std::printf("%-12s %12.1f %12.1f %8.2fx %8s\n", id, ts, tp, ts / tp,
                    equal_reports ? "yes" : "NO");
    }
    if (!all_equal) {
        std::fprintf(stderr, "error: serial and OpenMP reports differ\n");
        return 1;
    }
    return 0;
}
