#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "barygeo/centers.hpp"
#include "barygeo/report.hpp"

namespace barygeo {

// Configuration of one `verify` run: a named check executed over seeded
// trials (or a single explicit configuration).
struct VerifyConfig {
    std::string check_id;
    std::optional<std::array<Rat, 3>> sides;
    std::uint64_t seed = 0;
    std::size_t trials = 100;
    bool use_float = false;
    std::optional<HPoint<Rat>> p;
    std::optional<HPoint<Rat>> q;
    // Named-center stand-ins for p/q, resolved against each trial triangle.
    std::optional<CenterId> p_center;
    std::optional<CenterId> q_center;
    std::optional<Rat> q_on_conic;  // pencil parameter for an exact on-conic Q
    std::optional<Rat> k;
    bool parallel = true;
};

struct VerifySummary {
    bool all_passed = false;
    json document;  // { schema_version, check_id, backend, seed, trials, passed, reports }
};

const std::vector<std::string>& verify_check_ids();

// Runs the configured check; throws geometry_error for configuration errors
// (unknown check id, equilateral input where the statement is undefined).
VerifySummary run_verify(const VerifyConfig& cfg);

}  // namespace barygeo
