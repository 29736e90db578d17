#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "barygeo/metric.hpp"
#include "barygeo/rng.hpp"

namespace barygeo {

// Scalene Heronian triangles built by gluing two Pythagorean right triangles
// along a common leg: sides are the two hypotenuses and the sum of the other
// legs, so the area h*(x1+x2)/2 is rational by construction. The pool is
// enumerated deterministically and dealt in a seed-shuffled order.
class HeronianGenerator {
public:
    explicit HeronianGenerator(std::uint64_t seed);

    std::array<long, 3> next_sides();
    TriangleMetric<Rat> next();

    std::size_t pool_size() const { return order_.size(); }

private:
    std::vector<std::array<long, 3>> pool_;
    std::vector<std::size_t> order_;
    std::size_t cursor_ = 0;
};

std::vector<TriangleMetric<Rat>> generate_heronian(std::uint64_t seed, std::size_t n);

}  // namespace barygeo
