#include "barygeo/heronian.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace barygeo {

namespace {

constexpr long kMaxLeg = 120;
constexpr long kMaxSide = 260;

std::vector<std::array<long, 3>> build_pool() {
    // Right triangles (leg, other leg, hypotenuse) indexed by one leg.
    std::map<long, std::vector<std::pair<long, long>>> by_leg;
    for (long m = 2; m * m <= 2 * kMaxLeg; ++m) {
        for (long n = 1; n < m; ++n) {
            if ((m - n) % 2 == 0 || std::gcd(m, n) != 1) continue;
            long x = m * m - n * n, y = 2 * m * n, z = m * m + n * n;
            for (long k = 1; k * std::min(x, y) <= kMaxLeg; ++k) {
                if (k * x <= kMaxLeg) by_leg[k * x].push_back({k * y, k * z});
                if (k * y <= kMaxLeg) by_leg[k * y].push_back({k * x, k * z});
            }
        }
    }
    std::set<std::array<long, 3>> seen;
    for (auto& [leg, rights] : by_leg) {
        std::sort(rights.begin(), rights.end());
        rights.erase(std::unique(rights.begin(), rights.end()), rights.end());
        for (std::size_t i = 0; i < rights.size(); ++i) {
            for (std::size_t j = i + 1; j < rights.size(); ++j) {
                auto [x1, z1] = rights[i];
                auto [x2, z2] = rights[j];
                std::array<long, 3> sides{z1, z2, x1 + x2};
                std::sort(sides.begin(), sides.end());
                if (sides[2] > kMaxSide) continue;
                // Scalene filter.
                if (sides[0] == sides[1] || sides[1] == sides[2]) continue;
                long g = std::gcd(std::gcd(sides[0], sides[1]), sides[2]);
                seen.insert({sides[0] / g, sides[1] / g, sides[2] / g});
            }
        }
    }
    return {seen.begin(), seen.end()};
}

}  // namespace

HeronianGenerator::HeronianGenerator(std::uint64_t seed) : pool_(build_pool()) {
    order_.resize(pool_.size());
    for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = i;
    // Fisher-Yates with an explicit PRNG; std::shuffle sequences are
    // implementation-defined and the reports must be byte-reproducible.
    SplitMix64 rng(seed);
    for (std::size_t i = order_.size(); i > 1; --i)
        std::swap(order_[i - 1], order_[rng.below(i)]);
}

std::array<long, 3> HeronianGenerator::next_sides() {
    if (cursor_ >= order_.size())
        throw geometry_error("Heronian pool exhausted");
    return pool_[order_[cursor_++]];
}

TriangleMetric<Rat> HeronianGenerator::next() {
    std::array<long, 3> s = next_sides();
    return TriangleMetric<Rat>::from_sides(Rat(s[0]), Rat(s[1]), Rat(s[2]));
}

std::vector<TriangleMetric<Rat>> generate_heronian(std::uint64_t seed, std::size_t n) {
    HeronianGenerator gen(seed);
    std::vector<TriangleMetric<Rat>> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(gen.next());
    return out;
}

}  // namespace barygeo
