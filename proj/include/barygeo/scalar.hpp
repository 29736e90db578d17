#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace barygeo {

// Exact backend: arbitrary-precision rationals, always canonical.
using Rat = mpq_class;

// Raised by geometric operations whose preconditions are violated
// (infinite point where a finite one is required, degenerate circle, ...).
class geometry_error : public std::runtime_error {
public:
    explicit geometry_error(const std::string& what) : std::runtime_error(what) {}
};

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rat> {
    static constexpr bool exact = true;

    static const char* backend_name() { return "exact"; }

    // `scale` is ignored: exact comparisons are tolerance-free.
    static bool is_zero(const Rat& v, const Rat& /*scale*/) { return sgn(v) == 0; }

    static Rat abs(const Rat& v) { return ::abs(v); }

    // Rational square root when the argument is a perfect square of a rational.
    static bool sqrt(const Rat& v, Rat& out) {
        if (sgn(v) < 0) return false;
        if (sgn(v) == 0) { out = 0; return true; }
        const mpz_class& num = v.get_num();
        const mpz_class& den = v.get_den();
        if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
            return false;
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
        out = Rat(rn, rd);
        return true;
    }

    static double to_double(const Rat& v) { return v.get_d(); }

    static std::string to_string(const Rat& v) { return v.get_str(); }
};

template <>
struct scalar_traits<double> {
    static constexpr bool exact = false;

    // Relative tolerance for every equality/membership predicate on the
    // float backend. Mutable so the CLI --tol flag can override it.
    static inline double tolerance = 1e-9;

    static const char* backend_name() { return "float"; }

    static bool is_zero(double v, double scale) {
        if (scale == 0.0) return v == 0.0;
        return std::abs(v) <= tolerance * std::abs(scale);
    }

    static double abs(double v) { return std::abs(v); }

    static bool sqrt(double v, double& out) {
        if (v < 0) return false;
        out = std::sqrt(v);
        return true;
    }

    static double to_double(double v) { return v; }

    static std::string to_string(double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return buf;
    }
};

}  // namespace barygeo
