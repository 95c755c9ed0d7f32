#ifndef HODIS_SCALAR_HPP
#define HODIS_SCALAR_HPP

#include <boost/multiprecision/gmp.hpp>
#include <cmath>
#include <cstdlib>
#include <string>

namespace hodis {

// Exact coefficient field used by default for the subgrid construction.
using Rational = boost::multiprecision::mpq_rational;

// Arithmetic mode of the symbolic layer, selected by HOLISTIC_MODE.
enum class ArithmeticMode { rational, floating };

inline ArithmeticMode arithmetic_mode_from_env() {
    const char* env = std::getenv("HOLISTIC_MODE");
    if (!env || std::string(env) == "rational") return ArithmeticMode::rational;
    if (std::string(env) == "float") return ArithmeticMode::floating;
    return ArithmeticMode::rational;
}

template <class S>
struct ScalarOps;

template <>
struct ScalarOps<Rational> {
    static constexpr bool exact = true;
    static bool is_zero(const Rational& x) { return x.is_zero(); }
    static double to_double(const Rational& x) { return x.convert_to<double>(); }
    static Rational fraction(long long num, long long den) { return Rational(num, den); }
    static std::string to_string(const Rational& x) { return x.str(); }
    static std::string mode_name() { return "rational"; }
};

template <>
struct ScalarOps<double> {
    static constexpr bool exact = false;
    // Coefficients of the discrete models are O(1); anything below this is
    // treated as an exactly cancelled term.
    static constexpr double zero_threshold = 1e-12;
    static bool is_zero(double x) { return std::abs(x) <= zero_threshold; }
    static double to_double(double x) { return x; }
    static double fraction(long long num, long long den) {
        return static_cast<double>(num) / static_cast<double>(den);
    }
    static std::string to_string(double x) { return std::to_string(x); }
    static std::string mode_name() { return "float"; }
};

} // namespace hodis

#endif
