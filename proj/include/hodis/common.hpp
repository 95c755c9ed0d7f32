#ifndef HODIS_COMMON_HPP
#define HODIS_COMMON_HPP

#include <stdexcept>
#include <string>

namespace hodis {

// Bad arguments / configuration.  CLI maps this to exit code 1.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Numerical failure (divergence, singular matrix, NaN, ...).  Exit code 2.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define HODIS_REQUIRE(cond, msg) \
    do { if (!(cond)) throw ::hodis::ValidationError(msg); } while (0)

#define HODIS_NUMERIC_CHECK(cond, msg) \
    do { if (!(cond)) throw ::hodis::NumericalError(msg); } while (0)

} // namespace hodis

#endif
