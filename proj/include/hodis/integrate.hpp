#ifndef HODIS_INTEGRATE_HPP
#define HODIS_INTEGRATE_HPP

#include <vector>

#include "hodis/model.hpp"

namespace hodis {

struct Trajectory {
    std::vector<double> times;        // strictly increasing
    std::vector<GridField> states;    // constant dimensions
};

// Classic fourth-order explicit one-step integration with fixed step.
//
// The step must satisfy dt <= 0.2 h^2 / gamma so the coupling part of the
// spectrum stays well inside the stability region; violations are rejected.
// A non-finite state aborts with a diagnostic naming the first bad step.
Trajectory integrate(const ModelSpec& m, const GridField& u0, double t_end, double dt,
                     int snapshot_stride = 1);

double explicit_step_bound(const ModelSpec& m);

} // namespace hodis

#endif
