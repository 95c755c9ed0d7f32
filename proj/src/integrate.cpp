#include "hodis/integrate.hpp"

#include <cmath>
#include <string>

namespace hodis {

double explicit_step_bound(const ModelSpec& m) {
    double g = std::max(std::abs(m.gamma), 1e-12);
    return 0.2 * m.h * m.h / g;
}

namespace {

bool finite(const GridField& u) {
    for (double v : u.values())
        if (!std::isfinite(v)) return false;
    return true;
}

void axpy(GridField& y, double a, const GridField& x) {
    for (std::size_t k = 0; k < y.values().size(); ++k) y.values()[k] += a * x.values()[k];
}

} // namespace

Trajectory integrate(const ModelSpec& m, const GridField& u0, double t_end, double dt,
                     int snapshot_stride) {
    HODIS_REQUIRE(dt > 0.0, "time step must be positive");
    HODIS_REQUIRE(t_end >= 0.0, "end time must be nonnegative");
    HODIS_REQUIRE(snapshot_stride >= 1, "snapshot stride must be >= 1");
    HODIS_REQUIRE(dt <= explicit_step_bound(m) * (1.0 + 1e-12),
                  "time step exceeds the explicit stability bound 0.2 h^2 / gamma");

    Trajectory traj;
    GridField u = u0;
    traj.times.push_back(0.0);
    traj.states.push_back(u);

    const long nsteps = static_cast<long>(std::ceil(t_end / dt - 1e-12));
    for (long s = 0; s < nsteps; ++s) {
        double t = static_cast<double>(s) * dt;
        double step = std::min(dt, t_end - t);

        GridField k1 = rhs(m, u);
        GridField u2 = u;
        axpy(u2, 0.5 * step, k1);
        GridField k2 = rhs(m, u2);
        GridField u3 = u;
        axpy(u3, 0.5 * step, k2);
        GridField k3 = rhs(m, u3);
        GridField u4 = u;
        axpy(u4, step, k3);
        GridField k4 = rhs(m, u4);

        axpy(u, step / 6.0, k1);
        axpy(u, step / 3.0, k2);
        axpy(u, step / 3.0, k3);
        axpy(u, step / 6.0, k4);

        if (!finite(u))
            throw NumericalError("integration diverged at step " + std::to_string(s + 1) +
                                 " (t = " + std::to_string(t + step) + ")");

        if ((s + 1) % snapshot_stride == 0 || s + 1 == nsteps) {
            traj.times.push_back(t + step);
            traj.states.push_back(u);
        }
    }
    return traj;
}

} // namespace hodis
