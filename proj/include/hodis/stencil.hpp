#ifndef HODIS_STENCIL_HPP
#define HODIS_STENCIL_HPP

#include <vector>

#include "hodis/grid.hpp"

namespace hodis {

// Centred difference operators on the macroscale grid.
//
//   delta2           five-point Laplacian-type difference (x and y combined)
//   delta4           thirteen-point fourth difference (x and y combined)
//   delta6           sixth centred differences, delta6x + delta6y
//   delta2x/delta2y  one-dimensional second differences
//   delta2x_delta2y  mixed product stencil (tensor of the 1D second differences)
//   mu_delta_*       centred mean-difference (f_{+1} - f_{-1})/2 per direction
//   mu_delta3_*      centred third difference (f_{+2} - 2 f_{+1} + 2 f_{-1} - f_{-2})/2
enum class StencilId {
    delta2,
    delta4,
    delta6,
    delta2x,
    delta2y,
    delta2x_delta2y,
    mu_delta_x,
    mu_delta_y,
    mu_delta3_x,
    mu_delta3_y,
};

struct StencilWeight {
    int di;
    int dj;
    double w;
};

// signed-weight map on integer offsets; weights of the pure difference
// stencils sum to zero
const std::vector<StencilWeight>& stencil_weights(StencilId id);

// largest |di|,|dj| referenced by the stencil
int stencil_radius(StencilId id);

double apply_stencil(const GridField& f, StencilId id, int i, int j);

// stencil applied to the pointwise power of the field (power first)
double apply_stencil_power(const GridField& f, StencilId id, int power, int i, int j);

inline double stencil_of_cube(const GridField& f, StencilId id, int i, int j) {
    return apply_stencil_power(f, id, 3, i, j);
}

} // namespace hodis

#endif
