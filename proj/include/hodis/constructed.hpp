#ifndef HODIS_CONSTRUCTED_HPP
#define HODIS_CONSTRUCTED_HPP

#include <string>
#include <vector>

#include "hodis/grid.hpp"

namespace hodis {

// Numeric view of a symbolic polynomial over neighbouring grid values:
// sum of coeff * prod u_{i+di, j+dj}^exp.
struct NumMonomialFactor {
    int di = 0;
    int dj = 0;
    int exp = 1;
};

struct NumTerm {
    std::vector<NumMonomialFactor> factors;
    double coeff = 0.0;
    std::string exact;  // exact fraction when built in rational mode, else empty
};

using NumPoly = std::vector<NumTerm>;

double eval_num_poly(const NumPoly& p, const GridField& u, int i, int j);

// One (a, b) order slot of a power-series-in-(coupling, reaction) object.
struct NumCell {
    int a = 0;  // coupling order
    int b = 0;  // reaction order
    NumPoly poly;
};

// Discrete model produced by the numerical subgrid construction.
//
// The evolution is stored in scaled form: the slot (a, b) of `evolution`
// contributes  gamma^a * (alpha h^2)^b / h^2 * poly(u)  to du/dt.
struct ConstructedModel {
    int n = 0;           // subgrid intervals per half element side
    int order_gamma = 0; // slots a < order_gamma
    int order_alpha = 0; // slots b < order_alpha
    int total_cap = 0;   // slots a + b < total_cap
    std::string mode;    // arithmetic used to build it
    std::vector<NumCell> evolution;

    double rhs_at(const GridField& u, int i, int j, double gamma, double alpha, double h) const;
    int symbol_radius() const;
};

// Per-node subgrid series for snapshot evaluation; node (k, l) with
// |k|,|l| <= n, the four extreme corners excluded.
struct NumericSubgrid {
    int n = 0;
    int order_gamma = 0;
    int order_alpha = 0;
    int total_cap = 0;
    // node-major (same layout as the construction), each node a list of cells
    std::vector<std::vector<NumCell>> node_series;

    int node_index(int k, int l) const;
    double value_at(int k, int l, const GridField& u, int i, int j,
                    double gamma, double alpha, double h) const;
};

} // namespace hodis

#endif
