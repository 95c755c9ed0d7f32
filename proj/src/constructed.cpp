#include "hodis/constructed.hpp"

#include <cmath>

namespace hodis {

double eval_num_poly(const NumPoly& p, const GridField& u, int i, int j) {
    double acc = 0.0;
    for (const NumTerm& t : p) {
        double prod = t.coeff;
        for (const NumMonomialFactor& f : t.factors) {
            double v = u(i + f.di, j + f.dj);
            switch (f.exp) {
                case 1: prod *= v; break;
                case 2: prod *= v * v; break;
                case 3: prod *= v * v * v; break;
                default: prod *= std::pow(v, f.exp); break;
            }
        }
        acc += prod;
    }
    return acc;
}

double ConstructedModel::rhs_at(const GridField& u, int i, int j,
                                double gamma, double alpha, double h) const {
    const double ab = alpha * h * h;  // scaled reaction parameter
    double acc = 0.0;
    for (const NumCell& c : evolution) {
        double scale = std::pow(gamma, c.a) * std::pow(ab, c.b);
        if (scale == 0.0) continue;
        acc += scale * eval_num_poly(c.poly, u, i, j);
    }
    return acc / (h * h);
}

int ConstructedModel::symbol_radius() const {
    int r = 0;
    for (const NumCell& c : evolution)
        for (const NumTerm& t : c.poly)
            for (const NumMonomialFactor& f : t.factors)
                r = std::max({r, std::abs(f.di), std::abs(f.dj)});
    return r;
}

int NumericSubgrid::node_index(int k, int l) const {
    int idx = 0;
    for (int kk = -n; kk <= n; ++kk)
        for (int ll = -n; ll <= n; ++ll) {
            if (std::abs(kk) == n && std::abs(ll) == n) continue;
            if (kk == k && ll == l) return idx;
            ++idx;
        }
    return -1;
}

double NumericSubgrid::value_at(int k, int l, const GridField& u, int i, int j,
                                double gamma, double alpha, double h) const {
    int idx = node_index(k, l);
    if (idx < 0) return 0.0;
    const double ab = alpha * h * h;
    double acc = 0.0;
    for (const NumCell& c : node_series[idx]) {
        double scale = std::pow(gamma, c.a) * std::pow(ab, c.b);
        if (scale == 0.0) continue;
        acc += scale * eval_num_poly(c.poly, u, i, j);
    }
    return acc;
}

} // namespace hodis
