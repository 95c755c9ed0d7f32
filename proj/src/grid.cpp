#include "hodis/grid.hpp"

#include <cmath>

namespace hodis {

FoldedIndex fold_index(int i, int m, Symmetry sym) {
    if (sym == Symmetry::periodic) {
        int r = i % m;
        if (r < 0) r += m;
        return {r, +1};
    }
    // odd symmetry about 0 and m combined with 2m-periodicity
    int p = 2 * m;
    int r = i % p;
    if (r < 0) r += p;
    if (r == 0 || r == m) return {-1, 0};
    if (r > m) return {p - r - 1, -1};
    return {r - 1, +1};
}

double GridField::max_abs() const {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::abs(v));
    return m;
}

double GridField::rms() const {
    if (values_.empty()) return 0.0;
    double s = 0.0;
    for (double v : values_) s += v * v;
    return std::sqrt(s / static_cast<double>(values_.size()));
}

GridField& GridField::operator+=(const GridField& o) {
    HODIS_REQUIRE(o.values_.size() == values_.size(), "field size mismatch");
    for (std::size_t k = 0; k < values_.size(); ++k) values_[k] += o.values_[k];
    return *this;
}

GridField& GridField::operator*=(double s) {
    for (double& v : values_) v *= s;
    return *this;
}

} // namespace hodis
