#ifndef HODIS_GRID_HPP
#define HODIS_GRID_HPP

#include <vector>

#include "hodis/common.hpp"

namespace hodis {

enum class Symmetry { periodic, odd_periodic };

// Macroscale grid of points (x_i, y_j) with constant spacing h.
//
// periodic:      mx*my stored values, logical indices 0..mx-1, plain modular
//                wrap for ghost access.
// odd_periodic:  the represented domain is [0,pi]x[0,pi]; only the open
//                fundamental cell is stored (logical indices 1..mx-1), the
//                field vanishes on the symmetry lines x,y in {0,pi} and ghost
//                access returns sign-flipped mirror values.
struct MacroGrid {
    double h = 1.0;
    int mx = 2;
    int my = 2;
    Symmetry symmetry = Symmetry::periodic;
    double x0 = 0.0;
    double y0 = 0.0;

    MacroGrid() = default;
    MacroGrid(double h_, int mx_, int my_, Symmetry sym, double x0_ = 0.0, double y0_ = 0.0)
        : h(h_), mx(mx_), my(my_), symmetry(sym), x0(x0_), y0(y0_) {
        HODIS_REQUIRE(h > 0.0, "grid spacing must be positive");
        HODIS_REQUIRE(mx >= 2 && my >= 2, "at least two elements per direction");
    }

    // number of stored values per direction
    int store_x() const { return symmetry == Symmetry::periodic ? mx : mx - 1; }
    int store_y() const { return symmetry == Symmetry::periodic ? my : my - 1; }
    int size() const { return store_x() * store_y(); }

    // first stored logical index
    int base_index() const { return symmetry == Symmetry::periodic ? 0 : 1; }

    double x(int logical_i) const { return x0 + h * logical_i; }
    double y(int logical_j) const { return y0 + h * logical_j; }

    bool operator==(const MacroGrid&) const = default;
};

// Resolution of an arbitrary logical index onto the stored fundamental cell.
struct FoldedIndex {
    int store = -1;   // storage slot, -1 when the value is identically zero
    int sign = 0;     // +1, -1, or 0 on a symmetry line
};

FoldedIndex fold_index(int i, int m, Symmetry sym);

// Macroscale values u_{i,j} living on a MacroGrid.
class GridField {
public:
    GridField() = default;
    explicit GridField(const MacroGrid& grid, double fill = 0.0)
        : grid_(grid), values_(static_cast<std::size_t>(grid.size()), fill) {}

    const MacroGrid& grid() const { return grid_; }
    int store_x() const { return grid_.store_x(); }
    int store_y() const { return grid_.store_y(); }
    std::size_t size() const { return values_.size(); }

    // storage access, 0-based storage indices
    double& at_store(int si, int sj) { return values_[index(si, sj)]; }
    double at_store(int si, int sj) const { return values_[index(si, sj)]; }

    std::vector<double>& values() { return values_; }
    const std::vector<double>& values() const { return values_; }

    // value at arbitrary logical indices, resolved through the symmetry map
    double operator()(int i, int j) const {
        FoldedIndex fx = fold_index(i, grid_.mx, grid_.symmetry);
        FoldedIndex fy = fold_index(j, grid_.my, grid_.symmetry);
        if (fx.sign == 0 || fy.sign == 0) return 0.0;
        return fx.sign * fy.sign * values_[index(fx.store, fy.store)];
    }

    // value / assignment by logical index restricted to the stored cell
    double& at_logical(int i, int j) {
        return values_[index(i - grid_.base_index(), j - grid_.base_index())];
    }
    double at_logical(int i, int j) const {
        return values_[index(i - grid_.base_index(), j - grid_.base_index())];
    }

    double max_abs() const;
    double rms() const;

    GridField& operator+=(const GridField& o);
    GridField& operator*=(double s);

private:
    std::size_t index(int si, int sj) const {
        return static_cast<std::size_t>(si) * grid_.store_y() + sj;
    }

    MacroGrid grid_;
    std::vector<double> values_;
};

inline double field_at(const GridField& f, int i, int j) { return f(i, j); }

} // namespace hodis

#endif
