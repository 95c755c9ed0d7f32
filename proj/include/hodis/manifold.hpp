#ifndef HODIS_MANIFOLD_HPP
#define HODIS_MANIFOLD_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hodis/correction.hpp"
#include "hodis/series.hpp"

namespace hodis {

// Subgrid slow-manifold data for the generic element: one series per subgrid
// node plus the scaled macroscale evolution.
//
// Everything is kept in spacing-free scaled variables.  With coupling g and
// reaction a, the slot (p, q) of `evolution` contributes
//     g^p (a h^2)^q / h^2 * poly(neighbouring grid values)
// to du/dt, and the node series evaluate directly to the subgrid field.
template <class S>
struct SubgridManifold {
    int n = 2;
    SeriesShape shape;
    NodeGrid nodes;
    std::vector<Series2<S>> v;   // one per node, NodeGrid order
    Series2<S> evolution;

    SubgridManifold(int n_, SeriesShape shape_)
        : n(n_), shape(shape_), nodes(n_),
          v(static_cast<std::size_t>(nodes.count()), Series2<S>(shape_)),
          evolution(shape_) {
        Poly<S> base = Poly<S>::symbol(Sym{0, 0});
        for (auto& s : v) s.at(0, 0) = base;
    }

    const Series2<S>& at(int k, int l) const { return v[static_cast<std::size_t>(nodes.index(k, l))]; }
    Series2<S>& at(int k, int l) { return v[static_cast<std::size_t>(nodes.index(k, l))]; }
};

namespace detail {

template <class S>
std::map<Sym, Series2<S>> translated_evolution_cache(const SubgridManifold<S>& m,
                                                     SeriesShape out_shape) {
    std::map<Sym, Series2<S>> cache;
    std::vector<Sym> syms;
    for (const auto& s : m.v) s.collect_symbols(syms);
    std::sort(syms.begin(), syms.end());
    syms.erase(std::unique(syms.begin(), syms.end()), syms.end());
    for (Sym s : syms) cache.emplace(s, m.evolution.translated(s.di, s.dj).restricted(out_shape));
    return cache;
}

} // namespace detail

// Interior equation residuals, one series per interior node in row order
// (k outer from -n+1, l inner).  Scaled form:
//     n^2 * (five-point difference of v) + a_s (v - v^3) - sum_s dv/du_s T_s[G]
// where a_s is the scaled reaction variable and T_s shifts all symbols of the
// evolution by the offset of symbol s.  `out_shape` bounds the computed slots;
// slots the manifold does not carry are treated as zero, so a shape extended
// in the coupling order yields the next-order residuals.
template <class S>
std::vector<Series2<S>> residual_pde(const SubgridManifold<S>& m, SeriesShape out_shape) {
    const int n = m.n;
    const S n2 = S(n * n);
    auto gcache = detail::translated_evolution_cache(m, out_shape);

    std::vector<Series2<S>> out;
    out.reserve(static_cast<std::size_t>(m.nodes.interior_count()));
    for (int k = -n + 1; k <= n - 1; ++k)
        for (int l = -n + 1; l <= n - 1; ++l) {
            const Series2<S>& vc = m.at(k, l);
            Series2<S> r = (m.at(k + 1, l) + m.at(k - 1, l) + m.at(k, l + 1) + m.at(k, l - 1) -
                            vc - vc - vc - vc)
                               .restricted(out_shape)
                               .scaled(n2);
            Series2<S> v2 = Series2<S>::mul(vc, vc, out_shape);
            Series2<S> v3 = Series2<S>::mul(v2, vc, out_shape);
            r += (vc.restricted(out_shape) - v3).shifted_reaction();
            for (const auto& [s, gt] : gcache) {
                Series2<S> dv = vc.derivative(s);
                if (dv.is_zero()) continue;
                r -= Series2<S>::mul(dv, gt, out_shape);
            }
            out.push_back(std::move(r));
        }
    return out;
}

// Coupling-condition residuals for one edge family.  Row order matches the
// correction system: low side then high side, running index ascending.
//     v_edge - coupling * (translated centre value) - (1 - coupling) * v_centre
template <class S>
std::vector<Series2<S>> residual_ibc_x(const SubgridManifold<S>& m, SeriesShape out_shape) {
    const int n = m.n;
    std::vector<Series2<S>> out;
    for (int side = 0; side < 2; ++side) {
        int sk = side == 0 ? -n : n;
        int di = side == 0 ? -1 : 1;
        for (int l = -n + 1; l <= n - 1; ++l) {
            const Series2<S>& centre = m.at(0, l);
            Series2<S> r = (m.at(sk, l) - centre).restricted(out_shape);
            r -= (centre.translated(di, 0) - centre).restricted(out_shape).shifted_coupling();
            out.push_back(std::move(r));
        }
    }
    return out;
}

template <class S>
std::vector<Series2<S>> residual_ibc_y(const SubgridManifold<S>& m, SeriesShape out_shape) {
    const int n = m.n;
    std::vector<Series2<S>> out;
    for (int side = 0; side < 2; ++side) {
        int sl = side == 0 ? -n : n;
        int dj = side == 0 ? -1 : 1;
        for (int k = -n + 1; k <= n - 1; ++k) {
            const Series2<S>& centre = m.at(k, 0);
            Series2<S> r = (m.at(k, sl) - centre).restricted(out_shape);
            r -= (centre.translated(0, dj) - centre).restricted(out_shape).shifted_coupling();
            out.push_back(std::move(r));
        }
    }
    return out;
}

template <class S>
double residual_cell_max(const std::vector<Series2<S>>& rows, int a, int b) {
    double mx = 0.0;
    for (const auto& r : rows)
        for (const auto& [mono, c] : r.at(a, b).terms())
            mx = std::max(mx, std::abs(ScalarOps<S>::to_double(c)));
    return mx;
}

// Weighted projection of one residual slot onto the adjoint null weight
// (the pyramid (1-|k|/n)(1-|l|/n)), trapezoidal products over the subgrid,
// normalized by the product of the pyramid with the constant mode.  For the
// correction system this functional reproduces the evolution component of the
// exact solve, so it also yields the next-order evolution without the
// next-order subgrid field.
template <class S>
Poly<S> pyramid_project_cell(int n,
                             const std::vector<Series2<S>>& res_interior,
                             const std::vector<Series2<S>>& res_edge_x,
                             const std::vector<Series2<S>>& res_edge_y,
                             int a, int b) {
    Poly<S> acc;
    int idx = 0;
    for (int k = -n + 1; k <= n - 1; ++k)
        for (int l = -n + 1; l <= n - 1; ++l) {
            S w = ScalarOps<S>::fraction(n - std::abs(k), n) *
                  ScalarOps<S>::fraction(n - std::abs(l), n);
            acc += res_interior[static_cast<std::size_t>(idx++)].at(a, b).scaled(w);
        }
    Poly<S> edge;
    for (int side = 0; side < 2; ++side)
        for (int l = -n + 1; l <= n - 1; ++l) {
            S w = ScalarOps<S>::fraction(n - std::abs(l), n);
            std::size_t r = static_cast<std::size_t>(side * (2 * n - 1) + (l + n - 1));
            edge += res_edge_x[r].at(a, b).scaled(w);
        }
    for (int side = 0; side < 2; ++side)
        for (int k = -n + 1; k <= n - 1; ++k) {
            S w = ScalarOps<S>::fraction(n - std::abs(k), n);
            std::size_t r = static_cast<std::size_t>(side * (2 * n - 1) + (k + n - 1));
            edge += res_edge_y[r].at(a, b).scaled(w);
        }
    acc -= edge.scaled(S(n));
    return acc.scaled(ScalarOps<S>::fraction(1, static_cast<long long>(n) * n));
}

struct ConstructOptions {
    int max_iterations = 0;  // 0: order_gamma + order_alpha + 2
    bool verify = true;      // re-evaluate all residuals after convergence
};

namespace detail {
template <class S>
void solve_band(SubgridManifold<S>& m, const CorrectionSystem<S>& sys,
                const std::vector<Series2<S>>& res_int, const std::vector<Series2<S>>& res_x,
                const std::vector<Series2<S>>& res_y, int a, int b);
} // namespace detail

// Residual-driven construction of the subgrid manifold.  Starting from the
// piecewise-constant state, each pass solves the once-factorized correction
// system against every monomial of the lowest unconverged total order until
// every slot inside the truncation has exactly zero residual (or below the
// floating zero threshold).
template <class S>
SubgridManifold<S> construct(int n, int order_gamma, int order_alpha, int total_cap = 0,
                             ConstructOptions opts = {}) {
    HODIS_REQUIRE(n >= 2, "subgrid resolution must be at least 2");
    HODIS_REQUIRE(order_gamma >= 1 && order_alpha >= 1, "truncation orders must be >= 1");
    SeriesShape shape{order_gamma, order_alpha, total_cap};
    SubgridManifold<S> m(n, shape);
    CorrectionSystem<S> sys(n);

    const int max_iters =
        opts.max_iterations > 0 ? opts.max_iterations : order_gamma + order_alpha + 2;
    const int top_order = shape.effective_cap() - 1;
    int iters = 0;

    for (int d = 1; d <= top_order; ++d) {
        for (;;) {
            SeriesShape band{order_gamma, order_alpha, d + 1};
            auto res_int = residual_pde(m, band);
            auto res_x = residual_ibc_x(m, band);
            auto res_y = residual_ibc_y(m, band);

            double band_max = 0.0;
            for (int a = 0; a <= d; ++a) {
                int b = d - a;
                if (!shape.contains(a, b)) continue;
                band_max = std::max({band_max, residual_cell_max(res_int, a, b),
                                     residual_cell_max(res_x, a, b),
                                     residual_cell_max(res_y, a, b)});
            }
            if (band_max == 0.0 || (!ScalarOps<S>::exact && band_max < 1e-12)) break;

            HODIS_NUMERIC_CHECK(++iters <= max_iters,
                                "subgrid construction failed to converge; largest residual " +
                                    std::to_string(band_max));

            for (int a = 0; a <= d; ++a) {
                int b = d - a;
                if (!shape.contains(a, b)) continue;
                detail::solve_band(m, sys, res_int, res_x, res_y, a, b);
            }
        }
    }

    if (opts.verify) {
        auto res_int = residual_pde(m, shape);
        auto res_x = residual_ibc_x(m, shape);
        auto res_y = residual_ibc_y(m, shape);
        double worst = 0.0;
        for (int a = 0; a < shape.order_g; ++a)
            for (int b = 0; b < shape.order_a; ++b) {
                if (!shape.contains(a, b)) continue;
                worst = std::max({worst, residual_cell_max(res_int, a, b),
                                  residual_cell_max(res_x, a, b), residual_cell_max(res_y, a, b)});
            }
        HODIS_NUMERIC_CHECK(worst == 0.0 || (!ScalarOps<S>::exact && worst < 1e-12),
                            "constructed manifold leaves residual " + std::to_string(worst));
    }
    return m;
}

namespace detail {

template <class S>
void solve_band(SubgridManifold<S>& m, const CorrectionSystem<S>& sys,
                const std::vector<Series2<S>>& res_int, const std::vector<Series2<S>>& res_x,
                const std::vector<Series2<S>>& res_y, int a, int b) {
    const int dim = sys.dim();
    const NodeGrid& nodes = sys.nodes();
    const int n = nodes.n();

    // right-hand sides in row order; the correction cancels the residual
    std::vector<const Poly<S>*> rhs(static_cast<std::size_t>(dim), nullptr);
    {
        std::size_t idx = 0;
        for (int k = -n + 1; k <= n - 1; ++k)
            for (int l = -n + 1; l <= n - 1; ++l)
                rhs[static_cast<std::size_t>(sys.row_interior(k, l))] = &res_int[idx++].at(a, b);
        for (int side = 0; side < 2; ++side)
            for (int l = -n + 1; l <= n - 1; ++l)
                rhs[static_cast<std::size_t>(sys.row_edge_x(side == 0 ? -1 : 1, l))] =
                    &res_x[static_cast<std::size_t>(side * (2 * n - 1) + (l + n - 1))].at(a, b);
        for (int side = 0; side < 2; ++side)
            for (int k = -n + 1; k <= n - 1; ++k)
                rhs[static_cast<std::size_t>(sys.row_edge_y(side == 0 ? -1 : 1, k))] =
                    &res_y[static_cast<std::size_t>(side * (2 * n - 1) + (k + n - 1))].at(a, b);
    }

    std::vector<Monomial> monos;
    for (const Poly<S>* p : rhs)
        if (p)
            for (const auto& [mono, c] : p->terms()) monos.push_back(mono);
    std::sort(monos.begin(), monos.end());
    monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
    if (monos.empty()) return;

    std::vector<std::vector<typename Poly<S>::Term>> acc(static_cast<std::size_t>(dim));
    std::vector<S> r(static_cast<std::size_t>(dim));
    for (const Monomial& mono : monos) {
        for (int row = 0; row < dim; ++row)
            r[static_cast<std::size_t>(row)] =
                rhs[static_cast<std::size_t>(row)] ? -rhs[static_cast<std::size_t>(row)]->coefficient(mono)
                                                   : S(0);
        sys.solve(r);
        for (int u = 0; u < dim; ++u)
            if (!ScalarOps<S>::is_zero(r[static_cast<std::size_t>(u)]))
                acc[static_cast<std::size_t>(u)].push_back({mono, r[static_cast<std::size_t>(u)]});
    }

    for (int u = 0; u < dim - 1; ++u) {
        if (acc[static_cast<std::size_t>(u)].empty()) continue;
        Poly<S> p;
        for (auto& t : acc[static_cast<std::size_t>(u)]) p += Poly<S>::term(t.first, t.second);
        m.v[static_cast<std::size_t>(u)].at(a, b) += p;
    }
    if (!acc[static_cast<std::size_t>(sys.gcol())].empty()) {
        Poly<S> p;
        for (auto& t : acc[static_cast<std::size_t>(sys.gcol())])
            p += Poly<S>::term(t.first, t.second);
        m.evolution.at(a, b) += p;
    }
}

} // namespace detail

// Next-coupling-order corrections to the evolution obtained from the
// converged manifold by projecting the next-order residuals onto the pyramid
// weight.  Returns a series one order wider in the coupling; only the new
// slots are populated.
template <class S>
Series2<S> solvability_correction(const SubgridManifold<S>& m) {
    SeriesShape ext{m.shape.order_g + 1, m.shape.order_a,
                    m.shape.cap > 0 ? m.shape.cap + 1 : 0};
    auto res_int = residual_pde(m, ext);
    auto res_x = residual_ibc_x(m, ext);
    auto res_y = residual_ibc_y(m, ext);

    Series2<S> out(ext);
    const int a = m.shape.order_g;
    for (int b = 0; b < ext.order_a; ++b) {
        if (!ext.contains(a, b)) continue;
        out.at(a, b) = pyramid_project_cell(m.n, res_int, res_x, res_y, a, b);
    }
    return out;
}

} // namespace hodis

#endif
