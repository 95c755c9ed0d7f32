#include "hodis/model.hpp"

#include <cmath>

namespace hodis {

std::string model_kind_name(ModelKind k) {
    switch (k) {
        case ModelKind::centered2: return "centered2";
        case ModelKind::centered4: return "centered4";
        case ModelKind::holistic_g3a3: return "holistic_g3a3";
        case ModelKind::holistic_g4a4: return "holistic_g4a4";
        case ModelKind::constructed: return "constructed";
    }
    return "?";
}

ModelKind model_kind_from_name(const std::string& name) {
    if (name == "centered2") return ModelKind::centered2;
    if (name == "centered4") return ModelKind::centered4;
    if (name == "holistic_g3a3") return ModelKind::holistic_g3a3;
    if (name == "holistic_g4a4") return ModelKind::holistic_g4a4;
    if (name == "constructed") return ModelKind::constructed;
    throw ValidationError("unknown model kind: " + name);
}

namespace {

// composition helper: outer stencil applied to the field of inner-stencil values
double compose(const GridField& u, StencilId outer, StencilId inner, int i, int j) {
    double acc = 0.0;
    for (const auto& s : stencil_weights(outer))
        acc += s.w * apply_stencil(u, inner, i + s.di, j + s.dj);
    return acc;
}

double rhs_g3a3_at(const ModelSpec& m, const GridField& u, int i, int j) {
    const double h2 = m.h * m.h;
    const double uij = u(i, j);
    const double d2 = apply_stencil(u, StencilId::delta2, i, j);
    const double d4 = apply_stencil(u, StencilId::delta4, i, j);
    const double d2c = apply_stencil_power(u, StencilId::delta2, 3, i, j);
    return m.gamma / h2 * d2 + m.alpha * (uij - uij * uij * uij)
         - m.gamma * m.gamma / (12.0 * h2) * d4
         + m.alpha * m.gamma * (d2c / 12.0 - uij * uij * d2 / 4.0);
}

} // namespace

double rhs_g4a4_at(const ModelSpec& m, const GridField& u, int i, int j, const G4Groups& g) {
    const double h2 = m.h * m.h;
    const double ga = m.gamma;
    const double al = m.alpha;
    const double uij = u(i, j);

    const double d2 = apply_stencil(u, StencilId::delta2, i, j);
    const double d4 = apply_stencil(u, StencilId::delta4, i, j);
    const double d2c = apply_stencil_power(u, StencilId::delta2, 3, i, j);

    double acc = ga / h2 * d2 - ga * ga / (12.0 * h2) * d4
               + al * (uij - uij * uij * uij)
               + ga * al / 12.0 * (d2c - 3.0 * uij * uij * d2);

    if (g.coupling3) {
        const double d6 = apply_stencil(u, StencilId::delta6, i, j);
        acc += ga * ga * ga / (90.0 * h2) * d6;
    }

    if (g.coupling2_reaction) {
        const double dxy = apply_stencil(u, StencilId::delta2x_delta2y, i, j);
        const double d2x = apply_stencil(u, StencilId::delta2x, i, j);
        const double d2y = apply_stencil(u, StencilId::delta2y, i, j);
        const double d2sq = apply_stencil_power(u, StencilId::delta2, 2, i, j);
        const double d2xsq = apply_stencil_power(u, StencilId::delta2x, 2, i, j);
        const double d2ysq = apply_stencil_power(u, StencilId::delta2y, 2, i, j);
        const double mdx = apply_stencil(u, StencilId::mu_delta_x, i, j);
        const double mdy = apply_stencil(u, StencilId::mu_delta_y, i, j);
        const double mdx2 = apply_stencil_power(u, StencilId::mu_delta_x, 2, i, j);
        const double mdy2 = apply_stencil_power(u, StencilId::mu_delta_y, 2, i, j);
        const double md3x = apply_stencil(u, StencilId::mu_delta3_x, i, j);
        const double md3y = apply_stencil(u, StencilId::mu_delta3_y, i, j);
        const double mdy_d2x = compose(u, StencilId::mu_delta_y, StencilId::delta2x, i, j);
        const double mdx_d2y = compose(u, StencilId::mu_delta_x, StencilId::delta2y, i, j);
        const double d4c = apply_stencil_power(u, StencilId::delta4, 3, i, j);
        const double dxyc = apply_stencil_power(u, StencilId::delta2x_delta2y, 3, i, j);

        double b = uij * uij * (222.0 * d2 + 24.0 * d4 - 3.0 * dxy)
                 + uij * (-102.0 * d2sq + 36.0 * d2 * d2 + 6.0 * d2x * d2y
                          - 144.0 * (mdx * mdx + mdy * mdy))
                 - 6.0 * mdy_d2x * mdy2 - 6.0 * mdx_d2y * mdx2
                 + 12.0 * (mdx2 * mdx + mdy2 * mdy)
                 + 12.0 * (md3x * mdx2 + md3y * mdy2)
                 - 1.5 * d2sq * dxy + 3.0 * d4 * d2sq
                 - 3.0 * d2xsq * d2y - 3.0 * d2ysq * d2x
                 + 9.0 * d2sq * d2
                 - 8.0 * d4c - 6.0 * d2c + dxyc;
        acc += ga * ga * al / 720.0 * b;
    }

    if (g.coupling_reaction2) {
        const double d2q = apply_stencil_power(u, StencilId::delta2, 5, i, j);
        double b = 3.0 * uij * uij * uij * uij * d2
                 + 6.0 * uij * uij * (d2 - d2c)
                 - 2.0 * d2c + 3.0 * d2q;
        acc += ga * al * al * h2 / 240.0 * b;
    }

    return acc;
}

double rhs_at(const ModelSpec& m, const GridField& u, int i, int j) {
    const double h2 = m.h * m.h;
    const double uij = u(i, j);
    switch (m.kind) {
        case ModelKind::centered2:
            return m.gamma / h2 * apply_stencil(u, StencilId::delta2, i, j)
                 + m.alpha * (uij - uij * uij * uij);
        case ModelKind::centered4:
            return m.gamma / h2 * (apply_stencil(u, StencilId::delta2, i, j)
                                   - apply_stencil(u, StencilId::delta4, i, j) / 12.0)
                 + m.alpha * (uij - uij * uij * uij);
        case ModelKind::holistic_g3a3:
            return rhs_g3a3_at(m, u, i, j);
        case ModelKind::holistic_g4a4:
            return rhs_g4a4_at(m, u, i, j, G4Groups{});
        case ModelKind::constructed:
            HODIS_REQUIRE(m.table != nullptr, "constructed model has no table");
            return m.table->rhs_at(u, i, j, m.gamma, m.alpha, m.h);
    }
    return 0.0;
}

GridField rhs(const ModelSpec& m, const GridField& u) {
    GridField out(u.grid());
    const int b = u.grid().base_index();
    for (int si = 0; si < u.store_x(); ++si)
        for (int sj = 0; sj < u.store_y(); ++sj)
            out.at_store(si, sj) = rhs_at(m, u, si + b, sj + b);
    return out;
}

namespace {

// dense matrix of a linear stencil under the grid's index map
Eigen::MatrixXd stencil_matrix(const MacroGrid& grid, StencilId id) {
    const int nx = grid.store_x(), ny = grid.store_y();
    const int n = nx * ny;
    const int b = grid.base_index();
    Eigen::MatrixXd s = Eigen::MatrixXd::Zero(n, n);
    GridField unit(grid);
    for (int c = 0; c < n; ++c) {
        unit.values()[c] = 1.0;
        for (int si = 0; si < nx; ++si)
            for (int sj = 0; sj < ny; ++sj)
                s(si * ny + sj, c) = apply_stencil(unit, id, si + b, sj + b);
        unit.values()[c] = 0.0;
    }
    return s;
}

} // namespace

Eigen::MatrixXd jacobian_fd(const ModelSpec& m, const GridField& u) {
    const int n = static_cast<int>(u.size());
    Eigen::MatrixXd j(n, n);
    GridField up = u;
    GridField f0 = rhs(m, u);
    for (int c = 0; c < n; ++c) {
        double eps = 1e-7 * std::max(1.0, std::abs(u.values()[c]));
        up.values()[c] = u.values()[c] + eps;
        GridField f1 = rhs(m, up);
        for (int r = 0; r < n; ++r) j(r, c) = (f1.values()[r] - f0.values()[r]) / eps;
        up.values()[c] = u.values()[c];
    }
    return j;
}

Eigen::MatrixXd jacobian(const ModelSpec& m, const GridField& u) {
    const int n = static_cast<int>(u.size());
    const double h2 = m.h * m.h;
    switch (m.kind) {
        case ModelKind::centered2: {
            Eigen::MatrixXd j = (m.gamma / h2) * stencil_matrix(u.grid(), StencilId::delta2);
            for (int k = 0; k < n; ++k) {
                double uk = u.values()[k];
                j(k, k) += m.alpha * (1.0 - 3.0 * uk * uk);
            }
            return j;
        }
        case ModelKind::centered4: {
            Eigen::MatrixXd j = (m.gamma / h2) * (stencil_matrix(u.grid(), StencilId::delta2)
                                                  - stencil_matrix(u.grid(), StencilId::delta4) / 12.0);
            for (int k = 0; k < n; ++k) {
                double uk = u.values()[k];
                j(k, k) += m.alpha * (1.0 - 3.0 * uk * uk);
            }
            return j;
        }
        case ModelKind::holistic_g3a3: {
            Eigen::MatrixXd s2 = stencil_matrix(u.grid(), StencilId::delta2);
            Eigen::MatrixXd s4 = stencil_matrix(u.grid(), StencilId::delta4);
            Eigen::MatrixXd j = (m.gamma / h2) * s2 - (m.gamma * m.gamma / (12.0 * h2)) * s4;
            // reaction and mixed coupling-reaction parts
            const int b = u.grid().base_index();
            const int ny = u.store_y();
            std::vector<double> d2(static_cast<std::size_t>(n));
            for (int si = 0; si < u.store_x(); ++si)
                for (int sj = 0; sj < ny; ++sj)
                    d2[static_cast<std::size_t>(si * ny + sj)] =
                        apply_stencil(u, StencilId::delta2, si + b, sj + b);
            for (int r = 0; r < n; ++r) {
                double ur = u.values()[r];
                for (int c = 0; c < n; ++c) {
                    double uc = u.values()[c];
                    double t = m.alpha * m.gamma
                             * (s2(r, c) * 3.0 * uc * uc / 12.0 - ur * ur * s2(r, c) / 4.0);
                    j(r, c) += t;
                }
                j(r, r) += m.alpha * (1.0 - 3.0 * ur * ur)
                         - m.alpha * m.gamma * ur * d2[static_cast<std::size_t>(r)] / 2.0;
            }
            return j;
        }
        default:
            return jacobian_fd(m, u);
    }
}

bool has_symmetric_jacobian(ModelKind k) {
    return k == ModelKind::centered2 || k == ModelKind::centered4;
}

} // namespace hodis
