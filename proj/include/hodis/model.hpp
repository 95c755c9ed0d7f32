#ifndef HODIS_MODEL_HPP
#define HODIS_MODEL_HPP

#include <memory>
#include <string>

#include <Eigen/Dense>

#include "hodis/constructed.hpp"
#include "hodis/grid.hpp"
#include "hodis/stencil.hpp"

namespace hodis {

// Discrete right-hand-side families.
//
// centered2        gamma/h^2 delta2 u + alpha (u - u^3)
// centered4        gamma/h^2 (delta2 - delta4/12) u + alpha (u - u^3)
// holistic_g3a3    adds the second-order coupling and mixed reaction-coupling
//                  corrections resolved from the subgrid dynamics
// holistic_g4a4    adds the third-order corrections (see the model catalogue
//                  in the README for every term and operator definition)
// constructed      table-driven model produced by the numerical construction
enum class ModelKind { centered2, centered4, holistic_g3a3, holistic_g4a4, constructed };

std::string model_kind_name(ModelKind k);
ModelKind model_kind_from_name(const std::string& name);

struct ModelSpec {
    ModelKind kind = ModelKind::centered2;
    double gamma = 1.0;  // interelement coupling; 1 restores full continuity
    double alpha = 0.0;  // reaction strength
    double h = 1.0;      // macroscale grid spacing
    std::shared_ptr<const ConstructedModel> table;  // for ModelKind::constructed

    ModelSpec with_alpha(double a) const {
        ModelSpec m = *this;
        m.alpha = a;
        return m;
    }
};

// Optional group switches for the third-order model, used to relate it to the
// lower-order family term by term.
struct G4Groups {
    bool coupling3 = true;        // gamma^3 linear correction
    bool coupling2_reaction = true;  // gamma^2 alpha group
    bool coupling_reaction2 = true;  // gamma alpha^2 h^2 group
};

double rhs_at(const ModelSpec& m, const GridField& u, int i, int j);
double rhs_g4a4_at(const ModelSpec& m, const GridField& u, int i, int j, const G4Groups& groups);

// du/dt for the selected model; grids must match
GridField rhs(const ModelSpec& m, const GridField& u);

// Jacobian of rhs with respect to the stored values.  Analytic for centered2
// and holistic_g3a3, forward differences otherwise.
Eigen::MatrixXd jacobian(const ModelSpec& m, const GridField& u);
Eigen::MatrixXd jacobian_fd(const ModelSpec& m, const GridField& u);

bool has_symmetric_jacobian(ModelKind k);

} // namespace hodis

#endif
