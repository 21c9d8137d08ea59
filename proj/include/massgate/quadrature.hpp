#pragma once

#include <span>
#include <stdexcept>

#include "massgate/field.hpp"

namespace massgate {

enum class QuadratureKind {
    RiemannInterior,  // dx * sum_{j=1}^{J-1} U_j; makes the discrete mass identity exact
    Trapezoid,        // (dx/2) * sum_{j=0}^{J-1} (U_j + U_{j+1})
};

inline double riemann_interior_mass(std::span<const double> u, double dx) {
    double sum = 0.0;
    for (std::size_t j = 1; j + 1 < u.size(); ++j) sum += u[j];
    return dx * sum;
}

inline double trapezoid_mass(std::span<const double> u, double dx) {
    double sum = 0.0;
    for (std::size_t j = 0; j + 1 < u.size(); ++j) sum += u[j] + u[j + 1];
    return 0.5 * dx * sum;
}

inline double mass(std::span<const double> u, double dx, QuadratureKind quad) {
    if (u.size() < 2) throw std::invalid_argument("field needs at least two nodes");
    switch (quad) {
        case QuadratureKind::RiemannInterior:
            return riemann_interior_mass(u, dx);
        case QuadratureKind::Trapezoid:
            return trapezoid_mass(u, dx);
    }
    throw std::invalid_argument("unknown quadrature");
}

inline double mass(const FieldState& state, const GridSpec& grid, QuadratureKind quad) {
    if (state.values.size() != grid.nodes()) throw std::invalid_argument("field length does not match grid");
    return mass(state.values, grid.dx, quad);
}

}  // namespace massgate
