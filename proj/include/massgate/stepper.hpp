#pragma once

#include <string>

#include "massgate/errors.hpp"
#include "massgate/field.hpp"
#include "massgate/tridiag.hpp"

namespace massgate {

/// Mesh ratio nu = alpha dt / dx^2.
inline double mesh_ratio(const GridSpec& grid, double alpha) noexcept {
    return alpha * grid.dt / (grid.dx * grid.dx);
}

/// Backward-Euler system over the interior unknowns U_1..U_{J-1}.
///
/// The boundary values are eliminated with the one-sided flux conditions
/// U_0 = U_1 + dx * phi and U_J = U_{J-1} + dx * phi, evaluated at the new
/// time level. Each eliminated neighbour moves -nu from the diagonal and
/// adds nu * dx * phi to the right-hand side.
inline TridiagonalSystem<double> assemble(const FieldState& state, FluxSign flux, const GridSpec& grid, double alpha) {
    const int interior = grid.cells - 1;
    const double nu = mesh_ratio(grid, alpha);
    const double forcing = nu * grid.dx * value(flux);

    TridiagonalSystem<double> sys;
    sys.sub.assign(interior - 1, -nu);
    sys.sup.assign(interior - 1, -nu);
    sys.diag.assign(interior, 1.0 + 2.0 * nu);
    sys.rhs.assign(state.values.begin() + 1, state.values.begin() + grid.cells);

    sys.diag.front() -= nu;
    sys.rhs.front() += forcing;
    sys.diag.back() -= nu;
    sys.rhs.back() += forcing;
    return sys;
}

/// One implicit step of u_t = alpha u_xx with -u_x(0) = u_x(1) = phi.
inline FieldState step(const FieldState& state, FluxSign flux, const GridSpec& grid, double alpha) {
    if (state.values.size() != grid.nodes()) {
        throw std::invalid_argument("field has " + std::to_string(state.values.size()) + " values, grid expects " +
                                    std::to_string(grid.nodes()));
    }
    std::vector<double> interior;
    try {
        interior = solve(assemble(state, flux, grid, alpha));
    } catch (const SingularPivot& e) {
        throw SolverFailure(std::string("implicit step failed: ") + e.what());
    }

    const double jump = grid.dx * value(flux);
    FieldState next;
    next.values.reserve(grid.nodes());
    next.values.push_back(interior.front() + jump);
    next.values.insert(next.values.end(), interior.begin(), interior.end());
    next.values.push_back(interior.back() + jump);
    next.time = state.time + grid.dt;
    return next;
}

}  // namespace massgate
