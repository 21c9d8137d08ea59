#pragma once

#include <cmath>
#include <concepts>
#include <cstddef>
#include <string>
#include <vector>

#include "massgate/errors.hpp"

namespace massgate {

/// Tridiagonal system A x = rhs stored by diagonals.
///
/// Row i reads sub[i-1] * x[i-1] + diag[i] * x[i] + sup[i] * x[i+1] = rhs[i].
template <std::floating_point T = double>
struct TridiagonalSystem {
    std::vector<T> sub;
    std::vector<T> diag;
    std::vector<T> sup;
    std::vector<T> rhs;

    std::size_t size() const noexcept { return diag.size(); }

    /// Throws std::invalid_argument unless the lengths are (n-1, n, n-1, n) with n >= 1.
    void validate() const {
        const std::size_t n = diag.size();
        if (n == 0) {
            throw std::invalid_argument("tridiagonal system must have n >= 1");
        }
        if (rhs.size() != n || sub.size() != n - 1 || sup.size() != n - 1) {
            throw std::invalid_argument(
                "inconsistent tridiagonal lengths: sub=" + std::to_string(sub.size()) +
                " diag=" + std::to_string(n) + " sup=" + std::to_string(sup.size()) +
                " rhs=" + std::to_string(rhs.size()));
        }
    }
};

/// Pivots smaller than this in magnitude are treated as singular.
inline constexpr double kPivotFloor = 1e-14;

/// Thomas algorithm: one forward elimination sweep and back substitution, no pivoting.
/// Intended for diagonally dominant systems; throws SingularPivot otherwise.
template <std::floating_point T>
std::vector<T> solve(const TridiagonalSystem<T>& system) {
    system.validate();
    const std::size_t n = system.size();

    std::vector<T> c(n, T{0});  // modified super-diagonal
    std::vector<T> x(n);

    T pivot = system.diag[0];
    if (std::abs(pivot) < static_cast<T>(kPivotFloor)) {
        throw SingularPivot(0, static_cast<double>(pivot));
    }
    if (n > 1) c[0] = system.sup[0] / pivot;
    x[0] = system.rhs[0] / pivot;

    for (std::size_t i = 1; i < n; ++i) {
        pivot = system.diag[i] - system.sub[i - 1] * c[i - 1];
        if (std::abs(pivot) < static_cast<T>(kPivotFloor)) {
            throw SingularPivot(i, static_cast<double>(pivot));
        }
        if (i + 1 < n) c[i] = system.sup[i] / pivot;
        x[i] = (system.rhs[i] - system.sub[i - 1] * x[i - 1]) / pivot;
    }

    for (std::size_t i = n - 1; i-- > 0;) {
        x[i] -= c[i] * x[i + 1];
    }
    return x;
}

}  // namespace massgate
