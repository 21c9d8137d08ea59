#pragma once

// Test-only oracles and generators. Nothing here calls into the code it checks.

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "massgate/field.hpp"
#include "massgate/oracle.hpp"
#include "massgate/tridiag.hpp"

namespace massgate::testing {

/// Dense Gaussian elimination with partial pivoting on the full n x n matrix.
inline std::vector<double> dense_solve(std::vector<std::vector<double>> a, std::vector<double> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        }
        if (a[piv][col] == 0.0) throw std::runtime_error("dense oracle: singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t c = i + 1; c < n; ++c) s -= a[i][c] * x[c];
        x[i] = s / a[i][i];
    }
    return x;
}

inline std::vector<std::vector<double>> to_dense(const TridiagonalSystem<double>& s) {
    const std::size_t n = s.size();
    std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        a[i][i] = s.diag[i];
        if (i > 0) a[i][i - 1] = s.sub[i - 1];
        if (i + 1 < n) a[i][i + 1] = s.sup[i];
    }
    return a;
}

/// Dense product A x.
inline std::vector<double> multiply(const TridiagonalSystem<double>& s, const std::vector<double>& x) {
    const auto a = to_dense(s);
    std::vector<double> y(x.size(), 0.0);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
    return y;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

inline double max_abs(const std::vector<double>& a) {
    double d = 0.0;
    for (double v : a) d = std::max(d, std::abs(v));
    return d;
}

/// Strictly diagonally dominant random system of size n.
inline TridiagonalSystem<double> random_dominant_system(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> off(-1.0, 1.0);
    std::uniform_real_distribution<double> margin(0.1, 2.0);
    std::uniform_real_distribution<double> rhs(-10.0, 10.0);
    std::bernoulli_distribution negative(0.3);
    TridiagonalSystem<double> s;
    s.sub.resize(n - 1);
    s.sup.resize(n - 1);
    s.diag.resize(n);
    s.rhs.resize(n);
    for (auto& v : s.sub) v = off(rng);
    for (auto& v : s.sup) v = off(rng);
    for (std::size_t i = 0; i < n; ++i) {
        double row = margin(rng);
        if (i > 0) row += std::abs(s.sub[i - 1]);
        if (i + 1 < n) row += std::abs(s.sup[i]);
        s.diag[i] = negative(rng) ? -row : row;
        s.rhs[i] = rhs(rng);
    }
    return s;
}

/// Random thresholds with 0 < m < M.
inline ControlConfig random_control(std::mt19937_64& rng, double alpha, double horizon) {
    std::uniform_real_distribution<double> upper(0.05, 1.0);
    std::uniform_real_distribution<double> frac(0.05, 0.95);
    ControlConfig c;
    c.upper = upper(rng);
    c.lower = c.upper * frac(rng);
    c.alpha = alpha;
    c.horizon = horizon;
    return c;
}

inline FieldState random_field(std::mt19937_64& rng, const GridSpec& grid, double scale = 1.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    FieldState s = FieldState::zero(grid);
    for (auto& v : s.values) v = u(rng);
    return s;
}

/// Direct sum dx * (U_1 + ... + U_{J-1}); independent of the quadrature module.
inline double interior_sum_mass(const std::vector<double>& u, double dx) {
    double s = 0.0;
    for (std::size_t j = 1; j + 1 < u.size(); ++j) s += u[j];
    return dx * s;
}

}  // namespace massgate::testing
