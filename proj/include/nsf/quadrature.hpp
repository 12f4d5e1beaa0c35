#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace nsf {

/// Gauss-Legendre nodes/weights on [-1, 1] via the Golub-Welsch eigenproblem.
struct GaussRule {
    Eigen::ArrayXd nodes;
    Eigen::ArrayXd weights;
};

inline GaussRule gauss_legendre(int p) {
    if (p < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(p, p);
    for (int i = 1; i < p; ++i) {
        double b = i / std::sqrt(4.0 * i * i - 1.0);
        J(i, i - 1) = b;
        J(i - 1, i) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    GaussRule r;
    r.nodes = es.eigenvalues().array();
    r.weights = 2.0 * es.eigenvectors().row(0).array().square();
    return r;
}

/// Composite Gauss rule: `cells` uniform cells on [0, L], `order` points per cell.
struct CompositeRule {
    Eigen::ArrayXd nodes;    // size cells * order, strictly inside (0, L)
    Eigen::ArrayXd weights;  // same size, sum = L
    int cells = 0;
    int order = 0;
};

inline CompositeRule composite_gauss(double L, int cells, int order) {
    GaussRule g = gauss_legendre(order);
    CompositeRule r;
    r.cells = cells;
    r.order = order;
    r.nodes.resize(cells * order);
    r.weights.resize(cells * order);
    double h = L / cells;
    for (int c = 0; c < cells; ++c) {
        double a = c * h;
        for (int q = 0; q < order; ++q) {
            r.nodes[c * order + q] = a + 0.5 * h * (g.nodes[q] + 1.0);
            r.weights[c * order + q] = 0.5 * h * g.weights[q];
        }
    }
    return r;
}

/// Highest integer frequency f such that the composite rule integrates
/// cos(f pi x / L) * (smooth factor) to ~1e-10 relative accuracy.
/// Derived from the Gauss remainder for oscillatory integrands: the
/// per-cell half-phase z = f pi / (2 cells) must stay below
/// z_crit(p) = (4p + 2)/e * 10^(-5/p).  Validated empirically in the tests.
inline int max_resolved_frequency(int cells, int order) {
    double zcrit = (4.0 * order + 2.0) / 2.718281828459045 * std::pow(10.0, -5.0 / order);
    return static_cast<int>(std::floor(2.0 * cells * zcrit / 3.14159265358979323846));
}

}  // namespace nsf
