#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <stdexcept>

#include "nsf/quadrature.hpp"

namespace nsf {

using Eigen::ArrayXd;
using Eigen::ArrayXXd;

/// Open square (0,L)^2 with a tensor composite-Gauss quadrature.
/// Scalar samples at quadrature points are stored as (nq x nq) arrays
/// indexed (ix, iy).
class Domain2D {
public:
    Domain2D(double L, int quad_order, int quad_cells)
        : L_(L), rule_(composite_gauss(L, quad_cells, quad_order)) {}

    double length() const { return L_; }
    double area() const { return L_ * L_; }
    int quad_points() const { return static_cast<int>(rule_.nodes.size()); }
    int quad_cells() const { return rule_.cells; }
    int quad_order() const { return rule_.order; }
    const ArrayXd& nodes() const { return rule_.nodes; }
    const ArrayXd& weights() const { return rule_.weights; }

    double boundary_distance(double x, double y) const {
        return std::min(std::min(x, L_ - x), std::min(y, L_ - y));
    }

    /// Integral over the square of values sampled at tensor quadrature nodes.
    double integrate(const ArrayXXd& vals) const {
        return rule_.weights.matrix().transpose() * vals.matrix() * rule_.weights.matrix();
    }

    double l2_norm(const ArrayXXd& vals) const {
        return std::sqrt(std::max(0.0, integrate(vals * vals)));
    }
    double l1_norm(const ArrayXXd& vals) const { return integrate(vals.abs()); }

    /// Integral of f evaluated lazily at nodes.
    template <class F>
    double integrate_fn(F&& f) const {
        double total = 0.0;
        for (int i = 0; i < quad_points(); ++i) {
            double row = 0.0;
            for (int j = 0; j < quad_points(); ++j)
                row += rule_.weights[j] * f(rule_.nodes[i], rule_.nodes[j]);
            total += rule_.weights[i] * row;
        }
        return total;
    }

private:
    double L_;
    CompositeRule rule_;
};

inline Domain2D build_domain(double L, int quad_order, int quad_cells = 16) {
    if (L <= 0.0) throw std::invalid_argument("build_domain: L must be positive");
    if (quad_order < 2) throw std::invalid_argument("build_domain: quadrature order must be >= 2");
    if (quad_cells < 1) throw std::invalid_argument("build_domain: cell count must be >= 1");
    return Domain2D(L, quad_order, quad_cells);
}

}  // namespace nsf
