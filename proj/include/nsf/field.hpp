#pragma once

#include <Eigen/Dense>

#include "nsf/basis.hpp"

namespace nsf {

/// Scalar field as a coefficient array over the sine basis.
struct ScalarField {
    ArrayXXd coef;
    int modes() const { return static_cast<int>(coef.rows()); }
};

/// Vector field: one coefficient array per component.
struct VectorField {
    ArrayXXd c1, c2;
    int modes() const { return static_cast<int>(c1.rows()); }
};

/// Everything the assembly and verifiers need at the quadrature nodes.
struct ScalarQuad {
    ArrayXXd val, dx, dy;
};

struct VectorQuad {
    ArrayXXd u1, u2;
    ArrayXXd d1u1, d2u1, d1u2, d2u2;

    ArrayXXd divergence() const { return d1u1 + d2u2; }
    /// |Du|^2 with Du = (grad u + grad u^T) / 2.
    ArrayXXd sym_grad_sq() const {
        ArrayXXd d12 = 0.5 * (d2u1 + d1u2);
        return d1u1 * d1u1 + d2u2 * d2u2 + 2.0 * d12 * d12;
    }
    ArrayXXd grad_sq() const {
        return d1u1 * d1u1 + d2u1 * d2u1 + d1u2 * d1u2 + d2u2 * d2u2;
    }
    ArrayXXd speed_sq() const { return u1 * u1 + u2 * u2; }
};

inline ScalarQuad eval_scalar(const Basis& b, const ScalarField& f) {
    return {b.value(f.coef), b.ddx(f.coef), b.ddy(f.coef)};
}

inline VectorQuad eval_vector(const Basis& b, const VectorField& f) {
    VectorQuad q;
    q.u1 = b.value(f.c1);
    q.u2 = b.value(f.c2);
    q.d1u1 = b.ddx(f.c1);
    q.d2u1 = b.ddy(f.c1);
    q.d1u2 = b.ddx(f.c2);
    q.d2u2 = b.ddy(f.c2);
    return q;
}

/// Evaluate a coefficient array at an arbitrary point list (x_p, y_p).
inline ArrayXd eval_at_points(const ArrayXXd& coef, const ArrayXd& xs, const ArrayXd& ys,
                              double L) {
    int m = static_cast<int>(coef.rows());
    Eigen::MatrixXd tx = sin_table(m, xs, L);
    Eigen::MatrixXd ty = sin_table(m, ys, L);
    ArrayXd out(xs.size());
    for (Eigen::Index p = 0; p < xs.size(); ++p)
        out[p] = tx.col(p).transpose() * coef.matrix() * ty.col(p);
    return out;
}

}  // namespace nsf
