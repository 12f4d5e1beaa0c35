#pragma once

#include <Eigen/Dense>
#include <stdexcept>

#include "nsf/domain.hpp"
#include "nsf/quadrature.hpp"
#include "nsf/spectral.hpp"

namespace nsf {

/// Zero-trace tensor sine basis over a Domain2D.
///
/// Scalar modes are s_k(x) s_l(y) with s_k(x) = sin(k pi x / L), k,l = 1..modes;
/// velocity basis functions are e_c s_k s_l per component c.  Coefficients are
/// stored as (modes x modes) arrays indexed (k-1, l-1).  Tables at the tensor
/// quadrature nodes make every evaluation a pair of small matrix products.
class Basis {
public:
    Basis(const Domain2D& domain, int velocity_modes, int temperature_modes)
        : domain_(&domain), nv_(velocity_modes), nt_(temperature_modes) {
        if (nv_ < 1 || nt_ < 1) throw std::invalid_argument("Basis: mode counts must be >= 1");
        int fmax = max_resolved_frequency(domain.quad_cells(), domain.quad_order());
        if (2 * std::max(nv_, nt_) > fmax)
            throw std::invalid_argument(
                "Basis: mode count exceeds the quadrature's resolved band (aliasing)");
        int nmax = std::max(nv_, nt_);
        const ArrayXd& x = domain.nodes();
        sin_ = sin_table(nmax, x, domain.length());
        cos_shift_ = Eigen::MatrixXd(nmax, x.size());
        for (int k = 1; k <= nmax; ++k)
            for (Eigen::Index q = 0; q < x.size(); ++q)
                cos_shift_(k - 1, q) = std::cos(k * kPi * x[q] / domain.length());
        wsin_ = sin_;
        for (Eigen::Index q = 0; q < x.size(); ++q) wsin_.col(q) *= domain.weights()[q];

        // 1D gram of {s_k} under the quadrature rule; analytically (L/2) I.
        gram1d_ = sin_ * wsin_.transpose();
    }

    const Domain2D& domain() const { return *domain_; }
    int velocity_modes() const { return nv_; }
    int temperature_modes() const { return nt_; }
    double length() const { return domain_->length(); }

    /// sin(k pi x_q / L), rows k-1 = 0..modes-1
    const Eigen::MatrixXd& sin_at_quad() const { return sin_; }
    /// cos(k pi x_q / L) for k >= 1 (same row offset as the sine table)
    const Eigen::MatrixXd& cos_at_quad() const { return cos_shift_; }
    const Eigen::MatrixXd& gram1d() const { return gram1d_; }

    /// Quadrature-exact scalar mass diagonal entry for mode (k, l), 1-based.
    double mass(int k, int l) const { return gram1d_(k - 1, k - 1) * gram1d_(l - 1, l - 1); }
    /// Dirichlet stiffness / mass ratio of mode (k, l):  ((k^2 + l^2) pi^2 / L^2).
    double mode_rate(int k, int l) const {
        double f = kPi / length();
        return f * f * (k * k + l * l);
    }

    /// Values of a coefficient array at all tensor quadrature nodes.
    ArrayXXd value(const ArrayXXd& coef) const { return stage(coef, sin_, sin_); }
    ArrayXXd ddx(const ArrayXXd& coef) const { return stage(scale_k(coef), cos_shift_, sin_); }
    ArrayXXd ddy(const ArrayXXd& coef) const {
        return stage(scale_l(coef), sin_, cos_shift_);
    }

    /// L2 projection of samples at quadrature nodes onto the leading
    /// `modes x modes` block.
    ArrayXXd project(const ArrayXXd& samples, int modes) const {
        Eigen::MatrixXd raw = wsin_.topRows(modes) * samples.matrix() *
                              wsin_.topRows(modes).transpose();
        ArrayXXd coef(modes, modes);
        for (int a = 0; a < modes; ++a)
            for (int b = 0; b < modes; ++b)
                coef(a, b) = raw(a, b) / (gram1d_(a, a) * gram1d_(b, b));
        return coef;
    }

    /// || f ||_{L2}^2 from coefficients (mass diagonal).
    double l2sq(const ArrayXXd& coef) const {
        double total = 0.0;
        for (int a = 0; a < coef.rows(); ++a)
            for (int b = 0; b < coef.cols(); ++b)
                total += coef(a, b) * coef(a, b) * gram1d_(a, a) * gram1d_(b, b);
        return total;
    }

private:
    // coef scaled by the x-frequency factor k pi / L (for d/dx)
    ArrayXXd scale_k(const ArrayXXd& coef) const {
        ArrayXXd out = coef;
        for (int a = 0; a < coef.rows(); ++a) out.row(a) *= (a + 1) * kPi / length();
        return out;
    }
    ArrayXXd scale_l(const ArrayXXd& coef) const {
        ArrayXXd out = coef;
        for (int b = 0; b < coef.cols(); ++b) out.col(b) *= (b + 1) * kPi / length();
        return out;
    }
    ArrayXXd stage(const ArrayXXd& coef, const Eigen::MatrixXd& tx,
                   const Eigen::MatrixXd& ty) const {
        int m = static_cast<int>(coef.rows());
        return (tx.topRows(m).transpose() * coef.matrix() * ty.topRows(m)).array();
    }

    const Domain2D* domain_;
    int nv_, nt_;
    Eigen::MatrixXd sin_, cos_shift_, wsin_, gram1d_;
};

inline Basis build_basis(const Domain2D& domain, int velocity_modes, int temperature_modes) {
    return Basis(domain, velocity_modes, temperature_modes);
}

}  // namespace nsf
