#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <memory>
#include <stdexcept>

#include "nsf/basis.hpp"
#include "nsf/spectral.hpp"

namespace nsf {

/// Uniform cell-centered n x n grid on (0,L)^2 carrying the convolution,
/// the Helmholtz solves and the pressure functional.
class AuxGrid {
public:
    AuxGrid(int n, double L) : fft_(std::make_shared<GridFft>(n, L)), coords_(fft_->coords()) {}

    int n() const { return fft_->n(); }
    double length() const { return fft_->length(); }
    double cell() const { return fft_->cell(); }
    const ArrayXd& coords() const { return coords_; }
    const GridFft& fft() const { return *fft_; }

    template <class F>
    ArrayXXd sample(F&& f) const {
        ArrayXXd v(n(), n());
        for (int i = 0; i < n(); ++i)
            for (int j = 0; j < n(); ++j) v(i, j) = f(coords_[i], coords_[j]);
        return v;
    }

    /// Samples of a sine-basis coefficient array on the grid.
    ArrayXXd sample_field(const ArrayXXd& coef) const {
        int m = static_cast<int>(coef.rows());
        Eigen::MatrixXd t = sin_table(m, coords_, length());
        return (t.transpose() * coef.matrix() * t).array();
    }

    double l2(const ArrayXXd& v) const { return grid_l2(v, length()); }

private:
    std::shared_ptr<GridFft> fft_;
    ArrayXd coords_;
};

/// Sharp boundary cutoff: 1 where dist(x, boundary) > 2 nu, else 0.
struct BoundaryCutoff {
    double nu;
    double L;
    double operator()(double x, double y) const {
        double d = std::min(std::min(x, L - x), std::min(y, L - y));
        return d > 2.0 * nu ? 1.0 : 0.0;
    }
    ArrayXXd mask(const AuxGrid& g) const {
        return g.sample([this](double x, double y) { return (*this)(x, y); });
    }
};

/// Radial kernel c (1 - (r/nu)^2)^3 on r < nu, discretized as a normalized
/// stencil on the auxiliary grid.  The stencil degenerates to the identity
/// when nu falls under half a cell.
class Mollifier {
public:
    Mollifier(double nu, const AuxGrid& grid) : nu_(nu), cell_(grid.cell()) {
        if (nu <= 0.0) throw std::invalid_argument("Mollifier: nu must be positive");
        radius_ = static_cast<int>(std::floor(nu / cell_ + 1e-12));
        int w = 2 * radius_ + 1;
        stencil_ = ArrayXXd::Zero(w, w);
        for (int i = -radius_; i <= radius_; ++i)
            for (int j = -radius_; j <= radius_; ++j)
                stencil_(i + radius_, j + radius_) =
                    kernel(std::hypot(i * cell_, j * cell_));
        double s = stencil_.sum();
        if (s <= 0.0) {
            stencil_ = ArrayXXd::Zero(w, w);
            stencil_(radius_, radius_) = 1.0;
        } else {
            stencil_ /= s;
        }
    }

    double nu() const { return nu_; }
    int radius_cells() const { return radius_; }
    const ArrayXXd& stencil() const { return stencil_; }

    /// Continuous kernel (unit mass over the plane).
    double kernel(double r) const {
        if (r >= nu_) return 0.0;
        double t = 1.0 - (r / nu_) * (r / nu_);
        return 4.0 / (kPi * nu_ * nu_) * t * t * t;
    }

    /// Discrete convolution with zero extension outside the grid.
    ArrayXXd convolve(const ArrayXXd& v) const {
        int n = static_cast<int>(v.rows());
        ArrayXXd out = ArrayXXd::Zero(n, n);
        for (int i = 0; i < n; ++i) {
            int ilo = std::max(0, i - radius_), ihi = std::min(n - 1, i + radius_);
            for (int j = 0; j < n; ++j) {
                int jlo = std::max(0, j - radius_), jhi = std::min(n - 1, j + radius_);
                double acc = 0.0;
                for (int a = ilo; a <= ihi; ++a)
                    for (int b = jlo; b <= jhi; ++b)
                        acc += stencil_(i - a + radius_, j - b + radius_) * v(a, b);
                out(i, j) = acc;
            }
        }
        return out;
    }

    /// Convolution of grid data evaluated at an arbitrary target point.
    /// Sources outside the grid count as zero (extension by zero); the kernel
    /// mass is taken over the full lattice so constants are reproduced exactly
    /// in the interior.
    double convolve_at(const ArrayXXd& v, const AuxGrid& g, double x, double y) const {
        int n = g.n();
        int ic = static_cast<int>(std::llround(x / cell_ - 0.5));
        int jc = static_cast<int>(std::llround(y / cell_ - 0.5));
        double acc = 0.0, mass = 0.0;
        for (int a = ic - radius_ - 1; a <= ic + radius_ + 1; ++a)
            for (int b = jc - radius_ - 1; b <= jc + radius_ + 1; ++b) {
                double ya = (a + 0.5) * cell_;
                double yb = (b + 0.5) * cell_;
                double w = kernel(std::hypot(ya - x, yb - y));
                mass += w;
                if (a >= 0 && a < n && b >= 0 && b < n) acc += w * v(a, b);
            }
        return mass > 0.0 ? acc / mass : 0.0;
    }

private:
    double nu_;
    double cell_;
    int radius_;
    ArrayXXd stencil_;
};

/// (chi u) * omega on the auxiliary grid, one component at a time.
/// The result vanishes within distance nu of the boundary by construction.
inline std::pair<ArrayXXd, ArrayXXd> mollify_field(const ArrayXXd& u1, const ArrayXXd& u2,
                                                   const Mollifier& mollifier,
                                                   const BoundaryCutoff& chi,
                                                   const AuxGrid& grid) {
    if (mollifier.nu() >= grid.length() / 4.0)
        throw std::invalid_argument("mollify_field: nu >= L/4 removes the whole domain");
    ArrayXXd mask = chi.mask(grid);
    return {mollifier.convolve(u1 * mask), mollifier.convolve(u2 * mask)};
}

}  // namespace nsf
