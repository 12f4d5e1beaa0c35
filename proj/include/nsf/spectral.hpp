#pragma once

#include <fftw3.h>

#include <Eigen/Dense>
#include <cmath>
#include <mutex>
#include <stdexcept>

namespace nsf {

using Eigen::ArrayXd;
using Eigen::ArrayXXd;

inline constexpr double kPi = 3.14159265358979323846;

inline std::mutex& fftw_planner_mutex() {
    static std::mutex m;
    return m;
}

/// Sine/cosine evaluation tables: T(a, p) = trig(freq(a) * pi * x_p / L).
/// Row index a is the frequency itself for cosine tables (0..nfreq-1) and
/// frequency a+1 for sine tables (1..nfreq).
inline Eigen::MatrixXd sin_table(int nfreq, const ArrayXd& pts, double L) {
    Eigen::MatrixXd t(nfreq, pts.size());
    for (int a = 0; a < nfreq; ++a)
        for (Eigen::Index p = 0; p < pts.size(); ++p)
            t(a, p) = std::sin((a + 1) * kPi * pts[p] / L);
    return t;
}

inline Eigen::MatrixXd cos_table(int nfreq, const ArrayXd& pts, double L) {
    Eigen::MatrixXd t(nfreq, pts.size());
    for (int a = 0; a < nfreq; ++a)
        for (Eigen::Index p = 0; p < pts.size(); ++p)
            t(a, p) = std::cos(a * kPi * pts[p] / L);
    return t;
}

/// Batched 1D real-to-real transforms along either axis of an n-by-n
/// column-major array (index (i,j) = (x,y)), plus the coefficient
/// normalizations that make analysis/synthesis exact inverses on the
/// cell-centered grid x_j = (j + 1/2) L / n.
///
/// Coefficient layout:
///   cosine axis: slot a holds the coefficient of cos(a pi x / L), a = 0..n-1
///   sine axis:   slot a holds the coefficient of sin((a+1) pi x / L)
/// The sine Nyquist slot (frequency n) is representable but all producers
/// in this project band-limit below it.
class GridFft {
public:
    GridFft(int n, double L) : n_(n), L_(L) {
        if (n < 4) throw std::invalid_argument("GridFft: grid too small");
        std::lock_guard<std::mutex> lock(fftw_planner_mutex());
        in_ = fftw_alloc_real(static_cast<size_t>(n) * n);
        out_ = fftw_alloc_real(static_cast<size_t>(n) * n);
        const fftw_r2r_kind kinds[4] = {FFTW_REDFT10, FFTW_REDFT01, FFTW_RODFT10, FFTW_RODFT01};
        for (int k = 0; k < 4; ++k) {
            // axis 0: transform along x (contiguous), one per column
            plans_[k][0] = fftw_plan_many_r2r(1, &n_, n_, in_, nullptr, 1, n_, out_, nullptr, 1,
                                              n_, &kinds[k], FFTW_ESTIMATE);
            // axis 1: transform along y (strided)
            plans_[k][1] = fftw_plan_many_r2r(1, &n_, n_, in_, nullptr, n_, 1, out_, nullptr, n_,
                                              1, &kinds[k], FFTW_ESTIMATE);
        }
    }
    ~GridFft() {
        std::lock_guard<std::mutex> lock(fftw_planner_mutex());
        for (auto& pk : plans_)
            for (auto& p : pk) fftw_destroy_plan(p);
        fftw_free(in_);
        fftw_free(out_);
    }
    GridFft(const GridFft&) = delete;
    GridFft& operator=(const GridFft&) = delete;

    int n() const { return n_; }
    double length() const { return L_; }
    double cell() const { return L_ / n_; }

    /// samples of sum_a alpha_a cos(a pi x/L) along `axis` -> alpha
    ArrayXXd analyze_cos(const ArrayXXd& samples, int axis) const {
        ArrayXXd y = run(0, axis, samples);
        scale_axis(y, axis, [this](int slot) { return slot == 0 ? 0.5 / n_ : 1.0 / n_; });
        return y;
    }
    ArrayXXd synthesize_cos(const ArrayXXd& coef, int axis) const {
        ArrayXXd c = coef;
        scale_axis(c, axis, [](int slot) { return slot == 0 ? 1.0 : 0.5; });
        return run(1, axis, c);
    }
    ArrayXXd analyze_sin(const ArrayXXd& samples, int axis) const {
        ArrayXXd y = run(2, axis, samples);
        scale_axis(y, axis, [this](int slot) { return slot == n_ - 1 ? 0.5 / n_ : 1.0 / n_; });
        return y;
    }
    ArrayXXd synthesize_sin(const ArrayXXd& coef, int axis) const {
        ArrayXXd c = coef;
        scale_axis(c, axis, [this](int slot) { return slot == n_ - 1 ? 1.0 : 0.5; });
        return run(3, axis, c);
    }

    // 2D composites over (x-kind, y-kind)
    ArrayXXd analyze_cc(const ArrayXXd& s) const { return analyze_cos(analyze_cos(s, 0), 1); }
    ArrayXXd synthesize_cc(const ArrayXXd& c) const {
        return synthesize_cos(synthesize_cos(c, 0), 1);
    }
    ArrayXXd analyze_sc(const ArrayXXd& s) const { return analyze_cos(analyze_sin(s, 0), 1); }
    ArrayXXd synthesize_sc(const ArrayXXd& c) const {
        return synthesize_cos(synthesize_sin(c, 0), 1);
    }
    ArrayXXd analyze_cs(const ArrayXXd& s) const { return analyze_sin(analyze_cos(s, 0), 1); }
    ArrayXXd synthesize_cs(const ArrayXXd& c) const {
        return synthesize_sin(synthesize_cos(c, 0), 1);
    }

    /// d/dx applied to a cosine-indexed axis: returns sine-indexed coefficients.
    /// cos(a.) -> -a (pi/L) sin(a.), so sine slot a-1 receives -a (pi/L) c[a].
    ArrayXXd diff_cos_to_sin(const ArrayXXd& c, int axis) const {
        ArrayXXd s = ArrayXXd::Zero(n_, n_);
        for (int a = 1; a < n_; ++a) {
            double f = -a * kPi / L_;
            if (axis == 0)
                s.row(a - 1) = f * c.row(a);
            else
                s.col(a - 1) = f * c.col(a);
        }
        return s;
    }
    /// d/dx applied to a sine-indexed axis: sin((a+1).) -> (a+1)(pi/L) cos((a+1).).
    /// The Nyquist sine slot must be (numerically) empty.
    ArrayXXd diff_sin_to_cos(const ArrayXXd& s, int axis) const {
        ArrayXXd c = ArrayXXd::Zero(n_, n_);
        for (int a = 0; a < n_ - 1; ++a) {
            double f = (a + 1) * kPi / L_;
            if (axis == 0)
                c.row(a + 1) = f * s.row(a);
            else
                c.col(a + 1) = f * s.col(a);
        }
        return c;
    }

    /// Cell-centered coordinates.
    ArrayXd coords() const {
        ArrayXd x(n_);
        for (int j = 0; j < n_; ++j) x[j] = (j + 0.5) * L_ / n_;
        return x;
    }

private:
    template <class F>
    void scale_axis(ArrayXXd& a, int axis, F factor) const {
        for (int slot = 0; slot < n_; ++slot) {
            double f = factor(slot);
            if (axis == 0)
                a.row(slot) *= f;
            else
                a.col(slot) *= f;
        }
    }

    ArrayXXd run(int kind, int axis, const ArrayXXd& src) const {
        Eigen::Map<ArrayXXd>(in_, n_, n_) = src;
        fftw_execute(plans_[kind][axis]);
        return Eigen::Map<ArrayXXd>(out_, n_, n_);
    }

    int n_;
    double L_;
    double* in_;
    double* out_;
    fftw_plan plans_[4][2];
};

/// Discrete L2 norm of cell-centered samples: sqrt(sum v^2 * cell_area).
inline double grid_l2(const ArrayXXd& v, double L) {
    double area = (L / v.rows()) * (L / v.cols());
    return std::sqrt((v * v).sum() * area);
}

inline double grid_mean(const ArrayXXd& v) { return v.mean(); }

}  // namespace nsf
