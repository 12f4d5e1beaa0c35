#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace nsf {

/// Temperature-dependent viscosity with certified two-sided bounds.
struct ViscosityLaw {
    double lower = 1.0;
    double upper = 2.0;
    std::function<double(double)> value;

    double operator()(double s) const { return value(s); }
    bool is_constant() const { return lower == upper; }
};

/// mu(s) = 1 + 1/(1+s^2): smooth, bounded in [1, 2].
inline ViscosityLaw default_viscosity() {
    return {1.0, 2.0, [](double s) { return 1.0 + 1.0 / (1.0 + s * s); }};
}

inline ViscosityLaw constant_viscosity(double mu) {
    if (mu <= 0.0) throw std::invalid_argument("constant_viscosity: mu must be positive");
    return {mu, mu, [mu](double) { return mu; }};
}

inline ViscosityLaw make_viscosity(const std::string& name, double value) {
    if (name == "default") return default_viscosity();
    if (name == "constant") return constant_viscosity(value);
    throw std::invalid_argument("unknown viscosity preset: " + name);
}

}  // namespace nsf
