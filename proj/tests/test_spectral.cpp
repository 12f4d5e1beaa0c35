#include <catch2/catch_amalgamated.hpp>

#include "nsf/domain.hpp"
#include "nsf/spectral.hpp"

using namespace nsf;

namespace {

ArrayXXd sample_grid(const GridFft& g, double (*f)(double, double)) {
    ArrayXd x = g.coords();
    ArrayXXd v(g.n(), g.n());
    for (int i = 0; i < g.n(); ++i)
        for (int j = 0; j < g.n(); ++j) v(i, j) = f(x[i], x[j]);
    return v;
}

}  // namespace

TEST_CASE("cosine analysis recovers band-limited coefficients") {
    GridFft g(32, 1.0);
    ArrayXXd v = sample_grid(g, +[](double x, double y) {
        return 0.7 + 1.5 * std::cos(2 * kPi * x) * std::cos(5 * kPi * y) -
               0.25 * std::cos(7 * kPi * x);
    });
    ArrayXXd c = g.analyze_cc(v);
    CHECK(c(0, 0) == Catch::Approx(0.7).margin(1e-13));
    CHECK(c(2, 5) == Catch::Approx(1.5).margin(1e-13));
    CHECK(c(7, 0) == Catch::Approx(-0.25).margin(1e-13));
    c(0, 0) -= 0.7;
    c(2, 5) -= 1.5;
    c(7, 0) += 0.25;
    CHECK(c.abs().maxCoeff() < 1e-13);
    // round trip
    ArrayXXd back = g.synthesize_cc(g.analyze_cc(v));
    CHECK((back - v).abs().maxCoeff() < 1e-12);
}

TEST_CASE("mixed sine/cosine analysis and round trips") {
    GridFft g(24, 2.0);
    ArrayXXd v = sample_grid(g, +[](double x, double y) {
        return std::sin(3 * kPi * x / 2.0) * std::cos(4 * kPi * y / 2.0) -
               2.0 * std::sin(1 * kPi * x / 2.0);
    });
    ArrayXXd c = g.analyze_sc(v);
    CHECK(c(2, 4) == Catch::Approx(1.0).margin(1e-13));  // sine slot 2 = frequency 3
    CHECK(c(0, 0) == Catch::Approx(-2.0).margin(1e-13));
    CHECK((g.synthesize_sc(c) - v).abs().maxCoeff() < 1e-12);

    ArrayXXd w = sample_grid(g, +[](double x, double y) {
        return std::cos(2 * kPi * x / 2.0) * std::sin(5 * kPi * y / 2.0);
    });
    ArrayXXd cw = g.analyze_cs(w);
    CHECK(cw(2, 4) == Catch::Approx(1.0).margin(1e-13));
    CHECK((g.synthesize_cs(cw) - w).abs().maxCoeff() < 1e-12);
}

TEST_CASE("spectral differentiation matches analytic derivatives") {
    GridFft g(32, 1.0);
    // f = cos(3 pi x) cos(2 pi y); df/dx = -3 pi sin(3 pi x) cos(2 pi y)
    ArrayXXd f = sample_grid(g, +[](double x, double y) {
        return std::cos(3 * kPi * x) * std::cos(2 * kPi * y);
    });
    ArrayXXd dfdx = g.synthesize_sc(g.diff_cos_to_sin(g.analyze_cc(f), 0));
    ArrayXXd expect = sample_grid(g, +[](double x, double y) {
        return -3 * kPi * std::sin(3 * kPi * x) * std::cos(2 * kPi * y);
    });
    CHECK((dfdx - expect).abs().maxCoeff() < 1e-10);

    // g2 = sin(4 pi x) cos(pi y); dg2/dx = 4 pi cos(4 pi x) cos(pi y)
    ArrayXXd h = sample_grid(g, +[](double x, double y) {
        return std::sin(4 * kPi * x) * std::cos(kPi * y);
    });
    ArrayXXd dhdx = g.synthesize_cc(g.diff_sin_to_cos(g.analyze_sc(h), 0));
    ArrayXXd expect2 = sample_grid(g, +[](double x, double y) {
        return 4 * kPi * std::cos(4 * kPi * x) * std::cos(kPi * y);
    });
    CHECK((dhdx - expect2).abs().maxCoeff() < 1e-10);
}

TEST_CASE("quadrature weights sum to the area and nodes are interior") {
    Domain2D d = build_domain(1.0, 4);
    CHECK(d.weights().sum() == Catch::Approx(1.0).epsilon(1e-12));
    CHECK(d.nodes().minCoeff() > 0.0);
    CHECK(d.nodes().maxCoeff() < 1.0);

    Domain2D d2 = build_domain(2.5, 6, 9);
    CHECK(d2.weights().sum() == Catch::Approx(2.5).epsilon(1e-12));
}

TEST_CASE("quadrature integrates classic integrands") {
    Domain2D d = build_domain(1.0, 4);
    // sin(pi x) sin(pi y) over the unit square = 4 / pi^2
    ArrayXXd vals(d.quad_points(), d.quad_points());
    for (int i = 0; i < d.quad_points(); ++i)
        for (int j = 0; j < d.quad_points(); ++j)
            vals(i, j) = std::sin(kPi * d.nodes()[i]) * std::sin(kPi * d.nodes()[j]);
    CHECK(d.integrate(vals) == Catch::Approx(4.0 / (kPi * kPi)).epsilon(1e-10));

    // x^2 y^2 -> 1/9, exact for order >= 2 per cell
    for (int i = 0; i < d.quad_points(); ++i)
        for (int j = 0; j < d.quad_points(); ++j)
            vals(i, j) = d.nodes()[i] * d.nodes()[i] * d.nodes()[j] * d.nodes()[j];
    CHECK(d.integrate(vals) == Catch::Approx(1.0 / 9.0).epsilon(1e-13));
}

TEST_CASE("resolved-frequency guard is honest") {
    // Products of basis modes must integrate to ~1e-10; check the bound for
    // the default rule by integrating cos(f pi x) cos(f pi y) at the guard edge.
    int cells = 16, order = 12;
    int fmax = max_resolved_frequency(cells, order);
    REQUIRE(fmax >= 64);
    Domain2D d = build_domain(1.0, order, cells);
    ArrayXXd vals(d.quad_points(), d.quad_points());
    for (int f : {fmax / 2, fmax}) {
        for (int i = 0; i < d.quad_points(); ++i)
            for (int j = 0; j < d.quad_points(); ++j)
                vals(i, j) =
                    std::cos(f * kPi * d.nodes()[i]) * std::cos(f * kPi * d.nodes()[j]);
        // exact integral is 0; integrand has unit amplitude
        CHECK(std::abs(d.integrate(vals)) < 1e-10);
    }
}

TEST_CASE("build_domain rejects bad arguments") {
    CHECK_THROWS_AS(build_domain(0.0, 4), std::invalid_argument);
    CHECK_THROWS_AS(build_domain(-1.0, 4), std::invalid_argument);
    CHECK_THROWS_AS(build_domain(1.0, 1), std::invalid_argument);
}
