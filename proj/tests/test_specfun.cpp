#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "errors.hpp"
#include "specfun.hpp"

#include <cmath>
#include <vector>

using ddp::specfun::bessel;
using ddp::specfun::bessel_scaled;
using ddp::specfun::BesselKind;
using ddp::specfun::half_integer_bessel;
using ddp::specfun::ratio_minus1;
using ddp::specfun::valid_order;

namespace {

const std::vector<double> kOrders = {-1.0, -0.5, 0.0, 0.5, 1.0, 1.5, 2.0, 2.5,
                                     3.0, 4.5, 6.0, 8.5, 11.0, 15.5};
const std::vector<double> kArgs = {0.05, 0.2, 0.7, 1.0, 2.3, 5.0, 9.7, 20.0, 55.0, 120.0};

// Independent oracle: K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt,
// composite Simpson in long double on a truncated range.
long double k_integral_oracle(double nu, double x) {
    const long double tmax = acoshl(745.0L / x < 1.0L ? 1.0L : 745.0L / x) + 1.0L;
    const int n = 40000; // even
    const long double h = tmax / n;
    auto f = [&](long double t) {
        return expl(-(long double)x * coshl(t)) * coshl((long double)nu * t);
    };
    long double s = f(0.0L) + f(tmax);
    for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0L : 2.0L) * f(i * h);
    return s * h / 3.0L;
}

} // namespace

TEST_CASE("order domain: half-integer multiples at or above -1") {
    CHECK(valid_order(-1.0));
    CHECK(valid_order(-0.5));
    CHECK(valid_order(0.0));
    CHECK(valid_order(7.5));
    CHECK_FALSE(valid_order(-1.5));
    CHECK_FALSE(valid_order(0.3));
    CHECK_THROWS_AS(bessel(BesselKind::J, 0.3, 1.0), std::domain_error);
    CHECK_THROWS_AS(bessel(BesselKind::K, -2.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(bessel(BesselKind::J, 1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(bessel(BesselKind::I, 1.0, -2.0), std::domain_error);
}

TEST_CASE("cylindrical Wronskian: J_{nu+1} Y_nu - J_nu Y_{nu+1} = 2/(pi x)") {
    for (double nu : kOrders) {
        for (double x : kArgs) {
            double w = bessel(BesselKind::J, nu + 1, x) * bessel(BesselKind::Y, nu, x) -
                       bessel(BesselKind::J, nu, x) * bessel(BesselKind::Y, nu + 1, x);
            double expect = 2.0 / (M_PI * x);
            CHECK(std::fabs(w - expect) <= 1e-10 * std::fabs(expect));
        }
    }
}

TEST_CASE("modified Wronskian: I_nu K_{nu+1} + I_{nu+1} K_nu = 1/x") {
    for (double nu : kOrders) {
        for (double x : kArgs) {
            // evaluate through the scaled pair so the e^{+-x} factors cancel
            double w = bessel_scaled(BesselKind::I, nu, x) * bessel_scaled(BesselKind::K, nu + 1, x) +
                       bessel_scaled(BesselKind::I, nu + 1, x) * bessel_scaled(BesselKind::K, nu, x);
            double expect = 1.0 / x;
            CHECK(std::fabs(w - expect) <= 1e-10 * expect);
        }
    }
}

TEST_CASE("K matches its integral representation") {
    for (double nu : {0.0, 0.5, 1.0, 2.0, 3.5}) {
        for (double x : {0.4, 1.0, 2.7, 8.0}) {
            double expect = static_cast<double>(k_integral_oracle(nu, x));
            CHECK(bessel(BesselKind::K, nu, x) == doctest::Approx(expect).epsilon(1e-11));
        }
    }
}

TEST_CASE("J matches its small-argument series") {
    // J_nu(x) = (x/2)^nu / Gamma(nu+1) [1 - q/(nu+1) + q^2/(2(nu+1)(nu+2)) - ...], q = x^2/4
    for (double nu : {0.0, 0.5, 1.0, 2.5, 4.0}) {
        for (double x : {1e-3, 1e-2, 0.1}) {
            double q = 0.25 * x * x;
            double series = 1.0 - q / (nu + 1) + q * q / (2.0 * (nu + 1) * (nu + 2)) -
                            q * q * q / (6.0 * (nu + 1) * (nu + 2) * (nu + 3));
            double expect = std::pow(0.5 * x, nu) / std::tgamma(nu + 1.0) * series;
            CHECK(bessel(BesselKind::J, nu, x) == doctest::Approx(expect).epsilon(1e-12));
        }
    }
}

TEST_CASE("half-integer closed forms agree with the general path") {
    for (int l = -1; l <= 8; ++l) {
        double nu = l + 0.5;
        for (double x : kArgs) {
            for (BesselKind k : {BesselKind::J, BesselKind::Y, BesselKind::I, BesselKind::K}) {
                double general = bessel(k, nu, x);
                double closed = half_integer_bessel(k, nu, x);
                double scale = std::max(std::fabs(general), 1e-300);
                CHECK(std::fabs(general - closed) <= 1e-12 * scale);
            }
        }
    }
}

TEST_CASE("negative orders follow the reflection formulas") {
    for (double nu : {0.5, 1.0}) {
        for (double x : {0.3, 1.7, 6.0}) {
            double c = std::cos(nu * M_PI), s = std::sin(nu * M_PI);
            double jr = c * bessel(BesselKind::J, nu, x) - s * bessel(BesselKind::Y, nu, x);
            double yr = s * bessel(BesselKind::J, nu, x) + c * bessel(BesselKind::Y, nu, x);
            CHECK(bessel(BesselKind::J, -nu, x) == doctest::Approx(jr).epsilon(1e-12));
            CHECK(bessel(BesselKind::Y, -nu, x) == doctest::Approx(yr).epsilon(1e-12));
            double ir = bessel(BesselKind::I, nu, x) + (2.0 / M_PI) * s * bessel(BesselKind::K, nu, x);
            CHECK(bessel(BesselKind::I, -nu, x) == doctest::Approx(ir).epsilon(1e-12));
            CHECK(bessel(BesselKind::K, -nu, x) == doctest::Approx(bessel(BesselKind::K, nu, x)));
        }
    }
}

TEST_CASE("scaled modified functions carry the exact exponential factor") {
    for (double nu : {0.0, 1.5, 3.0}) {
        for (double x : {0.5, 2.0, 10.0, 40.0}) {
            CHECK(bessel_scaled(BesselKind::I, nu, x) * std::exp(x) ==
                  doctest::Approx(bessel(BesselKind::I, nu, x)).epsilon(1e-13));
            CHECK(bessel_scaled(BesselKind::K, nu, x) * std::exp(-x) ==
                  doctest::Approx(bessel(BesselKind::K, nu, x)).epsilon(1e-13));
        }
    }
}

TEST_CASE("ratio of consecutive orders matches the direct quotient") {
    for (double mu : {0.5, 1.0, 2.5, 6.0}) {
        for (double x : {0.3, 1.0, 4.0, 30.0}) {
            for (BesselKind k : {BesselKind::J, BesselKind::Y, BesselKind::I, BesselKind::K}) {
                double direct = bessel_scaled(k, mu - 1, x) / bessel_scaled(k, mu, x);
                CHECK(ratio_minus1(k, mu, x) == doctest::Approx(direct).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("I ratio survives arguments where the scaled values underflow") {
    // x tiny, order moderate: I_mu(x) ~ (x/2)^mu/Gamma(mu+1) underflows well
    // before the ratio does
    double mu = 8.0, x = 1e-60;
    double expect = 2.0 * mu / x; // leading term of I_{mu-1}/I_mu
    CHECK(ratio_minus1(BesselKind::I, mu, x) == doctest::Approx(expect).epsilon(1e-10));
}

TEST_CASE("log-derivative identity against a central difference") {
    // d/dx log[(qx)^{-nu} C_{l+nu}(qx)] via five-point stencil, loose tolerance
    for (BesselKind k : {BesselKind::I, BesselKind::K, BesselKind::J, BesselKind::Y}) {
        for (int d : {2, 3, 5}) {
            for (int l : {0, 1, 3}) {
                double q = 0.8, x0 = 1.7, h = 1e-5;
                double nu = 0.5 * (d - 2);
                auto f = [&](double x) {
                    return -nu * std::log(q * x) + std::log(std::fabs(bessel(k, l + nu, q * x)));
                };
                double fd = (-f(x0 + 2 * h) + 8 * f(x0 + h) - 8 * f(x0 - h) + f(x0 - 2 * h)) /
                            (12 * h);
                double ld = ddp::specfun::log_derivative(k, l, d, q, x0);
                CHECK(ld == doctest::Approx(fd).epsilon(1e-8));
            }
        }
    }
}
