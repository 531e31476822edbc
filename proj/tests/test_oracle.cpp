#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bound.hpp"
#include "errors.hpp"
#include "model.hpp"
#include "oracle.hpp"
#include "specfun.hpp"

#include <cmath>

using namespace ddp;

TEST_CASE("interior integration reproduces the free solution sqrt(x) J_mu(kx)") {
    for (int d : {2, 3, 5}) {
        for (int l : {0, 1, 3}) {
            double k = 1.3, x_end = 2.5;
            PotentialParams p{d, 0.0, 0.0, x_end};
            oracle::RadialSolution sol = oracle::integrate_interior(p, l, k * k, x_end, 401);
            double mu = l + order_nu(d);
            // fix the overall scale at the last grid point
            double ref_end =
                std::sqrt(x_end) * specfun::bessel(specfun::BesselKind::J, mu, k * x_end);
            double scale = ref_end / sol.u.back();
            for (size_t i = sol.grid.size() / 4; i < sol.grid.size(); i += 40) {
                double x = sol.grid[i];
                double ref = std::sqrt(x) * specfun::bessel(specfun::BesselKind::J, mu, k * x);
                CHECK(scale * sol.u[i] == doctest::Approx(ref).epsilon(1e-5));
            }
        }
    }
}

TEST_CASE("interior solution grid and argument validation") {
    PotentialParams p{3, 0.0, 0.0, 1.0};
    oracle::RadialSolution sol = oracle::integrate_interior(p, 0, -1.0, 1.0, 11);
    CHECK(sol.grid.size() == 11);
    CHECK(sol.u.size() == 11);
    CHECK(sol.side == oracle::Side::Interior);
    for (size_t i = 1; i < sol.grid.size(); ++i) CHECK(sol.grid[i] > sol.grid[i - 1]);
    CHECK_THROWS_AS(oracle::integrate_interior(p, 0, -1.0, 1.0, 1), std::domain_error);
    CHECK_THROWS_AS(oracle::integrate_interior(p, 0, -1.0, 1e-6, 11), std::domain_error);
}

TEST_CASE("shooting solver hits the reference ground states") {
    std::optional<double> k1 = oracle::shoot_bound_state({2, 0.0, 0.9, 0.15}, 0);
    REQUIRE(k1.has_value());
    CHECK(-(*k1) * (*k1) == doctest::Approx(-1.205).epsilon(1e-3));
    std::optional<double> k2 = oracle::shoot_bound_state({3, -1.85, 0.437, 1.0}, 0);
    REQUIRE(k2.has_value());
    CHECK(-(*k2) * (*k2) == doctest::Approx(-0.514).epsilon(1e-3));
}

TEST_CASE("shooting solver reports absence above threshold") {
    CHECK_FALSE(oracle::shoot_bound_state({3, 2.0, 0.0, 1.0}, 0).has_value());
    CHECK_FALSE(oracle::shoot_bound_state({3, -1.85, 0.437, 1.0}, 3).has_value());
}

TEST_CASE("asymptotic fit of the free problem gives zero phase") {
    for (int d : {2, 3}) {
        for (int l : {0, 2}) {
            double delta = oracle::fit_asymptotic_phase({d, 0.0, 0.0, 1.0}, l, 1.1);
            CHECK(std::fabs(delta) < 1e-7);
        }
    }
}

TEST_CASE("wavefunction moment for a deep state approaches the shell radius") {
    // a very deep state is pinned to the shell: <x> -> x0
    PotentialParams p{3, -40.0, 0.0, 1.0};
    std::optional<BoundState> b = find_bound_state(p, 0);
    REQUIRE(b.has_value());
    double moment = oracle::mean_radius_moment(p, 0, b->kappa);
    CHECK(std::fabs(moment - p.x0) < 0.1);
}

TEST_CASE("oracle rejects the degenerate matching branches") {
    CHECK_THROWS_AS(oracle::shoot_bound_state({3, -2.0, 1.0, 1.0}, 0), branch_error);
    CHECK_THROWS_AS(oracle::fit_asymptotic_phase({3, -2.0, -1.0, 1.0}, 0, 1.0), branch_error);
    CHECK_THROWS_AS(oracle::mean_radius_moment({3, -2.0, 1.0, 1.0}, 0, 1.0), branch_error);
}
