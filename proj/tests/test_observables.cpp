#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bound.hpp"
#include "errors.hpp"
#include "model.hpp"
#include "observables.hpp"
#include "oracle.hpp"
#include "zeromode.hpp"

#include <cmath>

using namespace ddp;

TEST_CASE("mean radius of the reference three-dimensional state") {
    PotentialParams p{3, -1.85, 0.437, 1.0};
    BoundState b = *find_bound_state(p, 0);
    MeanRadius mr = mean_radius(p, 0, b.kappa);
    CHECK_FALSE(mr.is_infinite);
    CHECK(mr.ratio == doctest::Approx(mr.value / p.x0).epsilon(1e-14));
    // cross-path: moment of the independently integrated wavefunction
    double moment = oracle::mean_radius_moment(p, 0, b.kappa);
    CHECK(mr.value == doctest::Approx(moment).epsilon(1e-6));
    // a state bound to a thin shell sits outside the shell on average
    CHECK(mr.ratio > 1.0);
}

TEST_CASE("mean radius against the wavefunction moment across regimes") {
    struct Case {
        PotentialParams p;
        int l;
    } cases[] = {
        {{2, 0.0, 0.9, 0.15}, 0},
        {{2, -8.0, -0.3, 2.0}, 1},
        {{4, -6.0, 0.4, 1.1}, 1},
        {{5, -9.0, -0.5, 0.8}, 0},
    };
    for (const Case& c : cases) {
        std::optional<BoundState> b = find_bound_state(c.p, c.l);
        REQUIRE(b.has_value());
        MeanRadius mr = mean_radius(c.p, c.l, b->kappa);
        double moment = oracle::mean_radius_moment(c.p, c.l, b->kappa);
        CHECK(mr.value == doctest::Approx(moment).epsilon(1e-5));
    }
}

TEST_CASE("zero-momentum limit closed form") {
    // symmetric couplings, eta = -1: limit is 12/7
    std::optional<double> lim = mean_radius_zero_limit(1.0, -1);
    REQUIRE(lim.has_value());
    CHECK(*lim == doctest::Approx(12.0 / 7.0).epsilon(1e-14));
    // eta in {0,1,2,3}: divergent limit reported as the infinity marker
    for (int eta : {0, 1, 2, 3}) CHECK_FALSE(mean_radius_zero_limit(0.7, eta).has_value());
    CHECK_THROWS_AS(mean_radius_zero_limit(1.0, 4), std::domain_error);
}

TEST_CASE("w1 -> 1 limit of the zero-momentum ratio is (eta-1)/eta") {
    for (int eta : {-1, -2, -4}) {
        double w1 = 0.999;
        double alpha = (1.0 + w1) / (1.0 - w1);
        std::optional<double> lim = mean_radius_zero_limit(alpha, eta);
        REQUIRE(lim.has_value());
        double expect = (eta - 1.0) / eta;
        CHECK(std::fabs(*lim - expect) < 0.02 * expect);
    }
}

TEST_CASE("ratio near a zero mode approaches the closed-form limit") {
    // channels with eta <= -1 just off the existence surface
    struct Case {
        int d, l;
    } cases[] = {{2, 2}, {3, 2}, {4, 1}};
    for (const Case& c : cases) {
        double w1 = 0.3, x0 = 1.0;
        PotentialParams p{c.d, *zero_mode_w0(c.d, c.l, w1, x0), w1, x0};
        double alpha = couplings(p).alpha;
        double limit = *mean_radius_zero_limit(alpha, eta(c.d, c.l));
        MeanRadius mr = mean_radius(p, c.l, 1e-3 / x0);
        CHECK(std::fabs(mr.ratio - limit) < 0.01 * limit);
    }
}

TEST_CASE("momentum validation") {
    PotentialParams p{3, -1.85, 0.437, 1.0};
    CHECK_THROWS_AS(mean_radius(p, 0, 0.0), std::domain_error);
    CHECK_THROWS_AS(mean_radius(p, 0, -1.0), std::domain_error);
}
