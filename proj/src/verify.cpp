#include "verify.hpp"
#include "bound.hpp"
#include "errors.hpp"
#include "model.hpp"
#include "observables.hpp"
#include "oracle.hpp"
#include "scatter.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <sstream>
#include <vector>

namespace ddp {

namespace {

// deterministic uniforms independent of the standard library's
// distribution implementation
struct Rng {
    std::mt19937_64 gen;
    explicit Rng(unsigned seed) : gen(seed) {}
    double uniform(double a, double b) {
        double u = (gen() >> 11) * 0x1.0p-53;
        return a + (b - a) * u;
    }
    int uniform_int(int a, int b) { // inclusive
        return a + static_cast<int>(gen() % static_cast<std::uint64_t>(b - a + 1));
    }
};

PotentialParams random_params(Rng& rng) {
    PotentialParams p;
    p.d = rng.uniform_int(2, 6);
    p.w0 = rng.uniform(-10.0, 10.0);
    p.w1 = rng.uniform(-0.95, 0.95);
    p.x0 = rng.uniform(0.1, 10.0);
    return p;
}

double angle_diff(double a, double b) { // distance mod pi
    double d = std::fmod(a - b, M_PI);
    if (d > M_PI_2) d -= M_PI;
    if (d < -M_PI_2) d += M_PI;
    return std::fabs(d);
}

} // namespace

int run_verification(int trials, unsigned seed, std::string& report) {
    std::ostringstream out;
    int failures = 0;

    struct FoundRoot {
        PotentialParams p;
        int ell;
        double kappa;
    };
    std::vector<FoundRoot> roots;

    // 1. secular roots and existence verdicts vs the shooting oracle
    {
        Rng rng(seed);
        int checked = 0, bad = 0;
        for (int t = 0; t < trials; ++t) {
            PotentialParams p = random_params(rng);
            int ell = rng.uniform_int(0, 5);
            // skip measure-zero boundary neighborhoods the oracle scan cannot
            // resolve (root below its lowest scan momentum)
            LmaxResult lm = l_max(p);
            if (lm.ell_max && ell <= *lm.ell_max && (lm.L_max - ell) < 1e-3) continue;
            std::optional<BoundState> bs;
            try {
                bs = find_bound_state(p, ell);
            } catch (const convergence_error&) {
                ++bad;
                continue;
            }
            std::optional<double> os = oracle::shoot_bound_state(p, ell);
            ++checked;
            if (bs.has_value() != os.has_value()) {
                ++bad;
                continue;
            }
            if (bs && std::fabs(bs->kappa - *os) > 1e-6 * bs->kappa) ++bad;
            if (bs) roots.push_back({p, ell, bs->kappa});
        }
        failures += bad;
        out << (bad ? "FAIL" : "ok") << " bound-vs-oracle: " << checked << " checks, " << bad
            << " failures\n";
    }

    // 2. secular F / residual consistency at the found roots
    {
        int bad = 0;
        for (const auto& r : roots) {
            Couplings c = couplings(r.p);
            double nu = order_nu(r.p.d);
            double lhs = secular_F(c.alpha, nu, r.ell, r.kappa * r.p.x0);
            double rhs = secular_rhs(c, nu, r.p.x0);
            double scale = std::max({1.0, std::fabs(lhs), std::fabs(rhs)});
            if (std::fabs(lhs - rhs) > 1e-8 * scale) ++bad;
        }
        failures += bad;
        out << (bad ? "FAIL" : "ok") << " secular-F-consistency: " << roots.size() << " checks, "
            << bad << " failures\n";
    }

    // 3. pole correspondence: continued S-matrix denominator changes sign
    //    within 1e-8 kappa of each secular root
    {
        int bad = 0;
        for (const auto& r : roots) {
            double eps = 1e-8 * r.kappa;
            double lo = continued_denominator(r.p, r.ell, r.kappa - eps);
            double hi = continued_denominator(r.p, r.ell, r.kappa + eps);
            if (!(lo * hi <= 0.0)) ++bad;
        }
        failures += bad;
        out << (bad ? "FAIL" : "ok") << " pole-correspondence: " << roots.size() << " checks, "
            << bad << " failures\n";
    }

    // 4. phase shift: general route vs ODE asymptotic fit, plus closed
    //    forms and unitarity
    {
        Rng rng(seed + 1);
        int n = std::max(8, trials / 10);
        int bad = 0, checked = 0;
        for (int t = 0; t < n; ++t) {
            PotentialParams p = random_params(rng);
            int ell = rng.uniform_int(0, 3);
            double k = rng.uniform(0.2, 3.0);
            PhaseShift ps;
            try {
                ps = phase_shift(p, ell, k);
            } catch (const pole_error&) {
                continue;
            }
            ++checked;
            if (std::fabs(std::abs(ps.s) - 1.0) > 1e-12) ++bad;
            double fit = oracle::fit_asymptotic_phase(p, ell, k);
            if (angle_diff(ps.delta, fit) > 1e-6) ++bad;
            // pure-delta' closed form against the general route
            PotentialParams pd = p;
            pd.w0 = 0.0;
            double closed = phase_shift_pure_delta_prime(p.d, ell, p.w1, k, p.x0);
            if (angle_diff(phase_shift(pd, ell, k).delta, closed) > 1e-12) ++bad;
        }
        failures += bad;
        out << (bad ? "FAIL" : "ok") << " phase-shift-cross-path: " << checked << " sets, " << bad
            << " failures\n";
    }

    // 5. mean radius: Bessel-moment route vs integrated wavefunction moment
    {
        int n = 0, bad = 0;
        for (const auto& r : roots) {
            if (n >= 12) break;
            if (r.kappa * r.p.x0 > 80.0) continue; // keep the oracle integration cheap
            ++n;
            double direct = mean_radius(r.p, r.ell, r.kappa).value;
            double moment = oracle::mean_radius_moment(r.p, r.ell, r.kappa);
            if (std::fabs(direct - moment) > 1e-5 * direct) ++bad;
        }
        failures += bad;
        out << (bad ? "FAIL" : "ok") << " mean-radius-vs-moment: " << n << " checks, " << bad
            << " failures\n";
    }

    report += out.str();
    return failures;
}

} // namespace ddp
