#include "oracle.hpp"
#include "errors.hpp"
#include "specfun.hpp"

#include <boost/numeric/odeint.hpp>

#include <array>
#include <cmath>
#include <stdexcept>

namespace ddp::oracle {

namespace {

namespace odeint = boost::numeric::odeint;
using State = std::array<double, 2>; // {u, u'}

// centrifugal strength (d+2l-3)(d+2l-1)/4 = mu^2 - 1/4
double centrifugal(int d, int ell) {
    double a = d + 2 * ell - 3;
    double b = d + 2 * ell - 1;
    return 0.25 * a * b;
}

struct Rhs {
    double cc;
    double lambda;
    void operator()(const State& s, State& ds, double x) const {
        ds[0] = s[1];
        ds[1] = (cc / (x * x) - lambda) * s[0];
    }
};

void renormalize(State& s) {
    double m = std::max(std::fabs(s[0]), std::fabs(s[1]));
    if (m > 1e100 || (m > 0.0 && m < 1e-100)) {
        s[0] /= m;
        s[1] /= m;
    }
}

// Adaptive integration in chunks with renormalization (log-derivative is
// scale invariant, which is all the shooting match needs).
void integrate_scaled(const Rhs& rhs, State& s, double x_from, double x_to, int chunks = 8) {
    auto stepper = odeint::make_controlled(1e-12, 1e-10, odeint::runge_kutta_cash_karp54<State>());
    double h = (x_to - x_from) / chunks;
    for (int i = 0; i < chunks; ++i) {
        double a = x_from + i * h;
        double b = (i == chunks - 1) ? x_to : a + h;
        odeint::integrate_adaptive(stepper, rhs, s, a, b, h / 64.0);
        renormalize(s);
    }
}

// Regular series initial data u = x^p (1 + a2 x^2) to second order,
// p = (d-1)/2 + ell.
State regular_init(const PotentialParams& p, int ell, double lambda, double x) {
    double pw = 0.5 * (p.d - 1) + ell;
    double a2 = -lambda / (4.0 * pw + 2.0);
    double u = std::pow(x, pw) * (1.0 + a2 * x * x);
    double up = pw * std::pow(x, pw - 1.0) + (pw + 2.0) * a2 * std::pow(x, pw + 1.0);
    return {u, up};
}

// Log-derivative of the interior regular solution at x0-.
double interior_logderiv(const PotentialParams& p, int ell, double kappa) {
    Rhs rhs{centrifugal(p.d, ell), -kappa * kappa};
    double xa = p.x0 * 1e-3;
    State s = regular_init(p, ell, -kappa * kappa, xa);
    integrate_scaled(rhs, s, xa, p.x0);
    return s[1] / s[0];
}

// Log-derivative of the decaying exterior solution at x0+, integrated
// inward from x0 + 40/kappa with asymptotic initial data.
double exterior_logderiv(const PotentialParams& p, int ell, double kappa) {
    double cc = centrifugal(p.d, ell);
    Rhs rhs{cc, -kappa * kappa};
    double xb = p.x0 + 40.0 / kappa;
    State s{1.0, -kappa - cc / (2.0 * kappa * xb * xb)};
    auto stepper = odeint::make_controlled(1e-12, 1e-10, odeint::runge_kutta_cash_karp54<State>());
    odeint::integrate_adaptive(stepper, rhs, s, xb, p.x0, -(xb - p.x0) / 512.0);
    return s[1] / s[0];
}

double matching_defect(const PotentialParams& p, const Couplings& c, int ell, double kappa) {
    double ldm = interior_logderiv(p, ell, kappa);
    double mapped = c.beta / c.alpha + ldm / (c.alpha * c.alpha);
    return mapped - exterior_logderiv(p, ell, kappa);
}

} // namespace

RadialSolution integrate_interior(const PotentialParams& p, int ell, double lambda,
                                  double x_end, int n) {
    validate(p);
    if (n < 2) throw std::domain_error("integrate_interior: n >= 2 required");
    Rhs rhs{centrifugal(p.d, ell), lambda};
    double xa = p.x0 * 1e-3;
    if (!(x_end > xa)) throw std::domain_error("integrate_interior: x_end too small");
    State s = regular_init(p, ell, lambda, xa);
    RadialSolution sol;
    sol.kappa_or_k = std::sqrt(std::fabs(lambda));
    sol.side = Side::Interior;
    sol.grid.reserve(n);
    sol.u.reserve(n);
    sol.u_prime.reserve(n);
    double h = (x_end - xa) / (n - 1);
    odeint::runge_kutta4<State> rk4;
    double x = xa;
    sol.grid.push_back(x);
    sol.u.push_back(s[0]);
    sol.u_prime.push_back(s[1]);
    const int sub = 8;
    for (int i = 1; i < n; ++i) {
        for (int j = 0; j < sub; ++j) rk4.do_step(rhs, s, x + j * h / sub, h / sub);
        x = xa + i * h;
        sol.grid.push_back(x);
        sol.u.push_back(s[0]);
        sol.u_prime.push_back(s[1]);
    }
    return sol;
}

std::optional<double> shoot_bound_state(const PotentialParams& p, int ell) {
    validate(p);
    if (ell < 0) throw std::domain_error("shoot_bound_state: ell >= 0 required");
    Couplings c = couplings(p);
    if (c.branch != Branch::Regular)
        throw branch_error("shoot_bound_state: Regular branch only");

    const double klo = 1e-4 / p.x0;
    const double khi = 650.0 / p.x0;
    const int ngrid = 96;
    double prev_k = klo;
    double prev_f = matching_defect(p, c, ell, klo);
    double lo = 0.0, hi = 0.0;
    bool found = false;
    for (int i = 1; i <= ngrid; ++i) {
        double k = klo * std::pow(khi / klo, static_cast<double>(i) / ngrid);
        double f = matching_defect(p, c, ell, k);
        if (std::isfinite(prev_f) && std::isfinite(f) && prev_f * f <= 0.0) {
            lo = prev_k;
            hi = k;
            found = true;
            break;
        }
        prev_k = k;
        prev_f = f;
    }
    if (!found) return std::nullopt;
    double flo = matching_defect(p, c, ell, lo);
    for (int it = 0; it < 100 && (hi - lo) > 1e-13 * hi; ++it) {
        double mid = 0.5 * (lo + hi);
        double fm = matching_defect(p, c, ell, mid);
        if (fm == 0.0) return mid;
        if (flo * fm < 0.0) hi = mid;
        else { lo = mid; flo = fm; }
    }
    return 0.5 * (lo + hi);
}

double mean_radius_moment(const PotentialParams& p, int ell, double kappa) {
    validate(p);
    if (!(kappa > 0.0)) throw std::domain_error("mean_radius_moment: kappa must be positive");
    Couplings c = couplings(p);
    if (c.branch != Branch::Regular)
        throw branch_error("mean_radius_moment: Regular branch only");
    double cc = centrifugal(p.d, ell);

    // interior: fixed uniform grid, regular data
    const int ni = 8001;
    Rhs rhs{cc, -kappa * kappa};
    double xa = p.x0 * 1e-3;
    double hi_step = (p.x0 - xa) / (ni - 1);
    State s = regular_init(p, ell, -kappa * kappa, xa);
    std::vector<double> ui(ni);
    odeint::runge_kutta4<State> rk4;
    ui[0] = s[0];
    for (int i = 1; i < ni; ++i) {
        rk4.do_step(rhs, s, xa + (i - 1) * hi_step, hi_step);
        ui[i] = s[0];
    }
    // matched exterior boundary data
    double up_val = c.alpha * s[0];

    // exterior: integrate inward, store, rescale to the matched value
    const int ne = 16001;
    double xb = p.x0 + 40.0 / kappa;
    double he = (xb - p.x0) / (ne - 1);
    State se{1.0, -kappa - cc / (2.0 * kappa * xb * xb)};
    std::vector<double> ue(ne); // ue[j] at x = x0 + j*he
    ue[ne - 1] = se[0];
    for (int j = ne - 2; j >= 0; --j) {
        rk4.do_step(rhs, se, xb - (ne - 2 - j) * he, -he);
        ue[j] = se[0];
    }
    double scale = up_val / ue[0];
    for (double& v : ue) v *= scale;

    auto simpson = [](const std::vector<double>& f, double h) {
        double sum = f.front() + f.back();
        for (size_t i = 1; i + 1 < f.size(); ++i) sum += (i % 2 ? 4.0 : 2.0) * f[i];
        return sum * h / 3.0;
    };
    std::vector<double> fi(ni), gi(ni), fe(ne), ge(ne);
    for (int i = 0; i < ni; ++i) {
        double x = xa + i * hi_step;
        fi[i] = x * ui[i] * ui[i];
        gi[i] = ui[i] * ui[i];
    }
    for (int j = 0; j < ne; ++j) {
        double x = p.x0 + j * he;
        fe[j] = x * ue[j] * ue[j];
        ge[j] = ue[j] * ue[j];
    }
    double num = simpson(fi, hi_step) + simpson(fe, he);
    double den = simpson(gi, hi_step) + simpson(ge, he);
    return num / den;
}

double fit_asymptotic_phase(const PotentialParams& p, int ell, double k) {
    validate(p);
    if (!(k > 0.0)) throw std::domain_error("fit_asymptotic_phase: k must be positive");
    Couplings c = couplings(p);
    if (c.branch != Branch::Regular)
        throw branch_error("fit_asymptotic_phase: Regular branch only");
    double cc = centrifugal(p.d, ell);
    double mu = ell + order_nu(p.d);
    Rhs rhs{cc, k * k};

    double xa = p.x0 * 1e-3;
    State s = regular_init(p, ell, k * k, xa);
    integrate_scaled(rhs, s, xa, p.x0);
    // matching on the reduced function (beta matrix)
    State sp{c.alpha * s[0], c.beta * s[0] + s[1] / c.alpha};

    double x1 = std::max(1.5 * p.x0, 50.0 / k);
    double x2 = x1 + 30.0 / k;
    auto stepper = odeint::make_controlled(1e-12, 1e-10, odeint::runge_kutta_cash_karp54<State>());
    odeint::integrate_adaptive(stepper, rhs, sp, p.x0, x1, (x1 - p.x0) / 256.0);

    const int m = 241;
    double h = (x2 - x1) / (m - 1);
    double s11 = 0, s12 = 0, s22 = 0, r1 = 0, r2 = 0;
    odeint::runge_kutta4<State> rk4;
    const int sub = 16;
    double x = x1;
    for (int i = 0; i < m; ++i) {
        double b1 = std::sqrt(x) * specfun::bessel(specfun::BesselKind::J, mu, k * x);
        double b2 = std::sqrt(x) * specfun::bessel(specfun::BesselKind::Y, mu, k * x);
        s11 += b1 * b1;
        s12 += b1 * b2;
        s22 += b2 * b2;
        r1 += b1 * sp[0];
        r2 += b2 * sp[0];
        if (i + 1 < m) {
            for (int j = 0; j < sub; ++j) rk4.do_step(rhs, sp, x + j * h / sub, h / sub);
            x = x1 + (i + 1) * h;
        }
    }
    double det = s11 * s22 - s12 * s12;
    if (!(std::fabs(det) > 1e-10 * s11 * s22))
        throw convergence_error("fit_asymptotic_phase: near-singular basis Gram matrix");
    double A = (s22 * r1 - s12 * r2) / det;
    double B = (s11 * r2 - s12 * r1) / det;
    double delta = std::atan2(-B, A);
    while (delta > M_PI_2) delta -= M_PI;
    while (delta <= -M_PI_2) delta += M_PI;
    return delta;
}

} // namespace ddp::oracle
