#include "bound.hpp"
#include "errors.hpp"
#include "specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ddp {

using specfun::BesselKind;

double secular_residual(const PotentialParams& p, int ell, double kappa) {
    validate(p);
    if (ell < 0) throw std::domain_error("secular_residual: ell >= 0 required");
    if (!(kappa > 0.0)) throw std::domain_error("secular_residual: kappa must be positive");
    Couplings c = couplings(p);
    switch (c.branch) {
        case Branch::Regular: {
            double lk = specfun::log_derivative(BesselKind::K, ell, p.d, kappa, p.x0);
            double li = specfun::log_derivative(BesselKind::I, ell, p.d, kappa, p.x0);
            return c.alpha * lk - c.beta_tilde - li / c.alpha;
        }
        case Branch::RobinDirichletPlus: {
            // Robin outside against the decaying K solution; Dirichlet inside
            // admits no bound state (I never vanishes).
            double lk = specfun::log_derivative(BesselKind::K, ell, p.d, kappa, p.x0);
            return 0.25 * c.w0_tilde - lk;
        }
        case Branch::RobinDirichletMinus: {
            double li = specfun::log_derivative(BesselKind::I, ell, p.d, kappa, p.x0);
            return 0.25 * c.w0_tilde + li;
        }
    }
    throw std::logic_error("secular_residual: unreachable");
}

double secular_F(double alpha, double nu, int ell, double y0) {
    if (alpha == 0.0) throw std::domain_error("secular_F: alpha must be nonzero");
    if (!(y0 > 0.0)) throw std::domain_error("secular_F: y0 must be positive");
    double mu = nu + ell;
    double rI = specfun::ratio_minus1(BesselKind::I, mu, y0);
    double rK = specfun::ratio_minus1(BesselKind::K, mu, y0);
    return -y0 * (rI / alpha + alpha * rK) - (alpha - 1.0 / alpha) * ell;
}

double secular_rhs(const Couplings& c, double nu, double x0) {
    if (c.branch != Branch::Regular)
        throw branch_error("secular_rhs: Regular branch only");
    return 2.0 * nu * (c.alpha - 1.0 / c.alpha) + c.beta_tilde * x0;
}

std::optional<BoundState> find_bound_state(const PotentialParams& p, int ell) {
    validate(p);
    if (ell < 0) throw std::domain_error("find_bound_state: ell >= 0 required");
    LmaxResult lm = l_max(p);
    if (!lm.ell_max || ell > *lm.ell_max) return std::nullopt;
    if (lm.at_integer_boundary && ell == *lm.ell_max) return std::nullopt; // zero-mode, not a bound state

    const double kappa_cap = 700.0 / p.x0;
    double a = 1e-8 / p.x0;
    double fa = secular_residual(p, ell, a);
    double lo = a, hi = a, flo = fa, fb = fa;
    bool bracketed = false;
    // upward doubling covers every root of ordinary depth
    while (hi < kappa_cap) {
        double next = std::min(hi * 2.0, kappa_cap);
        double fn = secular_residual(p, ell, next);
        if (fb * fn <= 0.0) { lo = hi; flo = fb; hi = next; fb = fn; bracketed = true; break; }
        hi = next;
        fb = fn;
    }
    if (!bracketed) {
        // threshold-grazing channels (L_max barely above ell) push the root
        // exponentially far below the starting point; extend downward
        lo = a;
        flo = fa;
        while (lo * p.x0 > 1e-280) {
            double next = lo * 0.1;
            double fn = secular_residual(p, ell, next);
            if (fn * flo <= 0.0) { hi = lo; fb = flo; lo = next; flo = fn; bracketed = true; break; }
            lo = next;
            flo = fn;
        }
    }
    if (!bracketed)
        throw convergence_error("find_bound_state: no sign change before kappa*x0 = 700 (ell=" +
                                std::to_string(ell) + ")");
    // geometric bisection to relative 1e-12 in kappa (the bracket can span
    // hundreds of orders of magnitude for threshold-grazing channels)
    for (int it = 0; it < 200 && (hi - lo) > 1e-12 * hi; ++it) {
        double mid = std::exp(0.5 * (std::log(lo) + std::log(hi)));
        if (!(mid > lo && mid < hi)) mid = 0.5 * (lo + hi);
        double fm = secular_residual(p, ell, mid);
        if (fm == 0.0) { lo = hi = mid; flo = fb = 0.0; break; }
        if (flo * fm < 0.0) { hi = mid; fb = fm; }
        else { lo = mid; flo = fm; }
    }
    // a few secant steps to polish
    double x0r = lo, x1r = hi, f0 = flo, f1 = fb;
    for (int it = 0; it < 4 && f1 != f0; ++it) {
        double xn = x1r - f1 * (x1r - x0r) / (f1 - f0);
        if (!(xn > 0.0) || !std::isfinite(xn)) break;
        x0r = x1r; f0 = f1;
        x1r = xn; f1 = secular_residual(p, ell, xn);
    }
    double kappa = std::fabs(f1) <= std::fabs(f0) ? x1r : x0r;
    Couplings c = couplings(p);
    double scale = 1.0 + (c.branch == Branch::Regular ? std::fabs(c.beta_tilde) : std::fabs(c.w0_tilde));
    if (std::fabs(secular_residual(p, ell, kappa)) > 1e-9 * scale)
        throw convergence_error("find_bound_state: residual above tolerance at converged root (ell=" +
                                std::to_string(ell) + ")");
    return BoundState{ell, kappa, -kappa * kappa, degeneracy(p.d, ell)};
}

Spectrum spectrum(const PotentialParams& p) {
    validate(p);
    Spectrum s;
    s.params = p;
    s.total_count = 0;
    LmaxResult lm = l_max(p);
    if (!lm.ell_max) return s;
    for (int ell = 0; ell <= *lm.ell_max; ++ell) {
        std::optional<BoundState> st;
        try {
            st = find_bound_state(p, ell);
        } catch (const convergence_error& e) {
            throw convergence_error("spectrum: channel ell=" + std::to_string(ell) + ": " + e.what());
        }
        if (st) {
            s.states.push_back(*st);
            s.total_count += st->degeneracy;
        }
    }
    return s;
}

} // namespace ddp
