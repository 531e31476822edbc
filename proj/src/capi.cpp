#include "ddp/ddp.h"

#include "bound.hpp"
#include "errors.hpp"
#include "model.hpp"
#include "observables.hpp"
#include "scatter.hpp"
#include "specfun.hpp"
#include "verify.hpp"
#include "zeromode.hpp"

#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

struct ddp_params {
    ddp::PotentialParams p;
};

struct ddp_spectrum {
    ddp::Spectrum s;
};

namespace {

thread_local std::string g_last_error;

void set_error(const char* what) { g_last_error = what ? what : ""; }

// Maps the C++ exception taxonomy onto the status enum; every API body runs
// inside this guard so exceptions never cross the C boundary.
template <typename Fn>
ddp_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return DDP_OK;
    } catch (const ddp::convergence_error& e) {
        set_error(e.what());
        return DDP_ERR_CONVERGENCE;
    } catch (const ddp::quadrature_error& e) {
        set_error(e.what());
        return DDP_ERR_CONVERGENCE;
    } catch (const ddp::pole_error& e) {
        set_error(e.what());
        return DDP_ERR_EVAL;
    } catch (const ddp::overflow_error& e) {
        set_error(e.what());
        return DDP_ERR_EVAL;
    } catch (const ddp::branch_error& e) {
        set_error(e.what());
        return DDP_ERR_DOMAIN;
    } catch (const std::domain_error& e) {
        set_error(e.what());
        return DDP_ERR_DOMAIN;
    } catch (const std::invalid_argument& e) {
        set_error(e.what());
        return DDP_ERR_DOMAIN;
    } catch (const std::bad_alloc&) {
        set_error("out of memory");
        return DDP_ERR_EVAL;
    } catch (const std::exception& e) {
        set_error(e.what());
        return DDP_ERR_EVAL;
    }
}

ddp_status require(bool cond, const char* msg) {
    if (cond) return DDP_OK;
    set_error(msg);
    return DDP_ERR_DOMAIN;
}

ddp::specfun::BesselKind to_kind(ddp_bessel_kind k) {
    switch (k) {
        case DDP_BESSEL_J: return ddp::specfun::BesselKind::J;
        case DDP_BESSEL_Y: return ddp::specfun::BesselKind::Y;
        case DDP_BESSEL_I: return ddp::specfun::BesselKind::I;
        case DDP_BESSEL_K: return ddp::specfun::BesselKind::K;
    }
    throw std::domain_error("unknown Bessel kind");
}

ddp_branch to_branch(ddp::Branch b) {
    switch (b) {
        case ddp::Branch::Regular: return DDP_BRANCH_REGULAR;
        case ddp::Branch::RobinDirichletPlus: return DDP_BRANCH_ROBIN_DIRICHLET_PLUS;
        case ddp::Branch::RobinDirichletMinus: return DDP_BRANCH_ROBIN_DIRICHLET_MINUS;
    }
    return DDP_BRANCH_REGULAR;
}

} // namespace

extern "C" {

const char* ddp_last_error(void) { return g_last_error.c_str(); }

const char* ddp_status_name(ddp_status s) {
    switch (s) {
        case DDP_OK: return "ok";
        case DDP_ERR_DOMAIN: return "domain";
        case DDP_ERR_CONVERGENCE: return "convergence";
        case DDP_ERR_NO_STATE: return "no-state";
        case DDP_ERR_EVAL: return "eval";
    }
    return "unknown";
}

ddp_status ddp_params_create(int d, double w0, double w1, double x0, ddp_params** out) {
    if (ddp_status s = require(out != nullptr, "null output pointer"); s != DDP_OK) return s;
    return guarded([&] {
        ddp::PotentialParams p{d, w0, w1, x0};
        ddp::validate(p);
        *out = new ddp_params{p};
    });
}

void ddp_params_free(ddp_params* p) { delete p; }

ddp_status ddp_params_from_physical(int d, double a, double b, double r0, double m,
                                    double hbar, double c, ddp_params** out) {
    if (ddp_status s = require(out != nullptr, "null output pointer"); s != DDP_OK) return s;
    return guarded([&] {
        ddp::PotentialParams p = ddp::nondimensionalize(a, b, r0, m, hbar, c);
        p.d = d;
        ddp::validate(p);
        *out = new ddp_params{p};
    });
}

ddp_status ddp_couplings(const ddp_params* p, double* alpha, double* beta,
                         double* beta_tilde, double* w0_tilde, ddp_branch* branch) {
    if (ddp_status s = require(p != nullptr, "null params handle"); s != DDP_OK) return s;
    return guarded([&] {
        ddp::Couplings c = ddp::couplings(p->p);
        if (alpha) *alpha = c.alpha;
        if (beta) *beta = c.beta;
        if (beta_tilde) *beta_tilde = c.beta_tilde;
        if (w0_tilde) *w0_tilde = c.w0_tilde;
        if (branch) *branch = to_branch(c.branch);
    });
}

ddp_status ddp_lmax(const ddp_params* p, double* L_max, int* ell_max, int* at_boundary) {
    if (ddp_status s = require(p != nullptr, "null params handle"); s != DDP_OK) return s;
    return guarded([&] {
        ddp::LmaxResult r = ddp::l_max(p->p);
        if (L_max) *L_max = r.L_max;
        if (ell_max) *ell_max = r.ell_max ? *r.ell_max : -1;
        if (at_boundary) *at_boundary = r.at_integer_boundary ? 1 : 0;
    });
}

ddp_status ddp_eta(int d, int ell, int* eta) {
    if (ddp_status s = require(eta != nullptr, "null output pointer"); s != DDP_OK) return s;
    return guarded([&] { *eta = ddp::eta(d, ell); });
}

ddp_status ddp_degeneracy(int d, int ell, uint64_t* deg) {
    if (ddp_status s = require(deg != nullptr, "null output pointer"); s != DDP_OK) return s;
    return guarded([&] { *deg = ddp::degeneracy(d, ell); });
}

ddp_status ddp_bessel(ddp_bessel_kind kind, double nu, double x, double* out) {
    if (ddp_status s = require(out != nullptr, "null output pointer"); s != DDP_OK) return s;
    return guarded([&] { *out = ddp::specfun::bessel(to_kind(kind), nu, x); });
}

ddp_status ddp_bessel_scaled(ddp_bessel_kind kind, double nu, double x, double* out) {
    if (ddp_status s = require(out != nullptr, "null output pointer"); s != DDP_OK) return s;
    return guarded([&] { *out = ddp::specfun::bessel_scaled(to_kind(kind), nu, x); });
}

ddp_status ddp_secular_residual(const ddp_params* p, int ell, double kappa, double* out) {
    if (ddp_status s = require(p != nullptr && out != nullptr, "null pointer argument");
        s != DDP_OK)
        return s;
    return guarded([&] { *out = ddp::secular_residual(p->p, ell, kappa); });
}

ddp_status ddp_find_bound_state(const ddp_params* p, int ell, int* exists,
                                double* kappa, double* lambda) {
    if (ddp_status s = require(p != nullptr && exists != nullptr, "null pointer argument");
        s != DDP_OK)
        return s;
    return guarded([&] {
        std::optional<ddp::BoundState> bs = ddp::find_bound_state(p->p, ell);
        *exists = bs ? 1 : 0;
        if (bs) {
            if (kappa) *kappa = bs->kappa;
            if (lambda) *lambda = bs->lambda;
        }
    });
}

ddp_status ddp_spectrum_compute(const ddp_params* p, ddp_spectrum** out) {
    if (ddp_status s = require(p != nullptr && out != nullptr, "null pointer argument");
        s != DDP_OK)
        return s;
    return guarded([&] { *out = new ddp_spectrum{ddp::spectrum(p->p)}; });
}

int ddp_spectrum_size(const ddp_spectrum* s) {
    return s ? static_cast<int>(s->s.states.size()) : 0;
}

uint64_t ddp_spectrum_total(const ddp_spectrum* s) { return s ? s->s.total_count : 0; }

ddp_status ddp_spectrum_state(const ddp_spectrum* s, int i, int* ell, double* kappa,
                              double* lambda, uint64_t* deg) {
    if (ddp_status st = require(s != nullptr, "null spectrum handle"); st != DDP_OK) return st;
    if (i < 0 || i >= static_cast<int>(s->s.states.size())) {
        set_error("spectrum index out of range");
        return DDP_ERR_DOMAIN;
    }
    const ddp::BoundState& b = s->s.states[static_cast<size_t>(i)];
    if (ell) *ell = b.ell;
    if (kappa) *kappa = b.kappa;
    if (lambda) *lambda = b.lambda;
    if (deg) *deg = b.degeneracy;
    return DDP_OK;
}

void ddp_spectrum_free(ddp_spectrum* s) { delete s; }

ddp_status ddp_phase_shift(const ddp_params* p, int ell, double k, double* delta,
                           double* s_re, double* s_im) {
    if (ddp_status s = require(p != nullptr, "null params handle"); s != DDP_OK) return s;
    return guarded([&] {
        ddp::PhaseShift ps = ddp::phase_shift(p->p, ell, k);
        if (delta) *delta = ps.delta;
        if (s_re) *s_re = ps.s.real();
        if (s_im) *s_im = ps.s.imag();
    });
}

ddp_status ddp_phase_shift_hard_hypersphere(int d, int ell, double k, double x0, double* delta) {
    if (ddp_status s = require(delta != nullptr, "null output pointer"); s != DDP_OK) return s;
    return guarded([&] { *delta = ddp::phase_shift_hard_hypersphere(d, ell, k, x0); });
}

ddp_status ddp_phase_shift_pure_delta_prime(int d, int ell, double w1, double k, double x0,
                                            double* delta) {
    if (ddp_status s = require(delta != nullptr, "null output pointer"); s != DDP_OK) return s;
    return guarded([&] { *delta = ddp::phase_shift_pure_delta_prime(d, ell, w1, k, x0); });
}

ddp_status ddp_zero_mode_exists(const ddp_params* p, int ell, int* exists) {
    if (ddp_status s = require(p != nullptr && exists != nullptr, "null pointer argument");
        s != DDP_OK)
        return s;
    return guarded([&] { *exists = ddp::zero_mode_exists(p->p, ell) ? 1 : 0; });
}

ddp_status ddp_zero_mode_w0(int d, int ell, double w1, double x0, int* exists, double* w0) {
    if (ddp_status s = require(exists != nullptr, "null output pointer"); s != DDP_OK) return s;
    return guarded([&] {
        std::optional<double> r = ddp::zero_mode_w0(d, ell, w1, x0);
        *exists = r ? 1 : 0;
        if (r && w0) *w0 = *r;
    });
}

ddp_status ddp_zero_mode_coefficients(const ddp_params* p, int ell, double* c1, double* c2) {
    if (ddp_status s = require(p != nullptr, "null params handle"); s != DDP_OK) return s;
    bool missing = false;
    ddp_status st = guarded([&] {
        if (!ddp::zero_mode_exists(p->p, ell)) {
            missing = true;
            return;
        }
        ddp::ZeroMode z = ddp::zero_mode_wavefunction(p->p, ell);
        if (c1) *c1 = z.c1;
        if (c2) *c2 = z.c2;
    });
    if (st == DDP_OK && missing) {
        set_error("no zero mode for these parameters");
        return DDP_ERR_NO_STATE;
    }
    return st;
}

ddp_status ddp_mean_radius_ratio(const ddp_params* p, int ell, double* ratio) {
    if (ddp_status s = require(p != nullptr && ratio != nullptr, "null pointer argument");
        s != DDP_OK)
        return s;
    bool no_state = false;
    ddp_status st = guarded([&] {
        std::optional<ddp::BoundState> bs = ddp::find_bound_state(p->p, ell);
        if (!bs) {
            no_state = true;
            return;
        }
        *ratio = ddp::mean_radius(p->p, ell, bs->kappa).ratio;
    });
    if (st == DDP_OK && no_state) {
        set_error("channel has no bound state");
        return DDP_ERR_NO_STATE;
    }
    return st;
}

ddp_status ddp_mean_radius_at(const ddp_params* p, int ell, double kappa, double* ratio) {
    if (ddp_status s = require(p != nullptr && ratio != nullptr, "null pointer argument");
        s != DDP_OK)
        return s;
    return guarded([&] { *ratio = ddp::mean_radius(p->p, ell, kappa).ratio; });
}

ddp_status ddp_mean_radius_zero_limit(double alpha, int eta, int* is_inf, double* ratio) {
    if (ddp_status s = require(is_inf != nullptr, "null output pointer"); s != DDP_OK) return s;
    return guarded([&] {
        std::optional<double> r = ddp::mean_radius_zero_limit(alpha, eta);
        *is_inf = r ? 0 : 1;
        if (r && ratio) *ratio = *r;
    });
}

ddp_status ddp_verify(int trials, unsigned seed, int* failures, char* report, size_t cap) {
    if (ddp_status s = require(failures != nullptr, "null output pointer"); s != DDP_OK) return s;
    return guarded([&] {
        std::string text;
        *failures = ddp::run_verification(trials, seed, text);
        if (report && cap > 0) {
            size_t n = std::min(cap - 1, text.size());
            std::memcpy(report, text.data(), n);
            report[n] = '\0';
        }
    });
}

} // extern "C"
