#include "specfun.hpp"
#include "errors.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_bessel.h>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace ddp::specfun {

namespace {

const int g_handler_off = [] {
    gsl_set_error_handler_off();
    return 0;
}();

bool is_half_integral(double nu) { return std::nearbyint(2.0 * nu) == 2.0 * nu; }

void check_args(double nu, double x) {
    if (!(x > 0.0)) throw std::domain_error("bessel: argument must be positive");
    if (!valid_order(nu)) throw std::domain_error("bessel: order must be >= -1 and a multiple of 1/2");
}

// cos(nu*pi), sin(nu*pi) exact for integer and half-integer nu.
void trig_pi(double nu, double& c, double& s) {
    long long twice = std::llround(2.0 * nu);
    if (twice % 2 == 0) {
        long long n = twice / 2;
        c = (n % 2 == 0) ? 1.0 : -1.0;
        s = 0.0;
    } else {
        long long m = (twice - 1) / 2; // nu = m + 1/2
        c = 0.0;
        s = (((m % 2) + 2) % 2 == 0) ? 1.0 : -1.0;
    }
}

double gsl_eval(const char* name, int status, const gsl_sf_result& r) {
    if (status != GSL_SUCCESS)
        throw std::runtime_error(std::string(name) + ": " + gsl_strerror(status));
    return r.val;
}

double Jnu_pos(double nu, double x) {
    gsl_sf_result r;
    int s = gsl_sf_bessel_Jnu_e(nu, x, &r);
    if (s == GSL_EUNDRFLW) return 0.0;
    return gsl_eval("Jnu", s, r);
}

double Ynu_pos(double nu, double x) {
    gsl_sf_result r;
    int s = gsl_sf_bessel_Ynu_e(nu, x, &r);
    if (s == GSL_EOVRFLW) throw overflow_error("Ynu overflow");
    return gsl_eval("Ynu", s, r);
}

double Inu_scaled_pos(double nu, double x) {
    gsl_sf_result r;
    // the fractional-order routine yields NaN for integer orders at large
    // argument; the dedicated integer-order path is reliable there
    int s = (nu == std::floor(nu))
                ? gsl_sf_bessel_In_scaled_e(static_cast<int>(nu), x, &r)
                : gsl_sf_bessel_Inu_scaled_e(nu, x, &r);
    if (s == GSL_EUNDRFLW) return 0.0;
    return gsl_eval("Inu_scaled", s, r);
}

double Knu_scaled_pos(double nu, double x) {
    gsl_sf_result r;
    int s = gsl_sf_bessel_Knu_scaled_e(nu, x, &r);
    if (s == GSL_EOVRFLW) throw overflow_error("Knu overflow");
    return gsl_eval("Knu_scaled", s, r);
}

// Scaled values with reflection for nu in [-1, 0).
double scaled_value(BesselKind kind, double nu, double x) {
    if (nu >= 0.0) {
        switch (kind) {
            case BesselKind::J: return Jnu_pos(nu, x);
            case BesselKind::Y: return Ynu_pos(nu, x);
            case BesselKind::I: return Inu_scaled_pos(nu, x);
            case BesselKind::K: return Knu_scaled_pos(nu, x);
        }
    }
    double a = -nu, c, s;
    trig_pi(a, c, s);
    switch (kind) {
        case BesselKind::J: return c * Jnu_pos(a, x) - s * Ynu_pos(a, x);
        case BesselKind::Y: return s * Jnu_pos(a, x) + c * Ynu_pos(a, x);
        case BesselKind::I: {
            // I_{-a} = I_a + (2/pi) sin(a pi) K_a, scaled by e^{-x}
            double v = Inu_scaled_pos(a, x);
            if (s != 0.0) v += (2.0 / M_PI) * s * Knu_scaled_pos(a, x) * std::exp(-2.0 * x);
            return v;
        }
        case BesselKind::K: return Knu_scaled_pos(a, x);
    }
    return std::numeric_limits<double>::quiet_NaN();
}

// Small-argument series ratio I_{mu-1}(x)/I_mu(x), three terms; used when
// the scaled values underflow (large mu, tiny x).
double iratio_series(double mu, double x) {
    double q = 0.25 * x * x;
    double num = 1.0 + q / mu + q * q / (2.0 * mu * (mu + 1.0));
    double den = 1.0 + q / (mu + 1.0) + q * q / (2.0 * (mu + 1.0) * (mu + 2.0));
    return (2.0 * mu / x) * num / den;
}

} // namespace

bool valid_order(double nu) {
    return std::isfinite(nu) && nu >= -1.0 && is_half_integral(nu);
}

double bessel(BesselKind kind, double nu, double x) {
    check_args(nu, x);
    double v = scaled_value(kind, nu, x);
    switch (kind) {
        case BesselKind::J:
        case BesselKind::Y:
            return v;
        case BesselKind::I: {
            if (v == 0.0) return 0.0;
            if (std::log(std::fabs(v)) + x > std::log(std::numeric_limits<double>::max()))
                throw overflow_error("I_nu overflow; use the scaled variant");
            return v * std::exp(x);
        }
        case BesselKind::K:
            return v * std::exp(-x);
    }
    return std::numeric_limits<double>::quiet_NaN();
}

double bessel_scaled(BesselKind kind, double nu, double x) {
    check_args(nu, x);
    return scaled_value(kind, nu, x);
}

double ratio_minus1(BesselKind kind, double mu, double x) {
    check_args(mu - 1.0, x);
    if (kind == BesselKind::K && x < 1e-8) {
        // small-argument forms: K_mu ~ Gamma(mu)(2/x)^mu/2 for mu > 0,
        // K_0 ~ -ln(x/2) - gamma; the scaled values overflow long before
        // the ratio does (corrections are O(x^2), far below 1 ulp here)
        const double euler = 0.57721566490153286;
        if (mu >= 1.5) return x / (2.0 * (mu - 1.0));
        if (mu == 1.0) return x * (std::log(2.0 / x) - euler);
        if (mu == 0.5) return 1.0; // K_{-1/2} = K_{1/2}
        if (mu == 0.0) return 1.0 / (x * (std::log(2.0 / x) - euler));
    }
    double den = scaled_value(kind, mu, x);
    if (kind == BesselKind::I) {
        if (den == 0.0 && mu >= 1.0) return iratio_series(mu, x);
        double num = scaled_value(BesselKind::I, mu - 1.0, x);
        if (den == 0.0) throw std::runtime_error("I ratio: denominator underflow");
        return num / den;
    }
    double num = scaled_value(kind, mu - 1.0, x);
    if ((kind == BesselKind::J || kind == BesselKind::Y) && std::fabs(den) < 1e-14)
        throw pole_error("ratio: J/Y denominator vanishes at evaluation point");
    if (den == 0.0) throw pole_error("ratio: denominator vanishes");
    return num / den;
}

double log_derivative(BesselKind kind, int ell, int d, double q, double x0) {
    if (ell < 0 || d < 2) throw std::domain_error("log_derivative: need ell >= 0, d >= 2");
    if (!(q > 0.0) || !(x0 > 0.0)) throw std::domain_error("log_derivative: q and x0 must be positive");
    double mu = ell + 0.5 * (d - 2);
    double z = q * x0;
    double c = d - 2 + ell; // 2*nu + ell
    double r = ratio_minus1(kind, mu, z);
    if (kind == BesselKind::K) return (-z * r - c) / x0;
    return (z * r - c) / x0;
}

double half_integer_bessel(BesselKind kind, double nu, double x) {
    check_args(nu, x);
    long long twice = std::llround(2.0 * nu);
    if (twice % 2 == 0) throw std::domain_error("half_integer_bessel: order must be half-integral");
    int l = static_cast<int>((twice - 1) / 2); // nu = l + 1/2, l >= -1
    double fac = std::sqrt(2.0 * x / M_PI) / x; // spherical -> cylindrical, one power of x absorbed below

    switch (kind) {
        case BesselKind::J: {
            if (l == -1) return std::sqrt(2.0 / (M_PI * x)) * std::cos(x);
            if (l == 0) return std::sqrt(2.0 / (M_PI * x)) * std::sin(x);
            // Miller backward recurrence for x^{-?}: work with s_n = x * j_n(x)
            int start = l + 30 + static_cast<int>(1.5 * x);
            double sp = 0.0, sc = 1e-300, target = 0.0;
            for (int n = start; n >= 0; --n) {
                double sm = (2.0 * n + 3.0) / x * sc - sp;
                sp = sc;
                sc = sm;
                if (n == l) target = sc;
                if (std::fabs(sc) > 1e250) {
                    sc *= 1e-250;
                    sp *= 1e-250;
                    target *= 1e-250;
                }
            }
            // sc now holds s_0 up to normalization; s_0 = sin x
            return fac * target * (std::sin(x) / sc);
        }
        case BesselKind::Y: {
            double ym = std::sin(x) / x * x;  // s_{-1} = x*y_{-1} = sin x
            double yc = -std::cos(x);         // s_0 = x*y_0
            if (l == -1) return fac * ym;
            for (int n = 0; n < l; ++n) {
                double yn = (2.0 * n + 1.0) / x * yc - ym;
                ym = yc;
                yc = yn;
            }
            return fac * yc;
        }
        case BesselKind::I: {
            // scaled spherical i: t_n = x * e^{-x} i_n(x); t_0 = (1-e^{-2x})/2
            double e2 = std::expm1(-2.0 * x);
            double t0 = -0.5 * e2;
            if (l == -1) {
                double tm1 = 0.5 * (2.0 + e2); // (1+e^{-2x})/2
                return fac * tm1 * std::exp(x);
            }
            if (l == 0) return fac * t0 * std::exp(x);
            int start = l + 30 + static_cast<int>(1.5 * x);
            double tp = 0.0, tc = 1e-300, target = 0.0;
            for (int n = start; n >= 0; --n) {
                double tm = tp + (2.0 * n + 3.0) / x * tc;
                tp = tc;
                tc = tm;
                if (n == l) target = tc;
                if (std::fabs(tc) > 1e250) {
                    tc *= 1e-250;
                    tp *= 1e-250;
                    target *= 1e-250;
                }
            }
            double v = target * (t0 / tc); // scaled value of x*e^{-x} i_l
            double lv = std::log(std::fabs(v) * fac) + x;
            if (lv > std::log(std::numeric_limits<double>::max()))
                throw overflow_error("half_integer_bessel: I overflow");
            return fac * v * std::exp(x);
        }
        case BesselKind::K: {
            double k0 = std::sqrt(M_PI / (2.0 * x)) * std::exp(-x);
            if (l <= 0) return k0; // K_{-1/2} = K_{1/2}
            double km = k0, kc = k0;
            for (int n = 1; n <= l; ++n) {
                double mu_prev = n - 0.5;
                double kn = km + (2.0 * mu_prev / x) * kc;
                km = kc;
                kc = kn;
            }
            return kc;
        }
    }
    return std::numeric_limits<double>::quiet_NaN();
}

} // namespace ddp::specfun
