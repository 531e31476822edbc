#include "observables.hpp"
#include "errors.hpp"
#include "specfun.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include <cmath>
#include <memory>
#include <stdexcept>

namespace ddp {

using specfun::BesselKind;

namespace {

struct IntegrandParams {
    double mu;
    double y0;
    int power;     // 1 or 2
    bool exterior; // K side if true
};

// All integrands carry a global e^{-2 y0} scaling so the I side never
// overflows; the scaling cancels in the numerator/denominator ratio.
double integrand(double z, void* vp) {
    const auto& q = *static_cast<IntegrandParams*>(vp);
    double zp = q.power == 2 ? z * z : z;
    if (q.exterior) {
        double Ks = specfun::bessel_scaled(BesselKind::K, q.mu, z);
        double e = std::exp(q.y0 - z);
        return zp * Ks * Ks * e * e;
    }
    double Is = specfun::bessel_scaled(BesselKind::I, q.mu, z);
    double e = std::exp(z - q.y0);
    return zp * Is * Is * e * e;
}

struct WorkspaceDeleter {
    void operator()(gsl_integration_workspace* w) const { gsl_integration_workspace_free(w); }
};

double integrate(IntegrandParams q, double a, double b, gsl_integration_workspace* ws) {
    gsl_function f{&integrand, &q};
    double result = 0.0, abserr = 0.0;
    int status = gsl_integration_qag(&f, a, b, 0.0, 1e-10, 2000, GSL_INTEG_GAUSS31, ws, &result, &abserr);
    if (status == GSL_EROUND || status == GSL_EMAXITER)
        status = gsl_integration_qag(&f, a, b, 0.0, 1e-8, 2000, GSL_INTEG_GAUSS61, ws, &result, &abserr);
    if (status != GSL_SUCCESS)
        throw quadrature_error(std::string("mean_radius quadrature: ") + gsl_strerror(status));
    if (result != 0.0 && std::fabs(abserr / result) > 1e-8)
        throw quadrature_error("mean_radius quadrature: error estimate above tolerance");
    return result;
}

} // namespace

MeanRadius mean_radius(const PotentialParams& p, int ell, double kappa) {
    validate(p);
    if (!(kappa > 0.0)) throw std::domain_error("mean_radius: kappa must be positive");
    Couplings c = couplings(p);
    if (c.branch != Branch::Regular)
        throw branch_error("mean_radius: Regular branch only");
    double mu = ell + order_nu(p.d);
    double y0 = kappa * p.x0;

    std::unique_ptr<gsl_integration_workspace, WorkspaceDeleter> ws(
        gsl_integration_workspace_alloc(2000));

    double Is0 = specfun::bessel_scaled(BesselKind::I, mu, y0);
    double Ks0 = specfun::bessel_scaled(BesselKind::K, mu, y0);
    double w = c.alpha * Is0 / Ks0;
    double weight = w * w;

    // exterior tail truncated where z^2 e^{-2(z-y0)} is below 1e-18 of the total
    double tail = y0 + 40.0;

    double i2 = integrate({mu, y0, 2, false}, 0.0, y0, ws.get());
    double i1 = integrate({mu, y0, 1, false}, 0.0, y0, ws.get());
    double k2 = integrate({mu, y0, 2, true}, y0, tail, ws.get());
    double k1 = integrate({mu, y0, 1, true}, y0, tail, ws.get());

    double num = i2 + weight * k2;
    double den = i1 + weight * k1;
    if (!(den > 0.0)) throw quadrature_error("mean_radius: vanishing normalization integral");
    double value = num / (kappa * den);
    return MeanRadius{ell, kappa, value, value / p.x0, false};
}

std::optional<double> mean_radius_zero_limit(double alpha, int eta) {
    if (eta > 3) throw std::domain_error("mean_radius_zero_limit: eta <= 3 required");
    if (eta >= 0) return std::nullopt; // infinity marker for eta in {0,1,2,3}
    double e = eta;
    double inner = 2.0 * (e - 3.0) / ((e - 6.0) * (alpha * alpha * (e - 5.0) + e - 1.0));
    return (e - 1.0) / e * (1.0 - std::fabs(inner));
}

} // namespace ddp
