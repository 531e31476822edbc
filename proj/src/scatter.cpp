#include "scatter.hpp"
#include "errors.hpp"
#include "specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace ddp {

using specfun::BesselKind;

namespace {

double fold_principal(double delta) {
    while (delta > M_PI_2) delta -= M_PI;
    while (delta <= -M_PI_2) delta += M_PI;
    return delta;
}

struct CylValues {
    double J, Y, DJ, DY; // DJ = z0 J_{mu-1} - (d-2+ell) J_mu, d/dz of z^{-nu} J_{l+nu} up to z^{-nu}/x0
};

CylValues cyl_values(int d, int ell, double z0) {
    double mu = ell + 0.5 * (d - 2);
    double c = d - 2 + ell;
    CylValues v;
    v.J = specfun::bessel(BesselKind::J, mu, z0);
    v.Y = specfun::bessel(BesselKind::Y, mu, z0);
    double Jm = specfun::bessel(BesselKind::J, mu - 1.0, z0);
    double Ym = specfun::bessel(BesselKind::Y, mu - 1.0, z0);
    v.DJ = z0 * Jm - c * v.J;
    v.DY = z0 * Ym - c * v.Y;
    return v;
}

} // namespace

PhaseShift phase_shift(const PotentialParams& p, int ell, double k) {
    validate(p);
    if (ell < 0) throw std::domain_error("phase_shift: ell >= 0 required");
    if (!(k > 0.0)) throw std::domain_error("phase_shift: k must be positive");
    Couplings c = couplings(p);
    if (c.branch != Branch::Regular)
        throw branch_error("phase_shift: use the dedicated w1 = +-1 operations");
    double z0 = k * p.x0;
    CylValues v = cyl_values(p.d, ell, z0);
    double bt = c.alpha * c.beta_tilde * p.x0;
    double a2 = c.alpha * c.alpha;
    double num = -v.J * ((1.0 - a2) * v.DJ + bt * v.J);
    double den = -v.DJ * v.Y + v.J * (a2 * v.DY - bt * v.Y);
    if (std::fabs(num) < 1e-300 && std::fabs(den) < 1e-300)
        throw std::runtime_error("phase_shift: numerator and denominator both underflow");
    double delta = fold_principal(std::atan2(num, den));
    return PhaseShift{ell, k, delta, s_matrix_eigenvalue(delta)};
}

double phase_shift_hard_hypersphere(int d, int ell, double k, double x0) {
    if (!(k > 0.0) || !(x0 > 0.0)) throw std::domain_error("phase_shift_hard_hypersphere: k, x0 > 0");
    double mu = ell + 0.5 * (d - 2);
    double J = specfun::bessel(BesselKind::J, mu, k * x0);
    double Y = specfun::bessel(BesselKind::Y, mu, k * x0);
    return fold_principal(std::atan2(J, Y));
}

double phase_shift_pure_delta_prime(int d, int ell, double w1, double k, double x0) {
    if (w1 == 1.0 || w1 == -1.0)
        throw branch_error("phase_shift_pure_delta_prime: w1 = +-1 excluded");
    if (!(k > 0.0) || !(x0 > 0.0)) throw std::domain_error("phase_shift_pure_delta_prime: k, x0 > 0");
    double alpha = (1.0 + w1) / (1.0 - w1);
    double a2 = alpha * alpha;
    double z0 = k * x0;
    CylValues v = cyl_values(d, ell, z0);
    double num = -(1.0 - a2) * v.J * ((d - 1) * v.J + 2.0 * v.DJ);
    double den = (a2 - 1.0) * (d - 1) * v.J * v.Y + 2.0 * (a2 * v.DY * v.J - v.DJ * v.Y);
    return fold_principal(std::atan2(num, den));
}

std::complex<double> s_matrix_eigenvalue(double delta) {
    return {std::cos(2.0 * delta), std::sin(2.0 * delta)};
}

double continued_denominator(const PotentialParams& p, int ell, double kappa) {
    validate(p);
    if (!(kappa > 0.0)) throw std::domain_error("continued_denominator: kappa must be positive");
    Couplings c = couplings(p);
    if (c.branch != Branch::Regular)
        throw branch_error("continued_denominator: Regular branch only");
    double mu = ell + 0.5 * (p.d - 2);
    double cc = p.d - 2 + ell;
    double y = kappa * p.x0;
    double Is = specfun::bessel_scaled(BesselKind::I, mu, y);
    double Ks = specfun::bessel_scaled(BesselKind::K, mu, y);
    double Ims = specfun::bessel_scaled(BesselKind::I, mu - 1.0, y);
    double Kms = specfun::bessel_scaled(BesselKind::K, mu - 1.0, y);
    double DK = -cc * Ks - y * Kms;
    double DI = y * Ims - cc * Is;
    return c.alpha * DK * Is - c.beta_tilde * p.x0 * Is * Ks - DI * Ks / c.alpha;
}

} // namespace ddp
