#include "zeromode.hpp"
#include "errors.hpp"

#include <cmath>
#include <stdexcept>

namespace ddp {

double zero_mode_beta(double alpha, int eta, double x0) {
    if (alpha == 0.0) throw std::domain_error("zero_mode_beta: alpha must be nonzero");
    if (!(x0 > 0.0)) throw std::domain_error("zero_mode_beta: x0 must be positive");
    return (-2.0 * alpha * alpha + alpha * alpha * eta + eta - 4.0) / (2.0 * alpha * x0);
}

bool zero_mode_exists(const PotentialParams& p, int ell) {
    validate(p);
    Couplings c = couplings(p);
    if (c.branch != Branch::Regular)
        throw branch_error("zero_mode_exists: Regular branch only");
    int e = eta(p.d, ell);
    if (e > 0) return false;
    double target = zero_mode_beta(c.alpha, e, p.x0);
    return std::fabs(c.beta - target) <= 1e-12 * std::max(1.0, std::fabs(target));
}

std::optional<double> zero_mode_w0(int d, int ell, double w1, double x0) {
    if (w1 == 1.0 || w1 == -1.0)
        throw branch_error("zero_mode_w0: degenerate branches not treated");
    int e = eta(d, ell);
    if (e > 0) return std::nullopt;
    double alpha = (1.0 + w1) / (1.0 - w1);
    return zero_mode_beta(alpha, e, x0) * (1.0 - w1 * w1);
}

ZeroMode zero_mode_wavefunction(const PotentialParams& p, int ell) {
    if (!zero_mode_exists(p, ell))
        throw std::runtime_error("zero_mode_wavefunction: parameters are off the existence surface");
    Couplings c = couplings(p);
    int e = eta(p.d, ell);
    // closed-form power integrals:
    //   int_0^{x0} x^{4-eta} dx = x0^{5-eta}/(5-eta)
    //   int_{x0}^inf x^{eta-2} dx = x0^{eta-1}/(1-eta)
    double ratio = std::pow(p.x0, e - 3) / c.alpha; // c2/c1
    double norm2 = ratio * ratio * std::pow(p.x0, 5 - e) / (5.0 - e) +
                   std::pow(p.x0, e - 1) / (1.0 - e);
    double c1 = 1.0 / std::sqrt(norm2);
    return ZeroMode{ell, e, c1, ratio * c1, true};
}

} // namespace ddp
