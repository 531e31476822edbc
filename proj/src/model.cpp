#include "model.hpp"
#include "errors.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace ddp {

void validate(const PotentialParams& p) {
    if (p.d < 2) throw std::domain_error("PotentialParams: d must be >= 2");
    if (!(p.x0 > 0.0)) throw std::domain_error("PotentialParams: x0 must be positive");
    if (!std::isfinite(p.w0) || !std::isfinite(p.w1))
        throw std::domain_error("PotentialParams: couplings must be finite");
}

PotentialParams nondimensionalize(double a, double b, double r0, double m, double hbar, double c) {
    if (!(m > 0.0) || !(r0 > 0.0) || !(hbar > 0.0) || !(c > 0.0))
        throw std::domain_error("nondimensionalize: scales must be positive");
    PotentialParams p;
    p.d = 3; // caller overrides; dimension does not enter the scaling
    p.w0 = 2.0 * a / (hbar * c);
    p.w1 = b * m / (hbar * hbar);
    p.x0 = m * c * r0 / hbar;
    return p;
}

Couplings couplings(const PotentialParams& p) {
    validate(p);
    Couplings c;
    c.w0_tilde = 2.0 * (1 - p.d) * p.w1 / p.x0 + p.w0;
    if (p.w1 == 1.0) {
        c.branch = Branch::RobinDirichletPlus;
        c.alpha = c.beta = c.beta_tilde = std::numeric_limits<double>::quiet_NaN();
        return c;
    }
    if (p.w1 == -1.0) {
        c.branch = Branch::RobinDirichletMinus;
        c.alpha = c.beta = c.beta_tilde = std::numeric_limits<double>::quiet_NaN();
        return c;
    }
    c.branch = Branch::Regular;
    c.alpha = (1.0 + p.w1) / (1.0 - p.w1);
    c.beta = p.w0 / (1.0 - p.w1 * p.w1);
    c.beta_tilde = c.beta - (c.alpha * c.alpha - 1.0) * (p.d - 1) / (2.0 * c.alpha * p.x0);
    return c;
}

BoundaryData apply_matching(const Couplings& c, const BoundaryData& inner) {
    if (c.branch != Branch::Regular)
        throw branch_error("apply_matching: degenerate branch constrains each side separately");
    return {c.alpha * inner.value, c.beta_tilde * inner.value + inner.slope / c.alpha};
}

BoundaryData invert_matching(const Couplings& c, const BoundaryData& outer) {
    if (c.branch != Branch::Regular)
        throw branch_error("invert_matching: degenerate branch constrains each side separately");
    double value = outer.value / c.alpha;
    return {value, c.alpha * (outer.slope - c.beta_tilde * value)};
}

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace

std::uint64_t degeneracy(int d, int ell) {
    if (d < 2 || ell < 0) throw std::domain_error("degeneracy: need d >= 2, ell >= 0");
    if (ell == 0) return 1;
    if (d == 2) return 2;
    // (d+l-3)!/((d-2)! l!) (d+2(l-1)) = binom(d+l-3, l) (d+2l-2)/(d-2)
    return binomial(static_cast<std::uint64_t>(d + ell - 3), static_cast<std::uint64_t>(ell)) *
               static_cast<std::uint64_t>(d + 2 * ell - 2) /
               static_cast<std::uint64_t>(d - 2);
}

LmaxResult l_max(const PotentialParams& p) {
    validate(p);
    LmaxResult r;
    r.L_max = (p.w1 - p.x0 * p.w0 / 2.0) / (p.w1 * p.w1 + 1.0) + 0.5 * (2 - p.d);
    r.at_integer_boundary = (r.L_max == std::floor(r.L_max));
    if (r.L_max < 0.0)
        r.ell_max = std::nullopt;
    else
        r.ell_max = static_cast<int>(std::floor(r.L_max));
    return r;
}

int eta(int d, int ell) {
    if (d < 2 || ell < 0) throw std::domain_error("eta: need d >= 2, ell >= 0");
    return 5 - (d + 2 * ell);
}

Channel channel(int d, int ell) {
    return {ell, order_nu(d), eta(d, ell), degeneracy(d, ell)};
}

} // namespace ddp
