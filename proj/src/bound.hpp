#ifndef DDP_BOUND_HPP
#define DDP_BOUND_HPP

#include "model.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace ddp {

struct BoundState {
    int ell;
    double kappa;            // > 0
    double lambda;           // -kappa^2
    std::uint64_t degeneracy;
};

struct Spectrum {
    PotentialParams params;
    std::vector<BoundState> states; // ordered by ell; lambda strictly increasing
    std::uint64_t total_count;      // sum of degeneracies
};

// Residual of the secular condition at momentum kappa.  Zero iff kappa is a
// bound-state momentum.  On the Regular branch this is
//   alpha d/dx log K_l(kappa x)|x0 - beta_tilde - alpha^-1 d/dx log I_l(kappa x)|x0,
// evaluated through scaled Bessel ratios.  On the w1 = +1 branch the
// residual is the exterior Robin condition against the decaying K solution,
// and on w1 = -1 the interior Robin condition against the regular I solution
// (the complementary side is Dirichlet and supports no bound state).
double secular_residual(const PotentialParams& p, int ell, double kappa);

// Left-hand side of the single-equation form of the secular condition in
// y0 = kappa x0.  Crosses secular_rhs exactly where secular_residual
// vanishes; kept for curve plots and cross-checking.
double secular_F(double alpha, double nu, int ell, double y0);

// Energy- and ell-independent right-hand side matching secular_F.
double secular_rhs(const Couplings& c, double nu, double x0);

// Unique root of the secular residual for the channel, when the channel
// admits one (ell <= ell_max and the L_max boundary is not exactly hit).
// Bracketing relies on strict monotonicity of the residual; failure to
// find a sign change before kappa x0 = 700 raises convergence_error.
std::optional<BoundState> find_bound_state(const PotentialParams& p, int ell);

// Full discrete spectrum: channels ell = 0..ell_max with degeneracies.
Spectrum spectrum(const PotentialParams& p);

} // namespace ddp

#endif
