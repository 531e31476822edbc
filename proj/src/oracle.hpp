#ifndef DDP_ORACLE_HPP
#define DDP_ORACLE_HPP

#include "model.hpp"

#include <optional>
#include <vector>

namespace ddp::oracle {

// Direct numerical integration of the reduced radial equation
//   -u'' + (d+2l-3)(d+2l-1)/(4x^2) u = lambda u
// with the matching matrix applied at x0.  Brute-force verification path
// for the secular-equation, phase-shift, and mean-radius routes; not part
// of the public C API except through the verification entry point.

enum class Side { Interior, Exterior };

struct RadialSolution {
    std::vector<double> grid;    // strictly increasing
    std::vector<double> u;       // reduced radial function
    std::vector<double> u_prime;
    double kappa_or_k;
    Side side;
};

// Uniform-grid interior solution on [x0*1e-3, x_end] for energy lambda
// (either sign), regular power-law initial data.  n >= 2 samples.
RadialSolution integrate_interior(const PotentialParams& p, int ell, double lambda,
                                  double x_end, int n);

// Shooting solver: outward regular solution, inward decaying solution,
// matching defect bisected in kappa.  Returns none when no sign change of
// the defect exists on the scanned range.
std::optional<double> shoot_bound_state(const PotentialParams& p, int ell);

// Wavefunction moment int x u^2 / int u^2 for the bound state at kappa,
// computed from the integrated solution (independent of the Bessel-moment
// route).
double mean_radius_moment(const PotentialParams& p, int ell, double kappa);

// Scattering phase from a least-squares fit of the integrated solution
// against the two free exterior basis solutions sqrt(x) J_mu(kx),
// sqrt(x) Y_mu(kx); principal branch (-pi/2, pi/2].
double fit_asymptotic_phase(const PotentialParams& p, int ell, double k);

} // namespace ddp::oracle

#endif
