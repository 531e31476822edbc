#ifndef DDP_SCATTER_HPP
#define DDP_SCATTER_HPP

#include "model.hpp"

#include <complex>

namespace ddp {

struct PhaseShift {
    int ell;
    double k;
    double delta;                 // principal branch (-pi/2, pi/2]
    std::complex<double> s;       // e^{2 i delta}, unit modulus
};

// Phase shift of channel ell at momentum k > 0 on the Regular branch,
// evaluated from the two-argument arctangent of the closed-form
// numerator/denominator so tangent poles map to delta = pi/2.
PhaseShift phase_shift(const PotentialParams& p, int ell, double k);

// Hard-hypersphere (w1 -> -1) closed form: tan delta = J_{l+nu}/Y_{l+nu} at k x0.
double phase_shift_hard_hypersphere(int d, int ell, double k, double x0);

// Pure delta' (w0 = 0) closed form in z0 = k x0; w1 not in {+-1}.
double phase_shift_pure_delta_prime(int d, int ell, double w1, double k, double x0);

// S-matrix eigenvalue e^{2 i delta}; continuous through delta = pi/2.
std::complex<double> s_matrix_eigenvalue(double delta);

// Analytic continuation k -> i kappa of the S-matrix denominator: the
// coefficient of the non-normalizable exterior solution.  Vanishes (and
// changes sign) exactly at bound-state momenta.
double continued_denominator(const PotentialParams& p, int ell, double kappa);

} // namespace ddp

#endif
