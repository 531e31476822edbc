#ifndef DDP_ZEROMODE_HPP
#define DDP_ZEROMODE_HPP

#include "model.hpp"

#include <optional>

namespace ddp {

// Normalizable lambda = 0 solution.  Piecewise powers
//   v(x) = c2 x^{(4-eta)/2}  for x < x0,
//   v(x) = c1 x^{(eta-2)/2}  for x > x0,
// with c2 = x0^{eta-3} alpha^{-1} c1.
struct ZeroMode {
    int ell;
    int eta;
    double c1;
    double c2;
    bool normalized;
};

// Coupling beta on the zero-mode existence surface for given alpha, eta, x0.
double zero_mode_beta(double alpha, int eta, double x0);

// Exact predicate: eta <= 0 and beta sits on the existence surface
// (relative 1e-12).  Regular branch only.
bool zero_mode_exists(const PotentialParams& p, int ell);

// Engineering form of the surface: the unique w0 placing channel (d, ell)
// on the zero-mode surface for given (w1, x0); none when eta > 0.
// Requires w1 != +-1.
std::optional<double> zero_mode_w0(int d, int ell, double w1, double x0);

// L2-normalized piecewise coefficients; throws std::runtime_error when no
// zero mode exists for the parameters.
ZeroMode zero_mode_wavefunction(const PotentialParams& p, int ell);

} // namespace ddp

#endif
