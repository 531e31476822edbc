#ifndef DDP_SPECFUN_HPP
#define DDP_SPECFUN_HPP

namespace ddp::specfun {

// Bessel family selector: ordinary first/second kind, modified first/second kind.
enum class BesselKind { J, Y, I, K };

// Order domain of the artifact: nu >= -1 and an exact multiple of 1/2.
// Anything else is a programming error and is rejected.
bool valid_order(double nu);

// C_nu(x) for x > 0.  Negative orders are resolved by the standard
// reflection formulas (exact for integer and half-integer nu).
// Throws std::domain_error for x <= 0 or invalid order, and
// ddp::overflow_error when an unscaled I value exceeds the double range.
double bessel(BesselKind kind, double nu, double x);

// Scaled variants: e^{-x} I_nu(x) and e^{x} K_nu(x); J and Y pass through.
// These stay representable for arguments up to ~700 where the unscaled
// modified functions overflow/underflow.
double bessel_scaled(BesselKind kind, double nu, double x);

// Ratio C_{mu-1}(x) / C_{mu}(x), computed from scaled values so the
// exponential factors cancel.  For I at small argument, where both
// numerator and denominator underflow, the small-argument series ratio
// is used instead.  For J and Y a vanishing denominator raises pole_error.
double ratio_minus1(BesselKind kind, double mu, double x);

// d/dx log[ (qx)^{-nu} C_{l+nu}(qx) ] evaluated at x = x0, with
// nu = (d-2)/2 and q the momentum (kappa for I/K, k for J/Y).
// Expressed through the recurrence C'_{m} = +-C_{m-1} -+ (m/z) C_m,
// never by finite differencing.
double log_derivative(BesselKind kind, int ell, int d, double q, double x0);

// Independent half-integer path: spherical-function recursions built
// directly from sin/cos/sinh/cosh seeds (Miller backward recurrence for
// j and i, stable upward recurrence for y and k).  Used as a cross-check
// of the general path; requires nu = l + 1/2 with integer l >= -1.
double half_integer_bessel(BesselKind kind, double nu, double x);

} // namespace ddp::specfun

#endif
