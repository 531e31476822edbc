/* C API for the hyperspherical delta-delta' spectral library.
 *
 * All functions return ddp_status; results go through out-parameters.
 * Handles are opaque and must be released with the matching _free call.
 * The library is thread safe: handles are immutable after creation and
 * the last-error message is thread local.
 */
#ifndef DDP_H
#define DDP_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    DDP_OK = 0,
    DDP_ERR_DOMAIN = 1,      /* invalid argument */
    DDP_ERR_CONVERGENCE = 2, /* root search or quadrature failed */
    DDP_ERR_NO_STATE = 3,    /* requested channel has no such state */
    DDP_ERR_EVAL = 4         /* evaluation error (pole, overflow, ...) */
} ddp_status;

typedef enum {
    DDP_BRANCH_REGULAR = 0,
    DDP_BRANCH_ROBIN_DIRICHLET_PLUS = 1,  /* w1 = +1 */
    DDP_BRANCH_ROBIN_DIRICHLET_MINUS = 2  /* w1 = -1 */
} ddp_branch;

typedef enum { DDP_BESSEL_J = 0, DDP_BESSEL_Y = 1, DDP_BESSEL_I = 2, DDP_BESSEL_K = 3 } ddp_bessel_kind;

typedef struct ddp_params ddp_params;
typedef struct ddp_spectrum ddp_spectrum;

/* Thread-local message for the most recent failing call in this thread. */
const char* ddp_last_error(void);
const char* ddp_status_name(ddp_status s);

/* --- problem definition ------------------------------------------------ */

ddp_status ddp_params_create(int d, double w0, double w1, double x0, ddp_params** out);
void ddp_params_free(ddp_params* p);

/* Physical-units entry point: w0 = 2a/(hbar c), w1 = b m/hbar^2, x0 = m c r0/hbar. */
ddp_status ddp_params_from_physical(int d, double a, double b, double r0, double m,
                                    double hbar, double c, ddp_params** out);

ddp_status ddp_couplings(const ddp_params* p, double* alpha, double* beta,
                         double* beta_tilde, double* w0_tilde, ddp_branch* branch);

/* L_max threshold; *ell_max = -1 when no channel admits a bound state.
 * *at_boundary is nonzero when L_max is exactly an integer (zero-mode case). */
ddp_status ddp_lmax(const ddp_params* p, double* L_max, int* ell_max, int* at_boundary);

ddp_status ddp_eta(int d, int ell, int* eta);
ddp_status ddp_degeneracy(int d, int ell, uint64_t* deg);

/* --- special functions -------------------------------------------------- */

ddp_status ddp_bessel(ddp_bessel_kind kind, double nu, double x, double* out);
ddp_status ddp_bessel_scaled(ddp_bessel_kind kind, double nu, double x, double* out);

/* --- bound states ------------------------------------------------------- */

ddp_status ddp_secular_residual(const ddp_params* p, int ell, double kappa, double* out);

/* *exists = 0 and outputs untouched when the channel has no bound state. */
ddp_status ddp_find_bound_state(const ddp_params* p, int ell, int* exists,
                                double* kappa, double* lambda);

ddp_status ddp_spectrum_compute(const ddp_params* p, ddp_spectrum** out);
int ddp_spectrum_size(const ddp_spectrum* s);
uint64_t ddp_spectrum_total(const ddp_spectrum* s);
ddp_status ddp_spectrum_state(const ddp_spectrum* s, int i, int* ell, double* kappa,
                              double* lambda, uint64_t* deg);
void ddp_spectrum_free(ddp_spectrum* s);

/* --- scattering --------------------------------------------------------- */

ddp_status ddp_phase_shift(const ddp_params* p, int ell, double k, double* delta,
                           double* s_re, double* s_im);
ddp_status ddp_phase_shift_hard_hypersphere(int d, int ell, double k, double x0, double* delta);
ddp_status ddp_phase_shift_pure_delta_prime(int d, int ell, double w1, double k, double x0,
                                            double* delta);

/* --- zero modes --------------------------------------------------------- */

ddp_status ddp_zero_mode_exists(const ddp_params* p, int ell, int* exists);

/* The w0 placing channel (d, ell) on the zero-mode surface; *exists = 0
 * when eta = 5-(d+2 ell) > 0 (no surface). */
ddp_status ddp_zero_mode_w0(int d, int ell, double w1, double x0, int* exists, double* w0);

/* L2-normalized piecewise coefficients of the zero-mode wavefunction. */
ddp_status ddp_zero_mode_coefficients(const ddp_params* p, int ell, double* c1, double* c2);

/* --- observables -------------------------------------------------------- */

/* Mean radius ratio <x>/x0 of the channel's bound state (found internally).
 * DDP_ERR_NO_STATE when the channel has no bound state. */
ddp_status ddp_mean_radius_ratio(const ddp_params* p, int ell, double* ratio);

/* Same, at a caller-supplied bound-state momentum. */
ddp_status ddp_mean_radius_at(const ddp_params* p, int ell, double kappa, double* ratio);

/* Closed-form kappa->0 limit; *is_inf = 1 (ratio untouched) for eta in {0..3}. */
ddp_status ddp_mean_radius_zero_limit(double alpha, int eta, int* is_inf, double* ratio);

/* --- verification ------------------------------------------------------- */

/* Runs the oracle cross-check suite; writes a textual report (truncated to
 * cap bytes, always NUL-terminated) and the number of failed checks. */
ddp_status ddp_verify(int trials, unsigned seed, int* failures, char* report, size_t cap);

#ifdef __cplusplus
}
#endif

#endif /* DDP_H */
