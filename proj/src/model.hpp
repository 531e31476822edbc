#ifndef DDP_MODEL_HPP
#define DDP_MODEL_HPP

#include <cstdint>
#include <optional>

namespace ddp {

// Dimensionless problem instance: dimension d >= 2, delta strength w0,
// delta' strength w1, hypersphere radius x0 > 0.
struct PotentialParams {
    int d;
    double w0;
    double w1;
    double x0;
};

// Validates invariants; throws std::domain_error on violation.
void validate(const PotentialParams& p);

// Matching-condition branch.  Regular covers w1 != +-1; the degenerate
// couplings w1 = +1 / -1 decouple into one-sided Robin/Dirichlet
// conditions and are tagged explicitly (detected by exact comparison).
enum class Branch { Regular, RobinDirichletPlus, RobinDirichletMinus };

struct Couplings {
    double alpha;      // (1+w1)/(1-w1); NaN on degenerate branches
    double beta;       // w0/(1-w1^2);   NaN on degenerate branches
    double beta_tilde; // beta - (alpha^2-1)(d-1)/(2 alpha x0)
    double w0_tilde;   // 2(1-d) w1/x0 + w0 (well defined on all branches)
    Branch branch;
};

struct BoundaryData {
    double value;
    double slope;
};

struct Channel {
    int ell;
    double nu;                // (d-2)/2
    int eta;                  // 5 - (d + 2 ell)
    std::uint64_t degeneracy;
};

struct LmaxResult {
    double L_max;
    std::optional<int> ell_max;  // none when L_max < 0
    bool at_integer_boundary;    // L_max == floor(L_max) exactly (zero-mode case)
};

PotentialParams nondimensionalize(double a, double b, double r0, double m, double hbar, double c);

Couplings couplings(const PotentialParams& p);

// Propagates (value, slope) of the radial function R across x0 on the
// Regular branch; throws branch_error otherwise.
BoundaryData apply_matching(const Couplings& c, const BoundaryData& inner);
BoundaryData invert_matching(const Couplings& c, const BoundaryData& outer);

std::uint64_t degeneracy(int d, int ell);

LmaxResult l_max(const PotentialParams& p);

int eta(int d, int ell);

Channel channel(int d, int ell);

inline double order_nu(int d) { return 0.5 * (d - 2); }

} // namespace ddp

#endif
