#ifndef DDP_OBSERVABLES_HPP
#define DDP_OBSERVABLES_HPP

#include "model.hpp"

#include <optional>

namespace ddp {

struct MeanRadius {
    int ell;
    double kappa;      // 0 for the zero-energy limit
    double value;      // <x>; meaningful only when !is_infinite
    double ratio;      // <x>/x0
    bool is_infinite;
};

// Expectation value of the dimensionless radius for the bound state
// (p, ell, kappa).  kappa must be the channel's bound-state momentum
// (obtained from bound::find_bound_state); the value is the ratio of
// z^2- to z^1-weighted I/K moments with the matching weight alpha I/K.
MeanRadius mean_radius(const PotentialParams& p, int ell, double kappa);

// Closed-form kappa -> 0+ limit of <x>/x0: finite for eta <= -1, the
// infinity marker (nullopt) for eta in {0,1,2,3}.
std::optional<double> mean_radius_zero_limit(double alpha, int eta);

} // namespace ddp

#endif
