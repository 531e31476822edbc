#ifndef DDP_VERIFY_HPP
#define DDP_VERIFY_HPP

#include <string>

namespace ddp {

// Cross-path verification report: secular roots vs shooting oracle,
// closed-form phase shifts vs the general route, unitarity, pole
// correspondence, mean-radius moments.  Returns the number of failed
// checks; appends one line per section to `report`.
int run_verification(int trials, unsigned seed, std::string& report);

} // namespace ddp

#endif
