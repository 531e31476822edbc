#ifndef DDP_ERRORS_HPP
#define DDP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ddp {

// Thrown when a bracketing or iterative search exhausts its budget.
class convergence_error : public std::runtime_error {
public:
    explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a J or Y denominator vanishes at the evaluation point.
class pole_error : public std::runtime_error {
public:
    explicit pole_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an unscaled modified Bessel value would exceed the double range.
class overflow_error : public std::runtime_error {
public:
    explicit overflow_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when adaptive quadrature cannot reach the requested tolerance.
class quadrature_error : public std::runtime_error {
public:
    explicit quadrature_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an operation requires a matching-condition branch other than
// the one the couplings are on (e.g. Regular-only ops at w1 = +-1).
class branch_error : public std::logic_error {
public:
    explicit branch_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace ddp

#endif
