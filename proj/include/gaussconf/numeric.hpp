#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace gaussconf {

// One place for every tolerance the library uses. Exact-arithmetic identities
// are judged with atol/rtol; anything that went through a finite difference is
// judged with derivative_tol, normalized by the local derivative scale.
struct NumericPolicy {
    double atol = 1e-12;           // absolute tolerance, exact-arithmetic identities
    double rtol = 1e-12;           // relative tolerance, exact-arithmetic identities
    double derivative_tol = 1e-6;  // scale-normalized threshold for FD-based verdicts
    double frame_tol = 1e-6;       // frame constancy / standard-frame classification
    double singular_eps = 1e-12;   // elements at or below this norm are not inverted
    double pole_eps = 1e-9;        // pole detection scale for Moebius evaluation
    double vahlen_tol = 1e-9;      // relative grade-purity bound for Vahlen results
    double h = 0.0;                // FD step; 0 selects cbrt(eps) * max(1, |z|)
    int fd_order = 2;              // central stencil order, 2 or 4

    double step_for(double z_norm) const {
        if (h > 0.0) return h;
        return std::cbrt(2.220446049250313e-16) * std::max(1.0, z_norm);
    }

    bool close(double x, double y) const {
        return std::abs(x - y) <= atol + rtol * std::max(std::abs(x), std::abs(y));
    }
};

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad arguments, malformed configs, dimension mismatches.
struct input_error : error {
    using error::error;
};

// Attempt to invert an element with norm at or below singular_eps.
struct singular_error : error {
    using error::error;
};

// Moebius evaluation hit a pole.
struct pole_error : error {
    using error::error;
};

// A map evaluation left its declared codomain (wrong dimension, NaN, Inf).
struct map_contract_error : error {
    using error::error;
};

// Vahlen matrix produced a result outside paravector space.
struct invalid_matrix_error : error {
    using error::error;
};

// First partial derivative vanished where an operation requires it.
struct degenerate_error : error {
    using error::error;
};

}  // namespace gaussconf
