#pragma once

#include <stdexcept>
#include <string>

namespace padl {

struct padl_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A quantity vanished to working precision; rebuild with larger M.
struct precision_exhausted : padl_error {
    explicit precision_exhausted(const std::string& what = "value is 0 within working precision")
        : padl_error(what) {}
};

// Every coefficient of a series is divisible by p within the window.
// The pipeline assumes a vanishing mu-invariant, so this is never a result.
struct mu_positive : padl_error {
    explicit mu_positive(const std::string& what = "mu > 0 within precision window")
        : padl_error(what) {}
};

// No Stickelberger convention matched the interpolation oracle.
struct calibration_failure : padl_error {
    explicit calibration_failure(const std::string& what) : padl_error(what) {}
};

// Cyclotomic reduction of a phase tally left nonconstant coefficients.
struct non_integer_sum : padl_error {
    explicit non_integer_sum(const std::string& what) : padl_error(what) {}
};

// An m-indexed sequence did not settle within its range.
struct not_stabilized : padl_error {
    explicit not_stabilized(const std::string& what = "sequence did not stabilize; extend the m range")
        : padl_error(what) {}
};

// Malformed instance/fixture document or invalid domain input.
struct schema_error : padl_error {
    explicit schema_error(const std::string& what) : padl_error(what) {}
};

}  // namespace padl
