#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace spectrans {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

inline bool is_finite(double x) { return std::isfinite(x); }
inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline bool all_finite(const CMatrix& a) {
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            if (!is_finite(a(i, j))) return false;
    return true;
}

// Invalid model construction (zero Hamiltonian, non-tight ranges, ...).
struct invalid_model_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Violated operation precondition (size mismatch, pole at beta=0, ...).
struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Numerical routine did not converge or lost accuracy beyond contract.
struct solver_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Matrix detected as (numerically) defective; callers treat as EP signal.
struct near_ep_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct not_found_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct not_bracketed_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A characteristic root sits on the GBZ circle: EP on the GBZ.
struct at_transition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Reference energy hits the spectrum during a winding integral.
struct on_spectrum_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace spectrans
