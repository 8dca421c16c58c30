#pragma once

#include <vector>

#include "spectrans/types.hpp"

namespace spectrans {

/// Eigenvalue multiset of a dense complex matrix (Schur / QR based;
/// LAPACK zgeev for larger dimensions). Order is unspecified.
std::vector<Complex> eig_dense(const CMatrix& a);

/// Biorthogonal eigen-decomposition: columns of `right` are right
/// eigenvectors U, columns of `left` satisfy left^dagger * right = I,
/// and overlap = U^dagger U (Hermitian positive definite away from EPs).
struct EigenFrame {
    CVector values;
    CMatrix right;
    CMatrix left;
    CMatrix overlap;
};

/// Condition number of the eigenvector matrix above which a matrix is
/// treated as numerically defective (an exceptional-point signal).
inline constexpr double kNearEpCondition = 1e8;

/// Throws near_ep_error when the eigenvector frame is numerically
/// defective (condition number of U above kNearEpCondition).
EigenFrame eig_frame(const CMatrix& a);

/// Non-throwing variant; returns false on the near-EP signal.
bool try_eig_frame(const CMatrix& a, EigenFrame& out);

double eigvec_condition(const CMatrix& u);

/// All roots (with multiplicity) of sum_k c[k] z^k, coefficients in
/// ascending powers. Exact zero leading coefficients are trimmed; a zero
/// polynomial is rejected. Aberth-Ehrlich iteration plus one Newton
/// polish per root.
std::vector<Complex> poly_roots(const std::vector<Complex>& coeffs);

/// Horner evaluation of an ascending-coefficient polynomial.
Complex poly_eval(const std::vector<Complex>& coeffs, Complex z);

}  // namespace spectrans
