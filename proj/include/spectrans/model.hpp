#pragma once

#include <vector>

#include "spectrans/types.hpp"

namespace spectrans {

/// m x m matrix Laurent polynomial H(beta) = sum_{n=-p}^{q} T[n] beta^n.
///
/// Convention fixed repo-wide: T[+1] multiplies beta = e^{ik+mu}; in real
/// space T[n] sits on the n-th (block) super-diagonal, i.e. it connects
/// site j+n to site j via the matrix element H_{j,j+n}. A plane wave
/// psi_j = e^{ikj} then has eigenvalue sum_n T[n] e^{ikn} = H(e^{ik}).
class LaurentBlochHamiltonian {
  public:
    /// coeffs[i] is the block for n = i - left_range, i = 0 .. p+q.
    LaurentBlochHamiltonian(int bands, int left_range, int right_range,
                            std::vector<CMatrix> coeffs);

    int bands() const { return bands_; }
    int left_range() const { return p_; }
    int right_range() const { return q_; }

    const CMatrix& coeff(int n) const;

    /// H(beta). Throws precondition_error at beta = 0 (Laurent pole).
    CMatrix evaluate(Complex beta) const;

    /// dH/dk at beta = e^{ik+mu}: sum_n (i n) T[n] beta^n.
    CMatrix k_derivative(Complex beta) const;

    /// dH/dmu at beta = e^{ik+mu}: sum_n n T[n] beta^n.
    CMatrix mu_derivative(Complex beta) const;

  private:
    int bands_;
    int p_;
    int q_;
    std::vector<CMatrix> coeffs_;
};

enum class Boundary { PBC, OBC };

/// Dense finite-lattice form of a model. PBC rings carry the imaginary
/// gauge mu baked into the hopping blocks (T[n] -> T[n] e^{n mu});
/// OBC lattices are gauge-free by construction.
struct FiniteLattice {
    int sites = 0;
    int bands = 1;
    Boundary boundary = Boundary::PBC;
    double gauge_mu = 0.0;
    CMatrix matrix;

    int dim() const { return static_cast<int>(matrix.rows()); }
};

/// Hatano-Nelson chain H(beta) = tL*beta + tR/beta.
LaurentBlochHamiltonian build_hatano_nelson(double tL, double tR);

/// Non-reciprocal SSH chain with next-nearest-neighbor hopping t3 and
/// non-reciprocity gamma (two bands, off-diagonal structure).
LaurentBlochHamiltonian build_nonreciprocal_ssh(double t1, double t2,
                                                double t3, double gamma);

/// Eigenvalues of H(e^{ik+mu}) as an unordered multiset.
std::vector<Complex> bloch_eigenvalues(const LaurentBlochHamiltonian& h,
                                       double k, double mu);

/// Block-circulant PBC ring of N unit cells under imaginary gauge mu.
FiniteLattice ring_lattice(const LaurentBlochHamiltonian& h, int sites,
                           double mu);

/// Block-Toeplitz OBC chain of N unit cells (hoppings truncated at edges).
FiniteLattice open_lattice(const LaurentBlochHamiltonian& h, int sites);

/// All m*N ring eigenvalues at gauge mu, ordered by momentum index
/// k_j = 2*pi*j/N (labels attached). Equals eig(ring_lattice) as a multiset.
std::vector<Complex> ring_spectrum(const LaurentBlochHamiltonian& h,
                                   int sites, double mu);

}  // namespace spectrans
