#include "spectrans/model.hpp"

#include <cmath>

#include "spectrans/eigensolve.hpp"

namespace spectrans {

LaurentBlochHamiltonian::LaurentBlochHamiltonian(int bands, int left_range,
                                                 int right_range,
                                                 std::vector<CMatrix> coeffs)
    : bands_(bands), p_(left_range), q_(right_range), coeffs_(std::move(coeffs)) {
    if (bands_ < 1) throw invalid_model_error("bands must be >= 1");
    if (p_ < 0 || q_ < 0) throw invalid_model_error("hopping ranges must be >= 0");
    if (p_ + q_ < 1) throw invalid_model_error("p+q must be >= 1");
    if (static_cast<int>(coeffs_.size()) != p_ + q_ + 1)
        throw invalid_model_error("expected p+q+1 coefficient blocks");
    for (const auto& t : coeffs_) {
        if (t.rows() != bands_ || t.cols() != bands_)
            throw invalid_model_error("coefficient block has wrong shape");
        if (!all_finite(t)) throw invalid_model_error("non-finite coefficient");
    }
    // Tight ranges: at least one extreme block nonzero.
    if (coeffs_.front().norm() == 0.0 && coeffs_.back().norm() == 0.0)
        throw invalid_model_error("both extreme hopping blocks vanish");
}

const CMatrix& LaurentBlochHamiltonian::coeff(int n) const {
    if (n < -p_ || n > q_) throw precondition_error("coefficient index out of range");
    return coeffs_[static_cast<size_t>(n + p_)];
}

CMatrix LaurentBlochHamiltonian::evaluate(Complex beta) const {
    if (beta == Complex(0.0, 0.0))
        throw precondition_error("H(beta) has a pole at beta = 0");
    CMatrix out = CMatrix::Zero(bands_, bands_);
    for (int n = -p_; n <= q_; ++n)
        out += coeffs_[static_cast<size_t>(n + p_)] * std::pow(beta, n);
    return out;
}

CMatrix LaurentBlochHamiltonian::k_derivative(Complex beta) const {
    if (beta == Complex(0.0, 0.0))
        throw precondition_error("H(beta) has a pole at beta = 0");
    CMatrix out = CMatrix::Zero(bands_, bands_);
    const Complex iu(0.0, 1.0);
    for (int n = -p_; n <= q_; ++n)
        out += coeffs_[static_cast<size_t>(n + p_)] *
               (iu * static_cast<double>(n) * std::pow(beta, n));
    return out;
}

CMatrix LaurentBlochHamiltonian::mu_derivative(Complex beta) const {
    if (beta == Complex(0.0, 0.0))
        throw precondition_error("H(beta) has a pole at beta = 0");
    CMatrix out = CMatrix::Zero(bands_, bands_);
    for (int n = -p_; n <= q_; ++n)
        out += coeffs_[static_cast<size_t>(n + p_)] *
               (static_cast<double>(n) * std::pow(beta, n));
    return out;
}

LaurentBlochHamiltonian build_hatano_nelson(double tL, double tR) {
    if (tL == 0.0 && tR == 0.0)
        throw invalid_model_error("Hatano-Nelson with tL = tR = 0");
    std::vector<CMatrix> coeffs(3, CMatrix::Zero(1, 1));
    coeffs[0](0, 0) = tR;  // n = -1
    coeffs[2](0, 0) = tL;  // n = +1
    return LaurentBlochHamiltonian(1, 1, 1, std::move(coeffs));
}

LaurentBlochHamiltonian build_nonreciprocal_ssh(double t1, double t2, double t3,
                                                double gamma) {
    // Pauli form [t1 + (t2+t3)(beta+1/beta)/2] sx
    //          + [(t2-t3)(beta-1/beta)/(2i) + i*gamma/2] sy
    // written out as Laurent blocks:
    //   T[0]  = [[0, t1+gamma/2], [t1-gamma/2, 0]]
    //   T[+1] = [[0, t3], [t2, 0]]
    //   T[-1] = [[0, t2], [t3, 0]]
    std::vector<CMatrix> coeffs(3, CMatrix::Zero(2, 2));
    coeffs[0](0, 1) = t2;
    coeffs[0](1, 0) = t3;
    coeffs[1](0, 1) = t1 + 0.5 * gamma;
    coeffs[1](1, 0) = t1 - 0.5 * gamma;
    coeffs[2](0, 1) = t3;
    coeffs[2](1, 0) = t2;
    return LaurentBlochHamiltonian(2, 1, 1, std::move(coeffs));
}

std::vector<Complex> bloch_eigenvalues(const LaurentBlochHamiltonian& h,
                                       double k, double mu) {
    const Complex beta = std::exp(Complex(mu, k));
    if (h.bands() == 1) {
        CMatrix v = h.evaluate(beta);
        return {v(0, 0)};
    }
    return eig_dense(h.evaluate(beta));
}

FiniteLattice ring_lattice(const LaurentBlochHamiltonian& h, int sites,
                           double mu) {
    const int p = h.left_range(), q = h.right_range(), m = h.bands();
    if (sites <= p + q)
        throw precondition_error("ring needs N > p+q to avoid block wrap-around");
    FiniteLattice lat;
    lat.sites = sites;
    lat.bands = m;
    lat.boundary = Boundary::PBC;
    lat.gauge_mu = mu;
    lat.matrix = CMatrix::Zero(m * sites, m * sites);
    for (int n = -p; n <= q; ++n) {
        const CMatrix block = h.coeff(n) * std::exp(n * mu);
        if (block.norm() == 0.0) continue;
        for (int j = 0; j < sites; ++j) {
            const int col = ((j + n) % sites + sites) % sites;
            lat.matrix.block(m * j, m * col, m, m) += block;
        }
    }
    return lat;
}

FiniteLattice open_lattice(const LaurentBlochHamiltonian& h, int sites) {
    const int p = h.left_range(), q = h.right_range(), m = h.bands();
    if (sites <= p + q)
        throw precondition_error("open chain needs N > p+q");
    FiniteLattice lat;
    lat.sites = sites;
    lat.bands = m;
    lat.boundary = Boundary::OBC;
    lat.gauge_mu = 0.0;
    lat.matrix = CMatrix::Zero(m * sites, m * sites);
    for (int n = -p; n <= q; ++n) {
        const CMatrix& block = h.coeff(n);
        if (block.norm() == 0.0) continue;
        for (int j = 0; j < sites; ++j) {
            const int col = j + n;
            if (col < 0 || col >= sites) continue;
            lat.matrix.block(m * j, m * col, m, m) += block;
        }
    }
    return lat;
}

std::vector<Complex> ring_spectrum(const LaurentBlochHamiltonian& h, int sites,
                                   double mu) {
    // Block-circulant eigenvalues are exactly the Bloch eigenvalues on the
    // uniform momentum grid k_j = 2*pi*j/N.
    std::vector<Complex> out;
    out.reserve(static_cast<size_t>(h.bands()) * sites);
    for (int j = 0; j < sites; ++j) {
        const double k = kTwoPi * j / sites;
        for (Complex e : bloch_eigenvalues(h, k, mu)) out.push_back(e);
    }
    return out;
}

}  // namespace spectrans
