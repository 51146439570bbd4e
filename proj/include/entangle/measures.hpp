#ifndef ENTANGLE_MEASURES_HPP
#define ENTANGLE_MEASURES_HPP

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/SVD>

#include "entangle/state_space.hpp"

namespace entangle {

/// Single-qubit bipartition (1)(N-1): the partial transpose acts on `transposed_qubit`.
struct Partition {
    int transposed_qubit{0};
};

/// Coherences beta_i moved by the partial transpose of a W-type state, in the
/// 1/N-normalised expansion: beta_i = N <..0_k..| rho |..1_k..>.
template <typename Real>
struct WCoherenceVector {
    int qubits{0};
    std::vector<Complex<Real>> beta;
};

namespace detail {

template <typename Real>
void require_physical(const DensityMatrix<Real>& rho, double tol, const char* what) {
    if (!is_physical(rho, tol)) throw PreconditionError(std::string(what) + " needs a physical density matrix");
}

}  // namespace detail

/// Wootters concurrence max{0, l1 - l2 - l3 - l4}, where l_i are the decreasing
/// square roots of the eigenvalues of rho (Y(x)Y) rho* (Y(x)Y). They are computed
/// as singular values of sqrt(rho) (Y(x)Y) conj(sqrt(rho)), which avoids taking
/// square roots of a non-Hermitian spectrum.
template <typename Real>
Real concurrence(const DensityMatrix<Real>& rho, double tol = kDefaultTolerance) {
    if (rho.rows() != 4 || rho.cols() != 4) throw PreconditionError("concurrence needs a 4x4 density matrix");
    detail::require_physical(rho, tol, "concurrence");

    Eigen::SelfAdjointEigenSolver<DensityMatrix<Real>> eig(rho);
    RealVector<Real> w = eig.eigenvalues();
    for (Eigen::Index i = 0; i < w.size(); ++i) w[i] = std::sqrt(std::max(w[i], Real(0)));
    const DensityMatrix<Real> root = eig.eigenvectors() * w.asDiagonal() * eig.eigenvectors().adjoint();

    const DensityMatrix<Real> yy = pauli_product<Real>(Pauli::Y, Pauli::Y);
    const DensityMatrix<Real> a = root * yy * root.conjugate();
    const RealVector<Real> l = Eigen::JacobiSVD<DensityMatrix<Real>>(a).singularValues();  // decreasing
    return std::clamp(l[0] - l[1] - l[2] - l[3], Real(0), Real(1));
}

/// Closed form on the slice: C = max{0, R - (1 + n_ZZ)/2}.
template <typename Real>
Real concurrence_d3(const D3Point<Real>& p, double tol = kDefaultTolerance) {
    if (!d3_membership(p, tol)) throw PreconditionError("concurrence_d3: point lies outside the physical slice");
    return std::max(Real(0), p.radius() - (1 + p.n_zz) / 2);
}

/// Transposes the bra/ket bits of one qubit. Qubit 0 is the leftmost
/// (most significant) bit.
template <typename Real>
HermitianMatrix<Real> partial_transpose(const DensityMatrix<Real>& rho, Partition part) {
    const int n = qubit_count(rho.rows());
    if (rho.cols() != rho.rows()) throw PreconditionError("partial_transpose needs a square matrix");
    if (part.transposed_qubit < 0 || part.transposed_qubit >= n)
        throw PreconditionError("partial_transpose: qubit index " + std::to_string(part.transposed_qubit) +
                                " out of range for " + std::to_string(n) + " qubits");
    const Eigen::Index mask = Eigen::Index{1} << (n - 1 - part.transposed_qubit);
    HermitianMatrix<Real> out(rho.rows(), rho.cols());
    for (Eigen::Index row = 0; row < rho.rows(); ++row) {
        for (Eigen::Index col = 0; col < rho.cols(); ++col) {
            const Eigen::Index flip = (row ^ col) & mask;
            out(row ^ flip, col ^ flip) = rho(row, col);
        }
    }
    return out;
}

template <typename Real>
Real trace_norm(const HermitianMatrix<Real>& h) {
    if (h.size() == 0) return Real(0);
    return hermitian_eigenvalues<Real>(h).cwiseAbs().sum();
}

/// Magnitude of the sum of negative eigenvalues of the partial transpose,
/// equal to (||rho^T_k||_1 - 1)/2 for unit-trace rho.
template <typename Real>
Real negativity(const DensityMatrix<Real>& rho, Partition part = {}, double tol = kDefaultTolerance) {
    detail::require_physical(rho, tol, "negativity");
    const RealVector<Real> ev = hermitian_eigenvalues<Real>(partial_transpose(rho, part));
    Real sum{0};
    for (Eigen::Index i = 0; i < ev.size(); ++i)
        if (ev[i] < 0) sum -= ev[i];
    return sum;
}

/// PPT test. Exact separability for two qubits; a necessary condition only for N > 2.
template <typename Real>
bool is_separable_ppt(const DensityMatrix<Real>& rho, Partition part = {}, double tol = kDefaultTolerance) {
    return negativity(rho, part, tol) <= tol;
}

/// N(rho_W) = (1/N) sqrt(sum |beta_i|^2).
template <typename Real>
Real negativity_w_basis(const WCoherenceVector<Real>& v) {
    if (v.qubits < 1) throw PreconditionError("negativity_w_basis needs a positive qubit count");
    Real s{0};
    for (const auto& b : v.beta) s += std::norm(b);
    return std::sqrt(s) / Real(v.qubits);
}

}  // namespace entangle

#endif  // ENTANGLE_MEASURES_HPP
