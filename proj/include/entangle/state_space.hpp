#ifndef ENTANGLE_STATE_SPACE_HPP
#define ENTANGLE_STATE_SPACE_HPP

#include <array>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "entangle/pauli.hpp"
#include "entangle/types.hpp"

namespace entangle {

/// Two-qubit polarization vector n_ab = Tr(rho sigma_a (x) sigma_b), ordered per pv_index().
template <typename Real>
using PolarizationVector = Eigen::Matrix<Real, 15, 1>;

using PolarizationVectord = PolarizationVector<double>;

/// Coordinates of the three-parameter slice with n_XX = n_YY, n_XY = -n_YX and
/// n_ZZ the only other non-zero component.
template <typename Real>
struct D3Point {
    Real n_xx{0};
    Real n_xy{0};
    Real n_zz{0};

    Real radius() const { return std::hypot(n_xx, n_xy); }
};

using D3Pointd = D3Point<double>;

/// Coefficients of det(x I - rho) = sum_j (-1)^j a_j x^{4-j}; a_j is the j-th
/// elementary symmetric polynomial of the eigenvalues.
template <typename Real>
struct CharPolyCoeffs {
    std::array<Real, 5> a{};

    Real operator[](int j) const { return a[static_cast<std::size_t>(j)]; }
};

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& h, double tol = kDefaultTolerance) {
    if (h.rows() != h.cols()) return false;
    return (h - h.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

/// Ascending eigenvalues of a Hermitian matrix.
template <typename Real>
RealVector<Real> hermitian_eigenvalues(const HermitianMatrix<Real>& h) {
    Eigen::SelfAdjointEigenSolver<HermitianMatrix<Real>> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw NumericalError("Hermitian eigensolver did not converge");
    return solver.eigenvalues();
}

template <typename Real>
DensityMatrix<Real> pv_to_density(const PolarizationVector<Real>& pv) {
    DensityMatrix<Real> rho = DensityMatrix<Real>::Identity(4, 4);
    for (int k = 0; k < 15; ++k) {
        if (pv[k] == Real(0)) continue;
        const auto [a, b] = pv_pair(k);
        rho += pv[k] * pauli_product<Real>(a, b);
    }
    return rho / Real(4);
}

template <typename Real>
PolarizationVector<Real> density_to_pv(const DensityMatrix<Real>& rho) {
    if (rho.rows() != 4 || rho.cols() != 4)
        throw PreconditionError("polarization vectors need a 4x4 density matrix, got " + std::to_string(rho.rows()) +
                                "x" + std::to_string(rho.cols()));
    PolarizationVector<Real> pv;
    for (int k = 0; k < 15; ++k) {
        const auto [a, b] = pv_pair(k);
        pv[k] = (rho * pauli_product<Real>(a, b)).trace().real();
    }
    return pv;
}

/// Characteristic-polynomial coefficients from power traces via Newton's
/// identities; no eigendecomposition involved.
template <typename Real>
CharPolyCoeffs<Real> char_poly_coeffs(const DensityMatrix<Real>& rho, double tol = kDefaultTolerance) {
    if (rho.rows() != 4 || rho.cols() != 4) throw PreconditionError("char_poly_coeffs needs a 4x4 matrix");
    if (!is_hermitian(rho, tol)) throw PreconditionError("char_poly_coeffs needs a Hermitian matrix");

    std::array<Real, 5> p{};  // p[k] = Tr(rho^k)
    DensityMatrix<Real> power = rho;
    for (int k = 1; k <= 4; ++k) {
        p[k] = power.trace().real();
        power = power * rho;
    }
    CharPolyCoeffs<Real> c;
    c.a[0] = Real(1);
    for (int k = 1; k <= 4; ++k) {
        Real s{0};
        for (int i = 1; i <= k; ++i) s += ((i % 2 == 1) ? Real(1) : Real(-1)) * c.a[k - i] * p[i];
        c.a[k] = s / Real(k);
    }
    return c;
}

/// Spectral positivity plus unit trace. Non-Hermitian input is never physical.
template <typename Real>
bool is_physical(const DensityMatrix<Real>& rho, double tol = kDefaultTolerance) {
    if (!is_hermitian(rho, tol)) return false;
    if (std::abs(rho.trace().real() - Real(1)) > tol) return false;
    return hermitian_eigenvalues<Real>(rho).minCoeff() >= -tol;
}

/// Closed inequalities a_2 >= 0, a_3 >= 0, a_4 >= 0 restricted to the slice:
///   2R^2 + n_ZZ^2 <= 3,   -1 <= n_ZZ <= 1 - 2R^2,   2R + n_ZZ <= 1.
template <typename Real>
bool d3_membership(const D3Point<Real>& p, double tol = kDefaultTolerance) {
    const Real r = p.radius();
    const Real z = p.n_zz;
    return 2 * r * r + z * z <= 3 + tol && z <= 1 - 2 * r * r + tol && z >= -1 - tol && 2 * r + z <= 1 + tol;
}

template <typename Real>
PolarizationVector<Real> d3_embed(const D3Point<Real>& p) {
    PolarizationVector<Real> pv = PolarizationVector<Real>::Zero();
    pv[pv_index(Pauli::X, Pauli::X)] = p.n_xx;
    pv[pv_index(Pauli::Y, Pauli::Y)] = p.n_xx;
    pv[pv_index(Pauli::X, Pauli::Y)] = p.n_xy;
    pv[pv_index(Pauli::Y, Pauli::X)] = -p.n_xy;
    pv[pv_index(Pauli::Z, Pauli::Z)] = p.n_zz;
    return pv;
}

template <typename Real>
DensityMatrix<Real> d3_density(const D3Point<Real>& p) {
    return pv_to_density<Real>(d3_embed(p));
}

/// r |Psi><Psi| + (1 - r) I/4 with |Psi> = (|01> + |10>)/sqrt(2).
template <typename Real>
DensityMatrix<Real> werner_state(Real r) {
    return d3_density(D3Point<Real>{r, Real(0), -r});
}

}  // namespace entangle

#endif  // ENTANGLE_STATE_SPACE_HPP
