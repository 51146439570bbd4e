#ifndef ENTANGLE_MULTIQUBIT_HPP
#define ENTANGLE_MULTIQUBIT_HPP

#include <array>
#include <bit>
#include <cmath>

#include "entangle/measures.hpp"

namespace entangle {

/// Exponent used for the GHZ closed form |zeta|^p / 2.
enum class GhzExponent {
    QubitCount,    ///< p = N (agrees with Kraus evolution + partial transpose)
    Cubic,        ///< p = 3 for every N; coincides with QubitCount only at N = 3
};

/// Functional form of the cat-state Bloch-ball negativity.
enum class GhzBlochForm {
    Modulus,        ///< sqrt(n_X^2 + n_Y^2) / 2
    Squared,        ///< (n_X^2 + n_Y^2) / 2
};

template <typename Real>
using KrausOperator = Eigen::Matrix<Complex<Real>, 2, 2>;

/// Single-qubit dephasing pair E0 = diag(1, zeta), E1 = diag(0, sqrt(1 - zeta^2)).
template <typename Real>
std::array<KrausOperator<Real>, 2> dephasing_kraus(Real zeta) {
    if (!(std::abs(zeta) <= Real(1))) throw PreconditionError("dephasing Kraus operators need |zeta| <= 1");
    KrausOperator<Real> e0 = KrausOperator<Real>::Zero();
    KrausOperator<Real> e1 = KrausOperator<Real>::Zero();
    e0(0, 0) = Real(1);
    e0(1, 1) = zeta;
    e1(1, 1) = std::sqrt(std::max(Real(0), 1 - zeta * zeta));
    return {e0, e1};
}

template <typename Real>
DensityMatrix<Real> kron(const DensityMatrix<Real>& a, const DensityMatrix<Real>& b) {
    DensityMatrix<Real> out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

/// Independent dephasing of every qubit, as the full operator sum over all 2^N
/// Kraus strings E_{i1} (x) ... (x) E_{iN}.
template <typename Real>
DensityMatrix<Real> kraus_dephase(const DensityMatrix<Real>& rho0, Real zeta, int qubits) {
    if (qubit_count(rho0.rows()) != qubits || rho0.cols() != rho0.rows())
        throw PreconditionError("kraus_dephase: matrix dimension does not match qubit count");
    const auto ops = dephasing_kraus(zeta);

    DensityMatrix<Real> out = DensityMatrix<Real>::Zero(rho0.rows(), rho0.cols());
    for (unsigned string = 0; string < (1u << qubits); ++string) {
        DensityMatrix<Real> k = DensityMatrix<Real>::Ones(1, 1);
        for (int q = 0; q < qubits; ++q) {
            const unsigned which = (string >> (qubits - 1 - q)) & 1u;
            k = kron<Real>(k, ops[which]);
        }
        out.noalias() += k * rho0 * k.adjoint();
    }
    return out;
}

/// Closed form of kraus_dephase: element (a, b) picks up zeta^{popcount(a xor b)}.
template <typename Real>
DensityMatrix<Real> dephase_elementwise(const DensityMatrix<Real>& rho0, Real zeta) {
    DensityMatrix<Real> out = rho0;
    for (Eigen::Index i = 0; i < out.rows(); ++i)
        for (Eigen::Index j = 0; j < out.cols(); ++j)
            out(i, j) *= std::pow(zeta, std::popcount(static_cast<unsigned long>(i ^ j)));
    return out;
}

template <typename Real>
DensityMatrix<Real> ghz_state(int qubits) {
    if (qubits < 2) throw PreconditionError("GHZ state needs N >= 2");
    const Eigen::Index dim = Eigen::Index{1} << qubits;
    DensityMatrix<Real> rho = DensityMatrix<Real>::Zero(dim, dim);
    rho(0, 0) = rho(0, dim - 1) = rho(dim - 1, 0) = rho(dim - 1, dim - 1) = Real(0.5);
    return rho;
}

template <typename Real>
DensityMatrix<Real> w_state(int qubits) {
    if (qubits < 2) throw PreconditionError("W state needs N >= 2");
    const Eigen::Index dim = Eigen::Index{1} << qubits;
    DensityMatrix<Real> rho = DensityMatrix<Real>::Zero(dim, dim);
    for (int a = 0; a < qubits; ++a)
        for (int b = 0; b < qubits; ++b) rho(Eigen::Index{1} << a, Eigen::Index{1} << b) = Real(1) / Real(qubits);
    return rho;
}

template <typename Real>
Real negativity_ghz_closed(Real zeta, int qubits, GhzExponent exponent = GhzExponent::QubitCount) {
    if (qubits < 2) throw PreconditionError("GHZ negativity needs N >= 2");
    if (!(std::abs(zeta) <= Real(1))) throw PreconditionError("GHZ negativity needs |zeta| <= 1");
    const int p = exponent == GhzExponent::QubitCount ? qubits : 3;
    return std::pow(std::abs(zeta), p) / 2;
}

template <typename Real>
Real negativity_w_closed(Real zeta, int qubits) {
    if (qubits < 2) throw PreconditionError("W negativity needs N >= 2");
    if (!(std::abs(zeta) <= Real(1))) throw PreconditionError("W negativity needs |zeta| <= 1");
    return std::sqrt(Real(qubits - 1)) / Real(qubits) * zeta * zeta;
}

/// Effective Bloch vector on span{|0...0>, |1...1>}, with
/// sigma_X = |0..0><1..1| + |1..1><0..0|.
template <typename Real>
struct GhzBloch {
    Real n_x{0};
    Real n_y{0};
    Real n_z{0};
};

template <typename Real>
GhzBloch<Real> ghz_bloch(const DensityMatrix<Real>& rho, double tol = kDefaultTolerance) {
    qubit_count(rho.rows());
    const Eigen::Index last = rho.rows() - 1;
    for (Eigen::Index i = 0; i < rho.rows(); ++i) {
        for (Eigen::Index j = 0; j < rho.cols(); ++j) {
            const bool in_block = (i == 0 || i == last) && (j == 0 || j == last);
            if (!in_block && std::abs(rho(i, j)) > tol)
                throw PreconditionError("ghz_bloch: state has support outside the cat-state subspace");
        }
    }
    const Complex<Real> c = rho(0, last);
    return {2 * c.real(), -2 * c.imag(), (rho(0, 0) - rho(last, last)).real()};
}

template <typename Real>
Real ghz_bloch_negativity(const GhzBloch<Real>& b, GhzBlochForm form = GhzBlochForm::Modulus) {
    const Real s = b.n_x * b.n_x + b.n_y * b.n_y;
    return form == GhzBlochForm::Modulus ? std::sqrt(s) / 2 : s / 2;
}

/// beta_j = N rho(e_j, e_k) for j != k, where e_j is the single excitation on qubit j
/// and k is the transposed qubit.
template <typename Real>
WCoherenceVector<Real> w_coherences(const DensityMatrix<Real>& rho, Partition part = {}) {
    const int n = qubit_count(rho.rows());
    if (part.transposed_qubit < 0 || part.transposed_qubit >= n)
        throw PreconditionError("w_coherences: qubit index out of range");
    auto excitation = [n](int q) { return Eigen::Index{1} << (n - 1 - q); };
    WCoherenceVector<Real> v{n, {}};
    for (int j = 0; j < n; ++j) {
        if (j == part.transposed_qubit) continue;
        v.beta.push_back(Real(n) * rho(excitation(j), excitation(part.transposed_qubit)));
    }
    return v;
}

}  // namespace entangle

#endif  // ENTANGLE_MULTIQUBIT_HPP
