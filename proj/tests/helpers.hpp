#ifndef ENTANGLE_TESTS_HELPERS_HPP
#define ENTANGLE_TESTS_HELPERS_HPP

#include <random>

#include "entangle/entangle.hpp"

namespace entangle::testing {

using Rng = std::mt19937_64;
using Cd = std::complex<double>;

inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

inline DensityMatrixd ginibre(Rng& rng, Eigen::Index dim) {
    std::normal_distribution<double> n(0, 1);
    DensityMatrixd g(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i)
        for (Eigen::Index j = 0; j < dim; ++j) g(i, j) = Cd(n(rng), n(rng));
    return g;
}

/// Random full-rank density matrix (Hilbert-Schmidt measure).
inline DensityMatrixd random_density(Rng& rng, int qubits) {
    const DensityMatrixd g = ginibre(rng, Eigen::Index{1} << qubits);
    DensityMatrixd rho = g * g.adjoint();
    return rho / rho.trace().real();
}

inline DensityMatrixd random_pure(Rng& rng, int qubits) {
    Eigen::VectorXcd v = ginibre(rng, Eigen::Index{1} << qubits).col(0);
    v.normalize();
    return v * v.adjoint();
}

/// Hermitian, unit trace, frequently not positive.
inline DensityMatrixd random_unit_trace_hermitian(Rng& rng, Eigen::Index dim, double scale) {
    DensityMatrixd g = ginibre(rng, dim) * scale;
    DensityMatrixd h = (g + g.adjoint()) / 2.0;
    const double shift = (h.trace().real() - 1.0) / static_cast<double>(dim);
    h -= shift * DensityMatrixd::Identity(dim, dim);
    return h;
}

inline DensityMatrixd random_product_state(Rng& rng, int qubits) {
    DensityMatrixd rho = DensityMatrixd::Ones(1, 1);
    for (int q = 0; q < qubits; ++q) rho = kron<double>(rho, random_density(rng, 1));
    return rho;
}

inline PolarizationVectord random_pv(Rng& rng) {
    PolarizationVectord v;
    for (int i = 0; i < 15; ++i) v[i] = uniform(rng, -1, 1);
    return v;
}

/// Rejection sample from the physical slice.
inline D3Pointd random_d3_point(Rng& rng) {
    for (;;) {
        D3Pointd p{uniform(rng, -1, 1), uniform(rng, -1, 1), uniform(rng, -1, 1)};
        if (d3_membership(p)) return p;
    }
}

inline DensityMatrixd ket_projector(const Eigen::VectorXcd& v) { return v * v.adjoint(); }

/// (|01> + |10>)/sqrt(2)
inline DensityMatrixd bell_psi_plus() {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(4);
    v[1] = v[2] = 1 / std::sqrt(2.0);
    return ket_projector(v);
}

inline double max_abs_diff(const DensityMatrixd& a, const DensityMatrixd& b) { return (a - b).cwiseAbs().maxCoeff(); }

/// Partial transpose by explicit reshaping to a rank-2N tensor index; kept
/// independent of the bit-mask implementation.
inline DensityMatrixd pt_oracle(const DensityMatrixd& rho, int qubits, int k) {
    const Eigen::Index dim = rho.rows();
    DensityMatrixd out(dim, dim);
    std::vector<int> row_bits(qubits);
    std::vector<int> col_bits(qubits);
    for (Eigen::Index r = 0; r < dim; ++r) {
        for (Eigen::Index c = 0; c < dim; ++c) {
            for (int q = 0; q < qubits; ++q) {
                row_bits[q] = static_cast<int>((r >> (qubits - 1 - q)) & 1);
                col_bits[q] = static_cast<int>((c >> (qubits - 1 - q)) & 1);
            }
            std::swap(row_bits[k], col_bits[k]);
            Eigen::Index r2 = 0;
            Eigen::Index c2 = 0;
            for (int q = 0; q < qubits; ++q) {
                r2 = 2 * r2 + row_bits[q];
                c2 = 2 * c2 + col_bits[q];
            }
            out(r2, c2) = rho(r, c);
        }
    }
    return out;
}

}  // namespace entangle::testing

#endif  // ENTANGLE_TESTS_HELPERS_HPP
