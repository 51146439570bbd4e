#ifndef ENTANGLE_PAULI_HPP
#define ENTANGLE_PAULI_HPP

#include <array>
#include <string_view>

#include "entangle/types.hpp"

namespace entangle {

enum class Pauli : int { I = 0, X = 1, Y = 2, Z = 3 };

inline constexpr std::array<Pauli, 4> kPaulis{Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};

constexpr char pauli_symbol(Pauli p) { return "IXYZ"[static_cast<int>(p)]; }

template <typename Real>
Eigen::Matrix<Complex<Real>, 2, 2> pauli_matrix(Pauli p) {
    using C = Complex<Real>;
    Eigen::Matrix<C, 2, 2> m;
    switch (p) {
        case Pauli::I: m << C(1), C(0), C(0), C(1); break;
        case Pauli::X: m << C(0), C(1), C(1), C(0); break;
        case Pauli::Y: m << C(0), C(0, -1), C(0, 1), C(0); break;
        case Pauli::Z: m << C(1), C(0), C(0), C(-1); break;
    }
    return m;
}

/// sigma_a (x) sigma_b; the first factor acts on qubit 0 (most significant bit).
template <typename Real>
Eigen::Matrix<Complex<Real>, 4, 4> pauli_product(Pauli a, Pauli b) {
    const auto ma = pauli_matrix<Real>(a);
    const auto mb = pauli_matrix<Real>(b);
    Eigen::Matrix<Complex<Real>, 4, 4> out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out.template block<2, 2>(2 * i, 2 * j) = ma(i, j) * mb;
    return out;
}

// Polarization-vector component order: lexicographic over (a, b) in
// {I,X,Y,Z}^2 with (I,I) dropped.
//
//   index:  0  1  2  3  4  5  6  7  8  9 10 11 12 13 14
//   pair:  IX IY IZ XI XX XY XZ YI YX YY YZ ZI ZX ZY ZZ
constexpr int pv_index(Pauli a, Pauli b) { return 4 * static_cast<int>(a) + static_cast<int>(b) - 1; }

constexpr std::array<Pauli, 2> pv_pair(int index) {
    return {static_cast<Pauli>((index + 1) / 4), static_cast<Pauli>((index + 1) % 4)};
}

inline constexpr std::array<std::string_view, 15> kPvLabels{
    "IX", "IY", "IZ", "XI", "XX", "XY", "XZ", "YI", "YX", "YY", "YZ", "ZI", "ZX", "ZY", "ZZ"};

}  // namespace entangle

#endif  // ENTANGLE_PAULI_HPP
