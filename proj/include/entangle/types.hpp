#ifndef ENTANGLE_TYPES_HPP
#define ENTANGLE_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace entangle {

template <typename Real>
using Complex = std::complex<Real>;

/// Dense 2^N x 2^N density matrix. Qubit 0 is the most significant bit of the
/// row/column index, so |q0 q1 ... q_{N-1}> has index sum q_k 2^{N-1-k}.
template <typename Real>
using DensityMatrix = Eigen::Matrix<Complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Real>
using HermitianMatrix = DensityMatrix<Real>;

template <typename Real>
using RealVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

using DensityMatrixd = DensityMatrix<double>;
using RealVectord = RealVector<double>;

/// Default tolerance for Hermiticity, trace and positivity checks.
inline constexpr double kDefaultTolerance = 1e-10;

/// Input violates a documented precondition (bad dimension, out-of-range
/// parameter, unphysical state).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A computation produced a result that fails its own physicality checks.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Classification depends on behaviour beyond the analysed horizon.
class HorizonLimitedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Number of qubits for a 2^N dimensional matrix; throws if dim is not a power of two.
inline int qubit_count(Eigen::Index dim) {
    if (dim < 2 || (dim & (dim - 1)) != 0)
        throw PreconditionError("matrix dimension " + std::to_string(dim) + " is not 2^N with N >= 1");
    int n = 0;
    while ((Eigen::Index{1} << n) < dim) ++n;
    return n;
}

}  // namespace entangle

#endif  // ENTANGLE_TYPES_HPP
