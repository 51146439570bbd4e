#ifndef ENTANGLE_GHZW_HPP
#define ENTANGLE_GHZW_HPP

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "entangle/dephasing.hpp"
#include "entangle/multiqubit.hpp"

namespace entangle {

/// Closed-form negativity next to the Kraus-evolution + partial-transpose value.
struct NegativitySample {
    std::string state;  ///< "GHZ" or "W"
    int qubits{0};
    double t{0};
    double zeta{0};
    double closed{0};
    double oracle{0};

    double delta() const { return std::abs(closed - oracle); }
};

/// Negativity of dephased GHZ and W states across the (1)(N-1) cut on qubit 0.
/// Ordered by state, then N, then time.
std::vector<NegativitySample> ghzw_series(const DephasingFunction& f, std::span<const int> qubit_counts,
                                          std::span<const double> times,
                                          GhzExponent exponent = GhzExponent::QubitCount);

}  // namespace entangle

#endif  // ENTANGLE_GHZW_HPP
