#include "entangle/ghzw.hpp"

namespace entangle {

std::vector<NegativitySample> ghzw_series(const DephasingFunction& f, std::span<const int> qubit_counts,
                                          std::span<const double> times, GhzExponent exponent) {
    std::vector<NegativitySample> out;
    for (const char* state : {"GHZ", "W"}) {
        const bool ghz = state[0] == 'G';
        for (int n : qubit_counts) {
            const DensityMatrixd rho0 = ghz ? ghz_state<double>(n) : w_state<double>(n);
            for (double t : times) {
                const double z = f(t);
                const double closed = ghz ? negativity_ghz_closed(z, n, exponent) : negativity_w_closed(z, n);
                const double oracle = negativity(kraus_dephase(rho0, z, n), Partition{0});
                out.push_back({state, n, t, z, closed, oracle});
            }
        }
    }
    return out;
}

}  // namespace entangle
