#ifndef ENTANGLE_DYNAMICS_HPP
#define ENTANGLE_DYNAMICS_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "entangle/dephasing.hpp"
#include "entangle/state_space.hpp"

namespace entangle {

/// Bloch-Wangsness-Redfield rates of one qubit.
struct RelaxationRates {
    double gamma1{0};     ///< longitudinal
    double gamma_phi{0};  ///< pure dephasing
    double gamma2{0};     ///< transverse, gamma1/2 + gamma_phi
};

/// gamma1 = g^2 sin^2(theta) S(B)/2, gamma_phi = g^2 cos^2(theta) S(0)/2.
RelaxationRates bwr_rates(double coupling, double theta, double spectrum_zero, double spectrum_field);

/// Classical noise acting on one qubit: coupling g, angle theta between the
/// noise axis and the energy axis, and the noise power spectrum sampled at
/// zero frequency and at the qubit splitting.
struct QubitNoise {
    double coupling{1};
    double theta{0};
    double spectrum_zero{0.05};
    double spectrum_field{0.05};

    RelaxationRates rates() const { return bwr_rates(coupling, theta, spectrum_zero, spectrum_field); }
};

/// Two-qubit model: Werner purity r of the initial state and the total
/// longitudinal rate gamma1_ab = gamma1^A + gamma1^B.
struct ModelParams {
    double r{1};
    double gamma1_ab{0};

    /// Rates from per-qubit noise; the matching Markovian dephasing is markovian_dephasing(a, b).
    static ModelParams from_noise(double r, const QubitNoise& a, const QubitNoise& b);

    void validate() const;
};

/// zeta^{AB} = zeta^A zeta^B = exp(-(gamma2^A + gamma2^B) t).
DephasingFunction markovian_dephasing(const QubitNoise& a, const QubitNoise& b);

struct Trajectory {
    std::vector<double> times;
    std::vector<D3Pointd> points;
    ModelParams params;
};

/// Uniform grid of `samples` points on [0, t_max].
std::vector<double> uniform_grid(double t_max, std::size_t samples);

/// (1 - r exp(-gamma1_ab t)) / 2.
double xi(const ModelParams& params, double t);

/// Slice point (r zeta(t), 0, -r exp(-gamma1_ab t)).
D3Pointd trajectory_point(const ModelParams& params, const DephasingFunction& f, double t);

/// Throws PreconditionError for unsorted/negative times or invalid params, and
/// NumericalError if any point leaves the physical slice.
Trajectory trajectory(const ModelParams& params, const DephasingFunction& f, std::span<const double> times);

/// max{0, r|zeta(t)| - xi(t)}: the slice concurrence along the trajectory.
double concurrence_at(const ModelParams& params, const DephasingFunction& f, double t);

std::vector<double> concurrence_curve(const ModelParams& params, const DephasingFunction& f,
                                      std::span<const double> times);

}  // namespace entangle

#endif  // ENTANGLE_DYNAMICS_HPP
