#include "entangle/dynamics.hpp"

#include <cmath>
#include <string>

namespace entangle {

RelaxationRates bwr_rates(double coupling, double theta, double spectrum_zero, double spectrum_field) {
    if (!(coupling >= 0) || !(spectrum_zero >= 0) || !(spectrum_field >= 0))
        throw PreconditionError("BWR rates need non-negative coupling and noise spectra");
    const double g2 = coupling * coupling;
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    RelaxationRates out;
    out.gamma1 = g2 * s * s * spectrum_field / 2;
    out.gamma_phi = g2 * c * c * spectrum_zero / 2;
    out.gamma2 = out.gamma1 / 2 + out.gamma_phi;
    return out;
}

ModelParams ModelParams::from_noise(double r, const QubitNoise& a, const QubitNoise& b) {
    ModelParams p{r, a.rates().gamma1 + b.rates().gamma1};
    p.validate();
    return p;
}

void ModelParams::validate() const {
    if (!(r >= 0 && r <= 1)) throw PreconditionError("Werner purity r must lie in [0, 1]");
    if (!(gamma1_ab >= 0) || !std::isfinite(gamma1_ab))
        throw PreconditionError("longitudinal rate gamma1 must be finite and >= 0");
}

DephasingFunction markovian_dephasing(const QubitNoise& a, const QubitNoise& b) {
    return DephasingFunction::markovian(a.rates().gamma2 + b.rates().gamma2);
}

std::vector<double> uniform_grid(double t_max, std::size_t samples) {
    if (samples < 2) throw PreconditionError("time grid needs at least two samples");
    if (!(t_max > 0) || !std::isfinite(t_max)) throw PreconditionError("time horizon must be positive");
    std::vector<double> grid(samples);
    const double step = t_max / static_cast<double>(samples - 1);
    for (std::size_t i = 0; i < samples; ++i) grid[i] = step * static_cast<double>(i);
    grid.back() = t_max;
    return grid;
}

double xi(const ModelParams& params, double t) { return (1 - params.r * std::exp(-params.gamma1_ab * t)) / 2; }

D3Pointd trajectory_point(const ModelParams& params, const DephasingFunction& f, double t) {
    return {params.r * f(t), 0.0, -params.r * std::exp(-params.gamma1_ab * t)};
}

Trajectory trajectory(const ModelParams& params, const DephasingFunction& f, std::span<const double> times) {
    params.validate();
    Trajectory out{{times.begin(), times.end()}, {}, params};
    out.points.reserve(times.size());
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (!(times[i] >= 0)) throw PreconditionError("trajectory times must be non-negative");
        if (i > 0 && times[i] < times[i - 1]) throw PreconditionError("trajectory times must be sorted");
        const D3Pointd p = trajectory_point(params, f, times[i]);
        if (!d3_membership(p))
            throw NumericalError("trajectory leaves the physical state space at t = " + std::to_string(times[i]) +
                                 " (dephasing too slow for the relaxation rate)");
        out.points.push_back(p);
    }
    return out;
}

double concurrence_at(const ModelParams& params, const DephasingFunction& f, double t) {
    return std::max(0.0, params.r * std::abs(f(t)) - xi(params, t));
}

std::vector<double> concurrence_curve(const ModelParams& params, const DephasingFunction& f,
                                      std::span<const double> times) {
    trajectory(params, f, times);
    std::vector<double> c;
    c.reserve(times.size());
    for (double t : times) c.push_back(concurrence_at(params, f, t));
    return c;
}

}  // namespace entangle
