#ifndef ENTANGLE_SWEEP_HPP
#define ENTANGLE_SWEEP_HPP

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "entangle/classifier.hpp"

namespace entangle {

/// One-parameter family of noise models indexed by the noise angle theta.
/// Both qubits share `noise` (with theta overridden per cell).
///   Markovian:     zeta^{AB} = exp(-(gamma2^A + gamma2^B) t) from the BWR rates.
///   DampedCosine:  zeta^{AB} = exp(-gamma t) cos(omega t), fixed across theta.
/// In both cases gamma1_ab = gamma1^A + gamma1^B.
struct NoiseFamily {
    enum class Kind { Markovian, DampedCosine };

    Kind kind{Kind::Markovian};
    QubitNoise noise{};
    double gamma{0.02};
    double omega{0.3};

    std::string name() const;
    std::pair<ModelParams, DephasingFunction> member(double r, double theta) const;
};

NoiseFamily parse_family(const std::string& name);

struct SweepCell {
    std::size_t r_index{0};
    std::size_t theta_index{0};
    double r{0};
    double theta{0};
    std::optional<Category> category;
    std::optional<double> death_time;
    std::string error;  ///< non-empty when the cell failed
    bool horizon_limited{false};
};

struct SweepResult {
    std::string family;
    std::vector<SweepCell> cells;  ///< row-major over (r, theta)
    /// Index pairs of grid-adjacent cells whose labels differ.
    std::vector<std::pair<std::size_t, std::size_t>> transitions;
};

/// Classifies every (r, theta) cell. Cells run on `threads` workers (0 picks the
/// hardware concurrency); output order is the grid order regardless.
SweepResult sweep(std::span<const double> r_grid, std::span<const double> theta_grid, const NoiseFamily& family,
                  const ClassifierConfig& cfg, unsigned threads = 0);

}  // namespace entangle

#endif  // ENTANGLE_SWEEP_HPP
