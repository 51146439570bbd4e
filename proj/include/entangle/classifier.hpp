#ifndef ENTANGLE_CLASSIFIER_HPP
#define ENTANGLE_CLASSIFIER_HPP

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "entangle/dynamics.hpp"
#include "entangle/multiqubit.hpp"

namespace entangle {

/// Topology of the zero set of an entanglement curve that starts entangled
/// and ends separable:
///   A  never reaches zero,
///   B  zero only at isolated instants,
///   E  zero from a finite death time onward,
///   O  zero on disjoint intervals of finite width.
enum class Category { A, B, E, O };

char category_label(Category c);

struct ClassifierConfig {
    double epsilon{1e-9};     ///< C <= epsilon counts as zero
    double t_max{200};        ///< analysis horizon
    std::size_t samples{2000};
    double min_width{0};      ///< 0 selects 10x the grid spacing
    int refine_iters{80};     ///< bisection steps per crossing

    double grid_spacing() const { return t_max / static_cast<double>(samples - 1); }
    double effective_min_width() const { return min_width > 0 ? min_width : 10 * grid_spacing(); }
    void validate() const;
};

/// Entanglement measure sampled on a grid, optionally with the exact function
/// it was sampled from and a certificate that it stays <= epsilon past the
/// horizon.
struct SampledCurve {
    std::vector<double> times;
    std::vector<double> values;
    std::function<double(double)> evaluate;
    std::function<bool(double horizon, double epsilon)> tail_is_zero;
};

struct Interval {
    double start{0};
    double end{0};
};

struct ZeroSet {
    std::vector<Interval> intervals;  ///< sorted, disjoint
    std::vector<double> points;       ///< isolated zeros, sorted
    double horizon{0};
    bool touches_horizon{false};      ///< last interval ends at the horizon
    bool tail_zero{false};            ///< ... and permanence beyond it is certified
};

/// Grid scan for C <= epsilon, crossings refined by bisection, local minima
/// between samples refined by golden-section search. Regions narrower than
/// min_width that are not flat zero collapse to isolated points.
ZeroSet zero_set(const SampledCurve& curve, const ClassifierConfig& cfg);

/// Throws HorizonLimitedError if the label hinges on unverified tail behaviour.
Category classify(const ZeroSet& zeros, const ClassifierConfig& cfg);

struct Classification {
    Category category;
    ZeroSet zeros;
    std::optional<double> death_time;  ///< start of the permanent zero interval (category E)
};

Classification classify_curve(const SampledCurve& curve, const ClassifierConfig& cfg);

/// Two-qubit concurrence curve over the config's grid, with a tail
/// certificate whenever zeta has a monotone envelope.
SampledCurve concurrence_model_curve(const ModelParams& params, const DephasingFunction& f,
                                     const ClassifierConfig& cfg);

SampledCurve ghz_negativity_curve(const DephasingFunction& f, int qubits, const ClassifierConfig& cfg,
                                  GhzExponent exponent = GhzExponent::QubitCount);
SampledCurve w_negativity_curve(const DephasingFunction& f, int qubits, const ClassifierConfig& cfg);

Classification classify_model(const ModelParams& params, const DephasingFunction& f, const ClassifierConfig& cfg);

}  // namespace entangle

#endif  // ENTANGLE_CLASSIFIER_HPP
