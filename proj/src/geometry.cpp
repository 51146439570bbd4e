#include "entangle/geometry.hpp"

#include <cmath>
#include <numbers>

#include "entangle/state_space.hpp"

namespace entangle {

namespace {

template <class F>
BoundaryCurve parametric(std::string name, bool physical, std::size_t samples, double lo, double hi, F&& at) {
    BoundaryCurve c{std::move(name), physical, {}, {}};
    for (std::size_t i = 0; i < samples; ++i) {
        const double s = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(samples - 1);
        const auto [x, z] = at(s);
        c.n_xx.push_back(x);
        c.n_zz.push_back(z);
    }
    return c;
}

}  // namespace

std::vector<BoundaryCurve> d3_boundary_curves(std::size_t samples) {
    if (samples < 2) throw PreconditionError("boundary curves need at least two samples");
    using std::numbers::pi;
    std::vector<BoundaryCurve> out;
    out.push_back(parametric("ellipse", false, samples, 0.0, 2 * pi, [](double phi) {
        return std::pair{std::sqrt(1.5) * std::cos(phi), std::sqrt(3.0) * std::sin(phi)};
    }));
    out.push_back(parametric("parabola", false, samples, -1.0, 1.0,
                             [](double x) { return std::pair{x, 1 - 2 * x * x}; }));
    out.push_back(parametric("base", true, samples, -1.0, 1.0, [](double x) { return std::pair{x, -1.0}; }));
    out.push_back(parametric("side_left", true, samples, -1.0, 0.0,
                             [](double x) { return std::pair{x, 1 + 2 * x}; }));
    out.push_back(parametric("side_right", true, samples, 0.0, 1.0,
                             [](double x) { return std::pair{x, 1 - 2 * x}; }));
    out.push_back(parametric("separability_left", true, samples, -1.0, 0.0,
                             [](double z) { return std::pair{-(1 + z) / 2, z}; }));
    out.push_back(parametric("separability_right", true, samples, -1.0, 0.0,
                             [](double z) { return std::pair{(1 + z) / 2, z}; }));
    out.push_back({"fully_mixed", true, {0.0}, {0.0}});

    for (const auto& c : out) {
        if (!c.in_state_space) continue;
        for (std::size_t i = 0; i < c.n_xx.size(); ++i)
            if (!d3_membership(D3Pointd{c.n_xx[i], 0.0, c.n_zz[i]}))
                throw NumericalError("boundary curve '" + c.name + "' left the physical slice");
    }
    return out;
}

}  // namespace entangle
