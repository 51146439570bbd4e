#include "entangle/classifier.hpp"

#include <algorithm>
#include <cmath>

#include "entangle/roots.hpp"

namespace entangle {

namespace {

// A region is flat zero when the curve sits this far below epsilon inside it;
// tangential zeros only reach that depth on a vanishing fraction of the region.
constexpr double kFlatFraction = 1e-6;

struct Region {
    double start;
    double end;
    bool at_horizon;
};

double interpolate(std::span<const double> times, std::span<const double> values, double t) {
    if (t <= times.front()) return values.front();
    if (t >= times.back()) return values.back();
    const auto hi = std::upper_bound(times.begin(), times.end(), t);
    const auto i = static_cast<std::size_t>(hi - times.begin());
    const double w = (t - times[i - 1]) / (times[i] - times[i - 1]);
    return (1 - w) * values[i - 1] + w * values[i];
}

void validate_curve(const SampledCurve& curve, const ClassifierConfig& cfg) {
    const auto& t = curve.times;
    if (t.size() < 3 || curve.values.size() != t.size())
        throw PreconditionError("zero_set needs at least three samples with matching values");
    if (t.front() != 0.0) throw PreconditionError("zero_set samples must start at t = 0");
    for (std::size_t i = 1; i < t.size(); ++i)
        if (!(t[i] > t[i - 1])) throw PreconditionError("zero_set sample times must strictly increase");
    if (std::abs(t.back() - cfg.t_max) > 1e-9 * std::max(1.0, cfg.t_max))
        throw PreconditionError("zero_set samples must cover [0, t_max]");
    if (!(curve.values.front() > cfg.epsilon))
        throw PreconditionError("classification requires an entangled initial state, C(0) > epsilon");
}

SampledCurve sample(const std::function<double(double)>& f, const ClassifierConfig& cfg) {
    SampledCurve curve;
    curve.times = uniform_grid(cfg.t_max, cfg.samples);
    curve.values.reserve(curve.times.size());
    for (double t : curve.times) curve.values.push_back(f(t));
    curve.evaluate = f;
    return curve;
}

}  // namespace

char category_label(Category c) {
    switch (c) {
        case Category::A: return 'A';
        case Category::B: return 'B';
        case Category::E: return 'E';
        case Category::O: return 'O';
    }
    return '?';
}

void ClassifierConfig::validate() const {
    if (!(epsilon > 0)) throw PreconditionError("classifier epsilon must be positive");
    if (!(t_max > 0) || !std::isfinite(t_max)) throw PreconditionError("classifier horizon must be positive");
    if (samples < 3) throw PreconditionError("classifier needs at least three samples");
    if (min_width != 0 && !(min_width > grid_spacing()))
        throw PreconditionError("min_width must exceed the grid spacing");
    if (refine_iters < 1) throw PreconditionError("refine_iters must be positive");
}

ZeroSet zero_set(const SampledCurve& curve, const ClassifierConfig& cfg) {
    cfg.validate();
    validate_curve(curve, cfg);

    const auto& times = curve.times;
    const auto& values = curve.values;
    const std::size_t n = times.size();
    const double eps = cfg.epsilon;
    const std::function<double(double)> eval =
        curve.evaluate ? curve.evaluate : [&](double t) { return interpolate(times, values, t); };
    const auto is_zero = [&](double t) { return eval(t) <= eps; };

    std::vector<Region> regions;

    for (std::size_t i = 1; i < n; ++i) {
        if (values[i] > eps) continue;
        std::size_t j = i;
        while (j + 1 < n && values[j + 1] <= eps) ++j;
        Region r{bisect_boundary(is_zero, times[i], times[i - 1], cfg.refine_iters).first, times.back(), j == n - 1};
        if (!r.at_horizon) r.end = bisect_boundary(is_zero, times[j], times[j + 1], cfg.refine_iters).first;
        regions.push_back(r);
        i = j;
    }

    // Dips that reach zero strictly between samples; only visible with the exact curve.
    if (curve.evaluate) {
        for (std::size_t i = 1; i + 1 < n; ++i) {
            if (values[i - 1] <= eps || values[i] <= eps || values[i + 1] <= eps) continue;
            if (values[i] > values[i - 1] || values[i] > values[i + 1]) continue;
            const double t_min = golden_section_min(eval, times[i - 1], times[i + 1]);
            if (!is_zero(t_min)) continue;
            regions.push_back({bisect_boundary(is_zero, t_min, times[i - 1], cfg.refine_iters).first,
                               bisect_boundary(is_zero, t_min, times[i + 1], cfg.refine_iters).first, false});
        }
    }

    std::sort(regions.begin(), regions.end(), [](const Region& a, const Region& b) { return a.start < b.start; });
    std::vector<Region> merged;
    for (const auto& r : regions) {
        if (!merged.empty() && r.start <= merged.back().end) {
            merged.back().end = std::max(merged.back().end, r.end);
            merged.back().at_horizon = merged.back().at_horizon || r.at_horizon;
        } else {
            merged.push_back(r);
        }
    }

    ZeroSet zs;
    zs.horizon = times.back();
    const double min_width = cfg.effective_min_width();
    for (const auto& r : merged) {
        const double width = r.end - r.start;
        bool interval = r.at_horizon || width >= min_width;
        if (!interval && width > 0) {
            interval = true;
            for (double q : {0.25, 0.5, 0.75})
                if (eval(r.start + q * width) > kFlatFraction * eps) interval = false;
        }
        if (interval)
            zs.intervals.push_back({r.start, r.end});
        else
            zs.points.push_back(width > 0 ? golden_section_min(eval, r.start, r.end) : r.start);
    }

    zs.touches_horizon = !merged.empty() && merged.back().at_horizon;
    zs.tail_zero = zs.touches_horizon && curve.tail_is_zero && curve.tail_is_zero(zs.horizon, eps);
    return zs;
}

Category classify(const ZeroSet& zeros, const ClassifierConfig&) {
    const std::size_t finite = zeros.intervals.size() - (zeros.touches_horizon ? 1 : 0);
    if (finite > 0) return Category::O;
    if (zeros.touches_horizon) {
        if (!zeros.tail_zero)
            throw HorizonLimitedError("entanglement is zero from t = " + std::to_string(zeros.intervals.back().start) +
                                      " up to the horizon t = " + std::to_string(zeros.horizon) +
                                      " but permanence beyond it is not certified");
        return Category::E;
    }
    return zeros.points.empty() ? Category::A : Category::B;
}

Classification classify_curve(const SampledCurve& curve, const ClassifierConfig& cfg) {
    ZeroSet zs = zero_set(curve, cfg);
    const Category c = classify(zs, cfg);
    std::optional<double> death;
    if (c == Category::E) death = zs.intervals.back().start;
    return {c, std::move(zs), death};
}

SampledCurve concurrence_model_curve(const ModelParams& params, const DephasingFunction& f,
                                     const ClassifierConfig& cfg) {
    cfg.validate();
    auto curve = sample([params, f](double t) { return concurrence_at(params, f, t); }, cfg);
    trajectory(params, f, curve.times);
    if (f.envelope(0)) {
        curve.tail_is_zero = [params, f](double horizon, double eps) {
            return params.r * *f.envelope(horizon) - xi(params, horizon) <= eps;
        };
    }
    return curve;
}

SampledCurve ghz_negativity_curve(const DephasingFunction& f, int qubits, const ClassifierConfig& cfg,
                                  GhzExponent exponent) {
    cfg.validate();
    auto curve = sample([f, qubits, exponent](double t) { return negativity_ghz_closed(f(t), qubits, exponent); }, cfg);
    if (f.envelope(0)) {
        curve.tail_is_zero = [f, qubits, exponent](double horizon, double eps) {
            return negativity_ghz_closed(*f.envelope(horizon), qubits, exponent) <= eps;
        };
    }
    return curve;
}

SampledCurve w_negativity_curve(const DephasingFunction& f, int qubits, const ClassifierConfig& cfg) {
    cfg.validate();
    auto curve = sample([f, qubits](double t) { return negativity_w_closed(f(t), qubits); }, cfg);
    if (f.envelope(0)) {
        curve.tail_is_zero = [f, qubits](double horizon, double eps) {
            return negativity_w_closed(*f.envelope(horizon), qubits) <= eps;
        };
    }
    return curve;
}

Classification classify_model(const ModelParams& params, const DephasingFunction& f, const ClassifierConfig& cfg) {
    return classify_curve(concurrence_model_curve(params, f, cfg), cfg);
}

}  // namespace entangle
