// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <boost/math/tools/roots.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "entangle/entangle.hpp"
#include "entangle/sweep.hpp"
#include "helpers.hpp"

using namespace entangle;
using namespace entangle::testing;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

/// Boost bisection to a bracket narrower than `width`; returns the midpoint.
double boost_root(const std::function<double(double)>& f, double lo, double hi, double width) {
    auto tol = [width](double a, double b) { return std::abs(b - a) <= width; };
    const auto [a, b] = boost::math::tools::bisect(f, lo, hi, tol);
    return (a + b) / 2;
}

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

Outcome bell_measures() {
    const auto bell = bell_psi_plus();
    const double c = concurrence<double>(bell);
    const double n = negativity<double>(bell);
    const double err = std::max(std::abs(c - 1), std::abs(n - 0.5));
    return {err <= 1e-12, "max error " + fmt("%.2e", err)};
}

Outcome werner_threshold() {
    // C(r) is 0 on [0, 1/3] and positive above; bisect the sign change of C - tiny.
    const auto f = [](double r) { return concurrence(werner_state(r)) > 0 ? 1.0 : -1.0; };
    const double root = boost_root(f, 0.0, 1.0, 1e-12);
    const double err = std::abs(root - 1.0 / 3);
    return {err <= 1e-9, "root " + fmt("%.12f", root) + ", |root - 1/3| = " + fmt("%.2e", err)};
}

Outcome analytic_vs_wootters() {
    Rng rng(1001);
    double worst = 0;
    for (int i = 0; i < 10000; ++i) {
        const auto p = random_d3_point(rng);
        worst = std::max(worst, std::abs(concurrence_d3(p) - concurrence(d3_density(p))));
    }
    return {worst <= 1e-9, "10000 points, max |delta| " + fmt("%.2e", worst)};
}

Outcome positivity_equivalence() {
    Rng rng(1002);
    int agree = 0;
    for (int i = 0; i < 10000; ++i) {
        const D3Pointd p{uniform(rng, -1, 1), uniform(rng, -1, 1), uniform(rng, -1, 1)};
        agree += d3_membership(p, 1e-10) == is_physical<double>(d3_density(p), 1e-10);
    }
    return {agree == 10000, std::to_string(agree) + "/10000 agree"};
}

Outcome separable_ball() {
    Rng rng(1003);
    const double radius = 1 / std::sqrt(3.0) - 1e-6;
    int ok = 0;
    for (int i = 0; i < 1000; ++i) {
        PolarizationVectord v = random_pv(rng);
        v *= radius / v.norm();
        const auto rho = pv_to_density<double>(v);
        ok += is_physical(rho) && is_separable_ppt(rho) && concurrence(rho) <= 1e-9;
    }
    return {ok == 1000, std::to_string(ok) + "/1000 physical, PPT and unentangled"};
}

Outcome figure_categories() {
    const auto osc = DephasingFunction::damped_cosine(0.02, 0.3);
    const auto mark = DephasingFunction::markovian(0.05);
    const ClassifierConfig cfg;
    const char got[4] = {category_label(classify_model({1, 0.03}, osc, cfg).category),
                         category_label(classify_model({1, 0.03}, mark, cfg).category),
                         category_label(classify_model({1, 0}, mark, cfg).category),
                         category_label(classify_model({1, 0}, osc, cfg).category)};
    const auto b = classify_model({1, 0.03}, mark, cfg);
    const ModelParams pb{1, 0.03};
    const double root = boost_root([&](double t) { return mark(t) - xi(pb, t); }, 0, 200, 1e-12);
    const double dt = b.death_time ? std::abs(*b.death_time - root) : 1e300;
    const bool labels = std::string(got, 4) == "OEAB";
    return {labels && dt <= 1e-6, "labels " + std::string(got, 4) + ", |t_d - root| = " + fmt("%.2e", dt)};
}

Outcome transition_criticality() {
    const std::vector<double> rs{0.9, 0.95, 1.0};
    const std::vector<double> thetas{0.0, 0.05, 0.1};
    const auto res = sweep(rs, thetas, parse_family("markovian"), ClassifierConfig{});
    std::string map;
    bool ok = true;
    for (const auto& c : res.cells) {
        const char label = c.category ? category_label(*c.category) : '?';
        map += label;
        const char want = (c.r == 1.0 && c.theta == 0.0) ? 'A' : 'E';
        ok = ok && label == want;
    }
    return {ok, "grid labels " + map};
}

Outcome ghzw_oracle() {
    double worst = 0;
    for (int n = 2; n <= 5; ++n)
        for (double z : {0.0, 0.25, 0.5, 0.75, 1.0}) {
            const double ghz = negativity(kraus_dephase(ghz_state<double>(n), z, n), Partition{0});
            const double w = negativity(kraus_dephase(w_state<double>(n), z, n), Partition{0});
            worst = std::max({worst, std::abs(ghz - negativity_ghz_closed(z, n)), std::abs(w - negativity_w_closed(z, n))});
        }
    return {worst <= 1e-10, "40 cases, max |delta| " + fmt("%.2e", worst)};
}

Outcome ghzw_exclusion() {
    Rng rng(1009);
    ClassifierConfig cfg;
    cfg.t_max = 100;
    int curves = 0;
    int bad = 0;
    int bounced = 0;
    for (int i = 0; i < 50; ++i) {
        const auto f = DephasingFunction::damped_cosine(uniform(rng, 0.005, 0.02), uniform(rng, 0.2, 0.6));
        auto tally = [&](const SampledCurve& curve) {
            const Category c = classify_curve(curve, cfg).category;
            ++curves;
            bad += c == Category::E || c == Category::O;
            bounced += c == Category::B;
        };
        for (int n : {2, 3}) tally(ghz_negativity_curve(f, n, cfg));
        for (int n = 2; n <= 5; ++n) tally(w_negativity_curve(f, n, cfg));
    }
    std::ostringstream os;
    os << curves << " curves, " << bad << " E/O, " << bounced << " B";
    return {bad == 0 && bounced == curves, os.str()};
}

Outcome kraus_properties() {
    double completeness = 0;
    for (int i = 0; i <= 1000; ++i) {
        const auto [e0, e1] = dephasing_kraus(-1 + 2.0 * i / 1000);
        const Eigen::Matrix2cd sum = e0.adjoint() * e0 + e1.adjoint() * e1;
        completeness = std::max(completeness, (sum - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff());
    }
    Rng rng(1010);
    double trace_err = 0;
    bool positive = true;
    for (int n = 1; n <= 5; ++n)
        for (int i = 0; i < 20; ++i) {
            const auto rho = (i % 2) ? random_density(rng, n) : random_pure(rng, n);
            const auto out = kraus_dephase(rho, uniform(rng, -1, 1), n);
            trace_err = std::max(trace_err, std::abs(out.trace().real() - 1));
            positive = positive && is_physical(out, 1e-12);
        }
    return {completeness <= 1e-14 && trace_err <= 1e-12 && positive,
            "completeness " + fmt("%.2e", completeness) + ", trace " + fmt("%.2e", trace_err) +
                (positive ? ", all outputs PSD" : ", non-PSD output")};
}

}  // namespace

int main() {
    const std::pair<const char*, Outcome (*)()> criteria[] = {
        {"Bell-state concurrence and negativity", bell_measures},
        {"Werner entanglement threshold", werner_threshold},
        {"slice formula vs Wootters concurrence", analytic_vs_wootters},
        {"slice inequalities vs spectral positivity", positivity_equivalence},
        {"separable ball of radius 1/sqrt(3)", separable_ball},
        {"figure panel categories and death time", figure_categories},
        {"Markovian sweep transition", transition_criticality},
        {"GHZ/W closed forms vs Kraus oracle", ghzw_oracle},
        {"GHZ/W curves never E or O", ghzw_exclusion},
        {"Kraus channel properties", kraus_properties},
    };
    int failed = 0;
    const auto start = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < std::size(criteria); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::printf("[%s] %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%zu/%zu criteria passed in %.1f s\n", std::size(criteria) - failed, std::size(criteria), secs);
    return failed == 0 ? 0 : 1;
}
