#include "entangle/dephasing.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "entangle/types.hpp"

namespace entangle {

namespace {

double parse_double(std::string_view text, std::string_view what) {
    std::string s(text);
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size() || !std::isfinite(v))
        throw PreconditionError("cannot parse " + std::string(what) + " from '" + s + "'");
    return v;
}

}  // namespace

DephasingFunction DephasingFunction::markovian(double gamma2) {
    if (!(gamma2 >= 0) || !std::isfinite(gamma2)) throw PreconditionError("Markovian dephasing rate must be >= 0");
    return DephasingFunction(Markovian{gamma2});
}

DephasingFunction DephasingFunction::damped_cosine(double gamma, double omega) {
    if (!(gamma >= 0) || !std::isfinite(gamma) || !std::isfinite(omega))
        throw PreconditionError("damped cosine needs gamma >= 0 and finite omega");
    return DephasingFunction(DampedCosine{gamma, omega});
}

DephasingFunction DephasingFunction::tabulated(std::vector<double> times, std::vector<double> values) {
    if (times.size() != values.size() || times.size() < 2)
        throw PreconditionError("tabulated dephasing needs at least two (t, zeta) samples");
    if (times.front() != 0.0) throw PreconditionError("tabulated dephasing must start at t = 0");
    if (std::abs(values.front() - 1.0) > 1e-12) throw PreconditionError("tabulated dephasing must have zeta(0) = 1");
    for (std::size_t i = 1; i < times.size(); ++i)
        if (!(times[i] > times[i - 1])) throw PreconditionError("tabulated dephasing times must strictly increase");
    for (double v : values)
        if (!(std::abs(v) <= 1.0)) throw PreconditionError("tabulated dephasing values must satisfy |zeta| <= 1");
    return DephasingFunction(Tabulated{std::move(times), std::move(values)});
}

double DephasingFunction::operator()(double t) const {
    if (!(t >= 0)) throw PreconditionError("zeta(t) is defined for t >= 0 only");
    if (const auto* m = std::get_if<Markovian>(&kind_)) return std::exp(-m->gamma2 * t);
    if (const auto* d = std::get_if<DampedCosine>(&kind_)) return std::exp(-d->gamma * t) * std::cos(d->omega * t);

    const auto& tab = std::get<Tabulated>(kind_);
    if (t > tab.times.back())
        throw PreconditionError("t = " + std::to_string(t) + " lies beyond the tabulated range");
    const auto hi = std::lower_bound(tab.times.begin(), tab.times.end(), t);
    const auto i = static_cast<std::size_t>(hi - tab.times.begin());
    if (tab.times[i] == t) return tab.values[i];
    const double w = (t - tab.times[i - 1]) / (tab.times[i] - tab.times[i - 1]);
    return (1 - w) * tab.values[i - 1] + w * tab.values[i];
}

std::optional<double> DephasingFunction::envelope(double t) const {
    if (const auto* m = std::get_if<Markovian>(&kind_)) return std::exp(-m->gamma2 * t);
    if (const auto* d = std::get_if<DampedCosine>(&kind_)) return std::exp(-d->gamma * t);
    return std::nullopt;
}

std::string DephasingFunction::describe() const {
    std::ostringstream os;
    os.precision(15);
    if (const auto* m = std::get_if<Markovian>(&kind_)) {
        os << "markovian:" << m->gamma2;
    } else if (const auto* d = std::get_if<DampedCosine>(&kind_)) {
        os << "damped:" << d->gamma << ',' << d->omega;
    } else {
        os << "tabulated:" << std::get<Tabulated>(kind_).times.size();
    }
    return os.str();
}

DephasingFunction parse_dephasing(std::string_view spec) {
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos)
        throw PreconditionError("dephasing spec '" + std::string(spec) + "' needs the form kind:params");
    const auto kind = spec.substr(0, colon);
    const auto args = spec.substr(colon + 1);

    if (kind == "markovian") return DephasingFunction::markovian(parse_double(args, "Markovian rate"));
    if (kind == "damped" || kind == "damped_cosine") {
        const auto comma = args.find(',');
        if (comma == std::string_view::npos)
            throw PreconditionError("damped cosine spec needs two parameters: damped:<gamma>,<omega>");
        return DephasingFunction::damped_cosine(parse_double(args.substr(0, comma), "damping rate"),
                                                parse_double(args.substr(comma + 1), "angular frequency"));
    }
    throw PreconditionError("unknown dephasing kind '" + std::string(kind) + "'");
}

}  // namespace entangle
