#include "entangle/io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace entangle::io {

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj, std::span<const double> concurrence) {
    if (concurrence.size() != traj.times.size()) throw PreconditionError("trajectory and curve lengths differ");
    os << "t,n_xx,n_xy,n_zz,concurrence\n";
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        const auto& p = traj.points[i];
        os << format_number(traj.times[i]) << ',' << format_number(p.n_xx) << ',' << format_number(p.n_xy) << ','
           << format_number(p.n_zz) << ',' << format_number(concurrence[i]) << '\n';
    }
}

nlohmann::json trajectory_json(const Trajectory& traj, std::span<const double> concurrence) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        const auto& p = traj.points[i];
        rows.push_back({{"t", traj.times[i]},
                        {"n_xx", p.n_xx},
                        {"n_xy", p.n_xy},
                        {"n_zz", p.n_zz},
                        {"concurrence", concurrence[i]}});
    }
    return {{"r", traj.params.r}, {"gamma1", traj.params.gamma1_ab}, {"samples", rows}};
}

namespace {

std::string cell_label(const SweepCell& c) {
    if (c.category) return std::string(1, category_label(*c.category));
    return c.horizon_limited ? "horizon-limited" : "error";
}

}  // namespace

void write_sweep_csv(std::ostream& os, const SweepResult& result) {
    os << "r,theta,family,category,t_d\n";
    for (const auto& c : result.cells) {
        os << format_number(c.r) << ',' << format_number(c.theta) << ',' << result.family << ',' << cell_label(c)
           << ',' << (c.death_time ? format_number(*c.death_time) : "") << '\n';
    }
}

nlohmann::json sweep_json(const SweepResult& result) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& c : result.cells) {
        nlohmann::json j{{"r", c.r}, {"theta", c.theta}, {"category", cell_label(c)}};
        j["t_d"] = c.death_time ? nlohmann::json(*c.death_time) : nlohmann::json(nullptr);
        if (!c.error.empty()) j["error"] = c.error;
        cells.push_back(std::move(j));
    }
    nlohmann::json transitions = nlohmann::json::array();
    for (const auto& [a, b] : result.transitions) transitions.push_back({a, b});
    return {{"family", result.family}, {"cells", cells}, {"transitions", transitions}};
}

void write_geometry_csv(std::ostream& os, const std::vector<BoundaryCurve>& curves) {
    os << "curve,n_xx,n_zz\n";
    for (const auto& c : curves)
        for (std::size_t i = 0; i < c.n_xx.size(); ++i)
            os << c.name << ',' << format_number(c.n_xx[i]) << ',' << format_number(c.n_zz[i]) << '\n';
}

nlohmann::json geometry_json(const std::vector<BoundaryCurve>& curves) {
    nlohmann::json out = nlohmann::json::object();
    for (const auto& c : curves) out[c.name] = {{"n_xx", c.n_xx}, {"n_zz", c.n_zz}};
    return out;
}

void write_ghzw_csv(std::ostream& os, const std::vector<NegativitySample>& rows) {
    os << "state,N,t,zeta,negativity_closed,negativity_oracle,abs_delta\n";
    for (const auto& s : rows) {
        os << s.state << ',' << s.qubits << ',' << format_number(s.t) << ',' << format_number(s.zeta) << ','
           << format_number(s.closed) << ',' << format_number(s.oracle) << ',' << format_number(s.delta()) << '\n';
    }
}

nlohmann::json ghzw_json(const std::vector<NegativitySample>& rows) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& s : rows) {
        out.push_back({{"state", s.state},
                       {"N", s.qubits},
                       {"t", s.t},
                       {"zeta", s.zeta},
                       {"negativity_closed", s.closed},
                       {"negativity_oracle", s.oracle},
                       {"abs_delta", s.delta()}});
    }
    return out;
}

DephasingFunction read_tabulated_dephasing(std::istream& is) {
    std::vector<double> times;
    std::vector<double> values;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        for (char& ch : line)
            if (ch == ',' || ch == '\t' || ch == ';') ch = ' ';
        std::istringstream fields(line);
        double t = 0;
        double z = 0;
        if (!(fields >> t >> z)) {
            if (times.empty() && lineno == 1) continue;  // header
            throw PreconditionError("tabulated dephasing: malformed line " + std::to_string(lineno));
        }
        times.push_back(t);
        values.push_back(z);
    }
    return DephasingFunction::tabulated(std::move(times), std::move(values));
}

DephasingFunction read_tabulated_dephasing(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot open dephasing table '" + path + "'");
    return read_tabulated_dephasing(in);
}

}  // namespace entangle::io
