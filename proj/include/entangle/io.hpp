#ifndef ENTANGLE_IO_HPP
#define ENTANGLE_IO_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "entangle/dynamics.hpp"
#include "entangle/geometry.hpp"
#include "entangle/ghzw.hpp"
#include "entangle/sweep.hpp"

namespace entangle::io {

/// Shortest-form text with 15 significant digits ("%.15g").
std::string format_number(double v);

/// Columns: t,n_xx,n_xy,n_zz,concurrence
void write_trajectory_csv(std::ostream& os, const Trajectory& traj, std::span<const double> concurrence);
nlohmann::json trajectory_json(const Trajectory& traj, std::span<const double> concurrence);

/// Columns: r,theta,family,category,t_d. Failed cells carry "horizon-limited" or "error".
void write_sweep_csv(std::ostream& os, const SweepResult& result);
nlohmann::json sweep_json(const SweepResult& result);

/// Columns: curve,n_xx,n_zz
void write_geometry_csv(std::ostream& os, const std::vector<BoundaryCurve>& curves);
nlohmann::json geometry_json(const std::vector<BoundaryCurve>& curves);

/// Columns: state,N,t,zeta,negativity_closed,negativity_oracle,abs_delta
void write_ghzw_csv(std::ostream& os, const std::vector<NegativitySample>& rows);
nlohmann::json ghzw_json(const std::vector<NegativitySample>& rows);

/// Two numeric columns (t, zeta); an optional non-numeric header line is skipped.
DephasingFunction read_tabulated_dephasing(const std::string& path);
DephasingFunction read_tabulated_dephasing(std::istream& is);

}  // namespace entangle::io

#endif  // ENTANGLE_IO_HPP
