#ifndef ENTANGLE_DEPHASING_HPP
#define ENTANGLE_DEPHASING_HPP

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace entangle {

/// zeta(t) = exp(-gamma2 t).
struct Markovian {
    double gamma2{0};
};

/// zeta(t) = exp(-gamma t) cos(omega t).
struct DampedCosine {
    double gamma{0};
    double omega{0};
};

/// Samples of zeta on a strictly increasing grid starting at t = 0; linear
/// interpolation in between.
struct Tabulated {
    std::vector<double> times;
    std::vector<double> values;
};

/// Coherence envelope zeta(t) of the dephasing channel. zeta(0) = 1 and
/// |zeta| <= 1 for every kind.
class DephasingFunction {
public:
    using Kind = std::variant<Markovian, DampedCosine, Tabulated>;

    static DephasingFunction markovian(double gamma2);
    static DephasingFunction damped_cosine(double gamma, double omega);
    static DephasingFunction tabulated(std::vector<double> times, std::vector<double> values);

    double operator()(double t) const;

    /// Non-increasing bound on |zeta(s)| for all s >= t, when the kind admits one.
    std::optional<double> envelope(double t) const;

    bool monotone() const { return std::holds_alternative<Markovian>(kind_); }
    const Kind& kind() const { return kind_; }

    /// Round-trippable text form, e.g. "markovian:0.05" or "damped:0.02,0.3".
    std::string describe() const;

private:
    explicit DephasingFunction(Kind kind) : kind_(std::move(kind)) {}
    Kind kind_;
};

inline double zeta(const DephasingFunction& f, double t) { return f(t); }

/// Parses "markovian:<gamma2>" or "damped:<gamma>,<omega>". Tabulated
/// functions come from io::read_tabulated_dephasing.
DephasingFunction parse_dephasing(std::string_view spec);

}  // namespace entangle

#endif  // ENTANGLE_DEPHASING_HPP
