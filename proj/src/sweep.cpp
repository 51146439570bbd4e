#include "entangle/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace entangle {

std::string NoiseFamily::name() const { return kind == Kind::Markovian ? "markovian" : "damped"; }

std::pair<ModelParams, DephasingFunction> NoiseFamily::member(double r, double theta) const {
    QubitNoise q = noise;
    q.theta = theta;
    const ModelParams params = ModelParams::from_noise(r, q, q);
    if (kind == Kind::Markovian) return {params, markovian_dephasing(q, q)};
    return {params, DephasingFunction::damped_cosine(gamma, omega)};
}

NoiseFamily parse_family(const std::string& name) {
    NoiseFamily f;
    if (name == "markovian") {
        f.kind = NoiseFamily::Kind::Markovian;
    } else if (name == "damped" || name == "damped_cosine") {
        f.kind = NoiseFamily::Kind::DampedCosine;
    } else {
        throw PreconditionError("unknown noise family '" + name + "' (expected markovian or damped)");
    }
    return f;
}

namespace {

void classify_cell(SweepCell& cell, const NoiseFamily& family, const ClassifierConfig& cfg) {
    try {
        const auto [params, zeta] = family.member(cell.r, cell.theta);
        const Classification c = classify_model(params, zeta, cfg);
        cell.category = c.category;
        cell.death_time = c.death_time;
    } catch (const HorizonLimitedError& e) {
        cell.horizon_limited = true;
        cell.error = e.what();
    } catch (const std::exception& e) {
        cell.error = e.what();
    }
}

}  // namespace

SweepResult sweep(std::span<const double> r_grid, std::span<const double> theta_grid, const NoiseFamily& family,
                  const ClassifierConfig& cfg, unsigned threads) {
    if (r_grid.empty() || theta_grid.empty()) throw PreconditionError("sweep grids must be non-empty");
    cfg.validate();

    SweepResult out;
    out.family = family.name();
    out.cells.resize(r_grid.size() * theta_grid.size());
    for (std::size_t i = 0; i < r_grid.size(); ++i) {
        for (std::size_t j = 0; j < theta_grid.size(); ++j) {
            auto& cell = out.cells[i * theta_grid.size() + j];
            cell.r_index = i;
            cell.theta_index = j;
            cell.r = r_grid[i];
            cell.theta = theta_grid[j];
        }
    }

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, out.cells.size()));
    std::atomic<std::size_t> next{0};
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < threads; ++w) {
            pool.emplace_back([&] {
                for (std::size_t k = next++; k < out.cells.size(); k = next++) classify_cell(out.cells[k], family, cfg);
            });
        }
    }

    const auto differs = [&](std::size_t a, std::size_t b) {
        const auto& ca = out.cells[a];
        const auto& cb = out.cells[b];
        return ca.category && cb.category && *ca.category != *cb.category;
    };
    const std::size_t cols = theta_grid.size();
    for (std::size_t i = 0; i < r_grid.size(); ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            const std::size_t k = i * cols + j;
            if (j + 1 < cols && differs(k, k + 1)) out.transitions.emplace_back(k, k + 1);
            if (i + 1 < r_grid.size() && differs(k, k + cols)) out.transitions.emplace_back(k, k + cols);
        }
    }
    return out;
}

}  // namespace entangle
