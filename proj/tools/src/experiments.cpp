#include "ramanpt_app/experiments.hpp"

#include <cmath>
#include <numbers>

#include "ramanpt_app/config.hpp"

namespace ramanpt::app {

namespace {

constexpr double kPeriodicThreshold = 4.0; // periods before the one-period shortcut pays off

PropagationRun interaction_run(const RamanConfig& cfg, std::span<const double> samples, double dt,
                               int n_phys, bool interior_only)
{
    const InteractionHamiltonian h(cfg);
    PropagationSettings settings{.max_frequency = max_frequency(cfg), .period = std::nullopt, .n_phys = n_phys};
    const double t_final = samples.empty() ? 0.0 : samples.back();
    if (cfg.schemes.size() == 1) {
        const double period = 2.0 * std::numbers::pi / std::abs(cfg.schemes.front().detuning);
        if (t_final > kPeriodicThreshold * period)
            settings.period = period;
    }
    settings.interior_only = interior_only && !settings.period;
    return exact_propagate([&h](double t) { return h(t); }, t_final, dt, samples, settings);
}

std::vector<Operator> to_schroedinger(const RamanConfig& cfg, const PropagationRun& run)
{
    const HermitianEvolution u0(free_hamiltonian(cfg));
    std::vector<Operator> out;
    out.reserve(run.unitaries.size());
    for (std::size_t i = 0; i < run.unitaries.size(); ++i)
        out.push_back(u0.evolve(run.times[i]) * run.unitaries[i]);
    return out;
}

} // namespace

std::vector<Operator> exact_evolutors(const RamanConfig& cfg, std::span<const double> samples,
                                      double dt, int n_phys, bool interior_only)
{
    return to_schroedinger(cfg, interaction_run(cfg, samples, dt, n_phys, interior_only));
}

std::vector<Operator> exact_evolutors_extrapolated(const RamanConfig& cfg,
                                                   std::span<const double> samples, double dt,
                                                   int n_phys, bool interior_only)
{
    const PropagationRun coarse = interaction_run(cfg, samples, dt, n_phys, interior_only);
    const PropagationRun fine = interaction_run(cfg, samples, dt / 2.0, n_phys, interior_only);
    return to_schroedinger(cfg, richardson_combine(coarse, fine));
}

std::vector<CompareRow> compare_trajectories(const RamanConfig& cfg, std::span<const double> samples,
                                             double dt, int n_phys)
{
    const PerturbativeDecomposition d = compute_cz_orders(build_interaction_orders(cfg), 2);
    const std::vector<Operator> exact = exact_evolutors(cfg, samples, dt, n_phys);
    const std::vector<int> vacuum(static_cast<std::size_t>(cfg.space.mode_count), 0);
    const Vector psi0 = basis_state(cfg.space, 1, vacuum);

    std::vector<CompareRow> rows;
    rows.reserve(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double t = samples[i];
        const Operator dressed = full_evolutor(d, t);
        const Operator effective = effective_evolutor(d, t);
        const std::span<const Operator> ex(&exact[i], 1);
        const std::span<const Operator> ef(&effective, 1);
        rows.push_back({.t = t,
                        .fid_exact_vs_dressed = fidelity(exact[i], dressed, n_phys),
                        .fid_exact_vs_effective = fidelity(exact[i], effective, n_phys),
                        .p1 = populations(ex, psi0, 1)[0],
                        .p2 = populations(ex, psi0, 2)[0],
                        .p3 = populations(ex, psi0, 3)[0],
                        .p1_eff = populations(ef, psi0, 1)[0],
                        .p2_eff = populations(ef, psi0, 2)[0]});
    }
    return rows;
}

double sweep_error(const RamanConfig& cfg, double lambda, double dimensionless_step, int n_phys)
{
    const RamanConfig scaled = with_lambda(cfg, lambda);
    const double delta = std::abs(reference_detuning(scaled));
    const double t = 20.0 / delta;
    const std::vector<double> samples{t};
    const PerturbativeDecomposition d = compute_cz_orders(build_interaction_orders(scaled), 2);
    const std::vector<Operator> exact
        = exact_evolutors_extrapolated(scaled, samples, dimensionless_step / delta, n_phys, true);
    return interior_distance(exact.front(), full_evolutor(d, t), n_phys);
}

std::optional<double> loglog_slope(std::span<const double> x, std::span<const double> y)
{
    if (x.size() != y.size())
        throw std::invalid_argument("loglog_slope: size mismatch");
    if (x.size() < 2)
        return std::nullopt;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const auto n = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lx = std::log(x[i]);
        const double ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0)
        return std::nullopt;
    return (n * sxy - sx * sy) / denom;
}

} // namespace ramanpt::app
