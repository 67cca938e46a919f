#pragma once

// Reference propagation by midpoint exponential stepping,
//   U <- exp(-i H(t + dt/2) dt) U,
// plus comparison metrics. Depends on nothing but the time-domain
// Hamiltonian and `hilbert`.

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "ramanpt/hilbert.hpp"

namespace ramanpt {

using HamiltonianFn = std::function<Operator(double)>;

/// Fraction of the fastest period a step may span: dt <= kStepFraction / w_max.
inline constexpr double kStepFraction = 0.05;

struct PropagationSettings
{
    /// Fastest angular frequency present in H(t); bounds the step size.
    double max_frequency = 0.0;
    /// If set, H(t + period) == H(t) is assumed and only one period is stepped;
    /// U(n P + s) = U(s) U(P)^n.
    std::optional<double> period;
    int n_phys = 0;
    /// Propagate only the interior columns U P (non-periodic runs). The other
    /// columns of the stored evolutors are zero, so only interior metrics
    /// (interior_distance, fidelity, populations of interior states) apply.
    bool interior_only = false;
};

struct PropagationRun
{
    std::vector<double> times;
    double step = 0.0;
    std::vector<Operator> unitaries;
    SpaceSpec space;
    int n_phys = 0;
};

/// Propagates from U(0) = I and stores U at each sample (ascending, within
/// [0, t_final]). Intervals between samples are split into equal substeps no
/// longer than dt. Throws StepTooLarge if dt > kStepFraction / max_frequency.
PropagationRun exact_propagate(const HamiltonianFn& h, double t_final, double dt,
                               std::span<const double> samples,
                               const PropagationSettings& settings);

/// (4 U_{dt/2} - U_dt) / 3 sample by sample: cancels the dt^2 error term of
/// the symmetric midpoint rule. Not exactly unitary.
PropagationRun richardson_combine(const PropagationRun& coarse, const PropagationRun& fine);

/// |tr(P U^dagger V P)| / tr(P), P the interior projector at n_phys.
double fidelity(const Operator& u, const Operator& v, int n_phys);

/// P_level(t) = <psi(t)| sigma_ll (x) 1 |psi(t)> with psi(t) = U(t) psi0.
std::vector<double> populations(const PropagationRun& run, const Vector& initial_state, int level);

/// Same, for an arbitrary list of evolutors.
std::vector<double> populations(std::span<const Operator> evolutors, const Vector& initial_state,
                                int level);

/// |level; n = 0 ...> as a state vector.
Vector basis_state(const SpaceSpec& space, int level, std::span<const int> occupations);

} // namespace ramanpt
