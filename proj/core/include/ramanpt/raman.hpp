#pragma once

// Trapped-ion Lambda-Raman model: three atomic levels, levels 1 and 2 each
// laser-coupled to the auxiliary level 3, harmonic motion along M modes.
//
// Wave vectors enter only through Lamb-Dicke vectors eta = k.x0 (one
// component per mode). Frequencies are angular, in one user-chosen unit,
// hbar = 1. Laser frequencies are derived: w_j3 = w3 - w_j - detuning.

#include <string>
#include <vector>

#include "ramanpt/hilbert.hpp"
#include "ramanpt/perturb.hpp"

namespace ramanpt {

/// One Raman pair; both legs share `detuning`.
struct LaserPair
{
    cplx g13;
    cplx g23;
    std::vector<double> eta13;
    std::vector<double> eta23;
    double detuning = 0.0;
};

struct RamanConfig
{
    double omega1 = 0.0;
    double omega2 = 0.0;
    double omega3 = 0.0;
    double trap_freq = 1.0; ///< nu
    std::vector<LaserPair> schemes;
    SpaceSpec space;
};

struct EffectiveCoupling
{
    cplx g12;
    std::vector<double> eta12;
    double omega12 = 0.0;

    bool operator==(const EffectiveCoupling&) const = default;
};

struct EffectiveModel
{
    double shift1 = 0.0;
    double shift2 = 0.0;
    double shift3 = 0.0;
    std::vector<EffectiveCoupling> couplings;

    bool operator==(const EffectiveModel&) const = default;
};

/// Throws InvalidScheme / DuplicateDetuning on structural problems.
void validate_config(const RamanConfig& cfg);
/// Non-fatal diagnostics (high-detuning sanity check).
std::vector<std::string> config_warnings(const RamanConfig& cfg);

/// max{nu, |g13|, |g23| over all schemes}
double coupling_scale(const RamanConfig& cfg);
/// The detuning of largest magnitude; lambda is measured against it.
double reference_detuning(const RamanConfig& cfg);
/// lambda = coupling_scale / reference_detuning (signed).
double perturbative_parameter(const RamanConfig& cfg);

/// sum_l w_l sigma_ll
Operator free_hamiltonian(const RamanConfig& cfg);
/// nu * sum_a a_a^dagger a_a
Operator trap_hamiltonian(const RamanConfig& cfg);

/// Dimensionless interaction-picture Hamiltonian: frequency basis = the
/// scheme detunings, orders = {H~/(g)}, frequency_unit = reference detuning,
/// lambda = g / reference detuning.
HamiltonianOrders build_interaction_orders(const RamanConfig& cfg);

/// Time-domain interaction-picture Hamiltonian with the static pieces built once.
/// Unlike the perturbative builders, zero laser strengths are accepted.
class InteractionHamiltonian
{
public:
    explicit InteractionHamiltonian(const RamanConfig& cfg);
    Operator operator()(double t) const;

private:
    Operator static_part_;
    std::vector<Matrix> lowering_;
    std::vector<double> detunings_;
};

/// Time-domain Schroedinger-picture Hamiltonian with the static pieces built once.
class SchroedingerHamiltonian
{
public:
    explicit SchroedingerHamiltonian(const RamanConfig& cfg);
    Operator operator()(double t) const;

private:
    Operator static_part_;
    std::vector<Matrix> legs_;
    std::vector<double> frequencies_;
};

/// H~(t) = nu N + sum_s (e^{-i D_s t}(g13 D13 s13 + g23 D23 s23) + h.c.),
/// assembled directly in the time domain.
Operator interaction_hamiltonian(const RamanConfig& cfg, double t);

/// H(t) = H0 + nu N + sum_s (g13 e^{-i k13.r} e^{i w13 t} s13 + ... + h.c.)
Operator schroedinger_hamiltonian(const RamanConfig& cfg, double t);

/// Closed-form second-order model. The two-photon coupling is
/// g12 = -g13 g23^* / detuning, the sign that accompanies the Stark shifts
/// -|g_j3|^2 / detuning in adiabatic elimination of level 3.
EffectiveModel analytic_effective_model(const RamanConfig& cfg);

/// sum_j shift_j sigma_jj + sum_s (g12 e^{-i k12.r} sigma_12 + h.c.)
Operator effective_c2_operator(const EffectiveModel& model, const RamanConfig& cfg);

/// Component-wise sum: shifts add, coupling lists concatenate.
EffectiveModel combine_models(const std::vector<EffectiveModel>& models);

/// Largest angular frequency the exact propagator must resolve: detunings,
/// nu and level differences.
double max_frequency(const RamanConfig& cfg);

} // namespace ramanpt
