#pragma once

// Gauge-fixed perturbative decomposition of the interaction-picture evolutor
//
//   T(t) = exp(-i Z(t)) exp(-i C t) exp(i Z(0)),
//
// with C time independent and Z a zero-mean trigonometric polynomial, solved
// order by order in lambda for orders 1 and 2. hbar = 1 throughout.

#include <memory>
#include <string>
#include <vector>

#include "ramanpt/hilbert.hpp"
#include "ramanpt/trigpoly.hpp"

namespace ramanpt {

/// The interaction-picture Hamiltonian in the form
///   H~(t) = frequency_unit * sum_n lambda^n orders[n-1](t),
/// so `orders` may be dimensionless and `frequency_unit` carries the rate
/// (for the Raman model, the reference detuning).
struct HamiltonianOrders
{
    double lambda = 0.0;
    double frequency_unit = 1.0;
    std::vector<TrigPolyOp> orders;
    Operator h0;
};

class PerturbativeDecomposition
{
public:
    PerturbativeDecomposition(std::vector<Operator> c, std::vector<TrigPolyOp> z, double lambda,
                              Operator h0);

    /// C_n and Z_n in rate units: C^(N) = sum lambda^n C_n is an angular frequency
    /// operator, Z^(N) is dimensionless.
    const std::vector<Operator>& c() const noexcept { return c_; }
    const std::vector<TrigPolyOp>& z() const noexcept { return z_; }
    double lambda() const noexcept { return lambda_; }
    const Operator& h0() const noexcept { return h0_; }
    int order() const noexcept { return static_cast<int>(c_.size()); }
    const std::vector<std::string>& warnings() const noexcept { return warnings_; }

    /// C^(N)(lambda)
    const Operator& secular_generator() const noexcept { return c_total_; }
    /// Z^(N)(lambda; t)
    Operator dressing_generator(double t) const;

    /// exp(-i H0 t)
    Operator free_evolution(double t) const { return u0_->evolve(t); }
    /// exp(-i C^(N) t)
    Operator secular_evolution(double t) const { return c_evolution_->evolve(t); }
    /// exp(i Z^(N)(0))
    const Operator& initial_kick() const noexcept { return initial_kick_; }

    void add_warning(std::string w) { warnings_.push_back(std::move(w)); }

private:
    std::vector<Operator> c_;
    std::vector<TrigPolyOp> z_;
    double lambda_;
    Operator h0_;
    Operator c_total_;
    Operator initial_kick_;
    std::shared_ptr<const HermitianEvolution> u0_;
    std::shared_ptr<const HermitianEvolution> c_evolution_;
    std::vector<std::string> warnings_;
};

/// Relative tolerance used to accept input orders as Hermitian-valued.
inline constexpr double kHermitianInputTolerance = 1e-10;

/// C_1 = mean(H_1); Z_1 = primitive(H_1 - C_1);
/// G_2 = (i/2)[Z_1, H_1 + C_1] + H_2; C_2 = mean(G_2); Z_2 = primitive(G_2 - C_2).
PerturbativeDecomposition compute_cz_orders(const HamiltonianOrders& h, int n_orders);

/// exp(-i Z(t)) exp(-i C t) exp(i Z(0))
Operator assemble_truncated_evolutor(const PerturbativeDecomposition& d, double t);
/// exp(-i H0 t) * assemble_truncated_evolutor(d, t)
Operator full_evolutor(const PerturbativeDecomposition& d, double t);
/// exp(-i H0 t) exp(-i C t), kept as an ordered product.
Operator effective_evolutor(const PerturbativeDecomposition& d, double t);
/// exp(-i U0 Z(t) U0^dagger) = U0 exp(-i Z(t)) U0^dagger
Operator dressing_operator(const PerturbativeDecomposition& d, double t);
/// exp(-i H0 t) exp(-i lambda int_0^t H_1), the Z = 0 gauge at first order.
Operator magnus1_evolutor(const HamiltonianOrders& h, double t);

} // namespace ramanpt
