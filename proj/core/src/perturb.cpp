#include "ramanpt/perturb.hpp"

#include <algorithm>
#include <cmath>

namespace ramanpt {

namespace {

Operator hermitize(const Operator& a)
{
    return (a + a.adjoint()) * 0.5;
}

TrigPolyOp constant_poly(const TrigPolyOp& like, const Operator& value)
{
    TrigPolyOp out(like.basis(), like.space());
    out.add_term(FreqKey::zero(like.basis().size()), value);
    out.canonicalize();
    return out;
}

void validate_orders(const HamiltonianOrders& h, int n_orders)
{
    if (n_orders < 1 || n_orders > 2)
        throw InvalidHamiltonian("only perturbative orders 1 and 2 are implemented");
    if (h.orders.empty())
        throw InvalidHamiltonian("no Hamiltonian orders given");
    if (!std::isfinite(h.lambda) || !std::isfinite(h.frequency_unit))
        throw InvalidHamiltonian("non-finite lambda or frequency unit");
    if (!h.h0.is_hermitian(kHermitianInputTolerance * std::max(1.0, h.h0.norm())))
        throw InvalidHamiltonian("H0 is not Hermitian");
    for (std::size_t n = 0; n < h.orders.size(); ++n) {
        const TrigPolyOp& f = h.orders[n];
        if (!(f.basis() == h.orders.front().basis()) || !(f.space() == h.h0.space()))
            throw InvalidHamiltonian("order " + std::to_string(n + 1)
                                     + " uses a different basis or space");
        const double tol = kHermitianInputTolerance * std::max(1.0, f.max_coefficient_norm());
        if (!f.is_hermitian_valued(tol))
            throw InvalidHamiltonian("order " + std::to_string(n + 1)
                                     + " is not Hermitian-valued");
    }
}

} // namespace

PerturbativeDecomposition::PerturbativeDecomposition(std::vector<Operator> c,
                                                     std::vector<TrigPolyOp> z, double lambda,
                                                     Operator h0)
    : c_(std::move(c)),
      z_(std::move(z)),
      lambda_(lambda),
      h0_(std::move(h0)),
      c_total_(Operator::zero(h0_.space())),
      initial_kick_(Operator::identity(h0_.space()))
{
    if (c_.size() != z_.size())
        throw InvalidHamiltonian("mismatched numbers of C and Z orders");
    double power = 1.0;
    for (const Operator& cn : c_) {
        power *= lambda_;
        c_total_ += cn * power;
    }
    initial_kick_ = matrix_exponential(dressing_generator(0.0) * I_UNIT);
    u0_ = std::make_shared<const HermitianEvolution>(h0_);
    c_evolution_ = std::make_shared<const HermitianEvolution>(c_total_);
}

Operator PerturbativeDecomposition::dressing_generator(double t) const
{
    Operator z = Operator::zero(h0_.space());
    double power = 1.0;
    for (const TrigPolyOp& zn : z_) {
        power *= lambda_;
        z += tp_eval(zn, t) * power;
    }
    return hermitize(z);
}

PerturbativeDecomposition compute_cz_orders(const HamiltonianOrders& h, int n_orders)
{
    validate_orders(h, n_orders);
    const double unit = h.frequency_unit;

    std::vector<Operator> c;
    std::vector<TrigPolyOp> z;

    const TrigPolyOp h1 = h.orders[0] * unit;
    const Operator c1 = hermitize(tp_mean(h1));
    TrigPolyOp z1 = tp_zero_mean_primitive(h1.oscillating_part()).hermitian_part();
    c.push_back(c1);
    z.push_back(z1);

    if (n_orders >= 2) {
        TrigPolyOp g2 = tp_commutator(z1, h1 + constant_poly(h1, c1)) * (0.5 * I_UNIT);
        if (h.orders.size() >= 2)
            g2 += h.orders[1] * unit;
        const Operator c2 = hermitize(tp_mean(g2));
        TrigPolyOp z2 = tp_zero_mean_primitive(g2.oscillating_part()).hermitian_part();
        c.push_back(c2);
        z.push_back(std::move(z2));
    }

    PerturbativeDecomposition d(std::move(c), std::move(z), h.lambda, h.h0);
    if (std::abs(h.lambda) >= 1.0)
        d.add_warning("|lambda| = " + std::to_string(std::abs(h.lambda))
                      + " >= 1: the expansion is not expected to converge");
    return d;
}

Operator assemble_truncated_evolutor(const PerturbativeDecomposition& d, double t)
{
    const Operator dressing = matrix_exponential(d.dressing_generator(t) * (-I_UNIT));
    return dressing * d.secular_evolution(t) * d.initial_kick();
}

Operator full_evolutor(const PerturbativeDecomposition& d, double t)
{
    return d.free_evolution(t) * assemble_truncated_evolutor(d, t);
}

Operator effective_evolutor(const PerturbativeDecomposition& d, double t)
{
    return d.free_evolution(t) * d.secular_evolution(t);
}

Operator dressing_operator(const PerturbativeDecomposition& d, double t)
{
    const Operator u0 = d.free_evolution(t);
    const Operator dressing = matrix_exponential(d.dressing_generator(t) * (-I_UNIT));
    return u0 * dressing * u0.adjoint();
}

Operator magnus1_evolutor(const HamiltonianOrders& h, double t)
{
    validate_orders(h, 1);
    const Operator omega = hermitize(tp_integral_from_zero(h.orders[0], t)
                                     * (h.lambda * h.frequency_unit));
    return HermitianEvolution(h.h0).evolve(t) * HermitianEvolution(omega).evolve(1.0);
}

} // namespace ramanpt
