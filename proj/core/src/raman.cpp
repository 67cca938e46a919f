#include "ramanpt/raman.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ramanpt {

namespace {

std::string scheme_name(std::size_t s)
{
    return "scheme " + std::to_string(s + 1);
}

// g13 e^{-i k13.r} sigma13 + g23 e^{-i k23.r} sigma23 for one scheme.
Operator scheme_lowering(const LaserPair& p, const SpaceSpec& space)
{
    const Operator d13 = displacement_phase(p.eta13, space);
    const Operator d23 = displacement_phase(p.eta23, space);
    return (sigma(space, 1, 3) * d13) * p.g13 + (sigma(space, 2, 3) * d23) * p.g23;
}

void validate_structure(const RamanConfig& cfg, bool require_strengths);

} // namespace

void validate_config(const RamanConfig& cfg)
{
    validate_structure(cfg, true);
}

namespace {

void validate_structure(const RamanConfig& cfg, bool require_strengths)
{
    cfg.space.validate();
    if (cfg.space.atomic_dim != 3)
        throw InvalidScheme("the Raman model needs atomic_dim = 3");
    if (!(cfg.trap_freq > 0.0) || !std::isfinite(cfg.trap_freq))
        throw InvalidScheme("trap frequency must be positive and finite");
    const double w[3] = {cfg.omega1, cfg.omega2, cfg.omega3};
    for (double x : w)
        if (!std::isfinite(x))
            throw InvalidScheme("level frequencies must be finite");
    if (w[0] == w[1] || w[0] == w[2] || w[1] == w[2])
        throw InvalidScheme("level frequencies must be pairwise distinct");
    if (cfg.schemes.empty())
        throw InvalidScheme("at least one Raman scheme is required");

    for (std::size_t s = 0; s < cfg.schemes.size(); ++s) {
        const LaserPair& p = cfg.schemes[s];
        if (require_strengths && (p.g13 == 0.0 || p.g23 == 0.0))
            throw InvalidScheme(scheme_name(s) + ": both laser strengths must be nonzero");
        if (!std::isfinite(std::abs(p.g13)) || !std::isfinite(std::abs(p.g23)))
            throw InvalidScheme(scheme_name(s) + ": non-finite laser strength");
        if (p.detuning == 0.0 || !std::isfinite(p.detuning))
            throw InvalidScheme(scheme_name(s) + ": detuning must be nonzero and finite");
        const auto m = static_cast<std::size_t>(cfg.space.mode_count);
        if (p.eta13.size() != m || p.eta23.size() != m)
            throw InvalidScheme(scheme_name(s) + ": Lamb-Dicke vectors need "
                                + std::to_string(m) + " components");
    }

    const double scale = std::abs(reference_detuning(cfg));
    for (std::size_t a = 0; a < cfg.schemes.size(); ++a)
        for (std::size_t b = a + 1; b < cfg.schemes.size(); ++b)
            if (std::abs(cfg.schemes[a].detuning - cfg.schemes[b].detuning)
                < kResonanceRelative * scale)
                throw DuplicateDetuning(scheme_name(a) + " and " + scheme_name(b)
                                        + " share the same detuning");
}

} // namespace

std::vector<std::string> config_warnings(const RamanConfig& cfg)
{
    std::vector<std::string> out;
    for (std::size_t s = 0; s < cfg.schemes.size(); ++s) {
        const LaserPair& p = cfg.schemes[s];
        const double strongest = std::max({std::abs(p.g13), std::abs(p.g23), cfg.trap_freq});
        if (std::abs(p.detuning) < 10.0 * strongest) {
            std::ostringstream os;
            os << scheme_name(s) << ": |detuning| = " << std::abs(p.detuning)
               << " is below 10 x max(|g|, nu) = " << 10.0 * strongest
               << "; the high-detuning expansion may be poor";
            out.push_back(os.str());
        }
    }
    return out;
}

double coupling_scale(const RamanConfig& cfg)
{
    double g = cfg.trap_freq;
    for (const LaserPair& p : cfg.schemes)
        g = std::max({g, std::abs(p.g13), std::abs(p.g23)});
    return g;
}

double reference_detuning(const RamanConfig& cfg)
{
    double ref = 0.0;
    for (const LaserPair& p : cfg.schemes)
        if (std::abs(p.detuning) > std::abs(ref))
            ref = p.detuning;
    return ref;
}

double perturbative_parameter(const RamanConfig& cfg)
{
    return coupling_scale(cfg) / reference_detuning(cfg);
}

Operator free_hamiltonian(const RamanConfig& cfg)
{
    const SpaceSpec& s = cfg.space;
    return sigma(s, 1, 1) * cplx(cfg.omega1) + sigma(s, 2, 2) * cplx(cfg.omega2)
           + sigma(s, 3, 3) * cplx(cfg.omega3);
}

Operator trap_hamiltonian(const RamanConfig& cfg)
{
    return total_number(cfg.space) * cplx(cfg.trap_freq);
}

HamiltonianOrders build_interaction_orders(const RamanConfig& cfg)
{
    validate_config(cfg);
    const SpaceSpec& space = cfg.space;
    const std::size_t n = cfg.schemes.size();
    const double g = coupling_scale(cfg);

    std::vector<std::string> labels;
    std::vector<double> values;
    for (std::size_t s = 0; s < n; ++s) {
        labels.push_back("Delta" + std::to_string(s + 1));
        values.push_back(cfg.schemes[s].detuning);
    }
    TrigPolyOp h1(FreqBasis(std::move(labels), std::move(values)), space);

    h1.add_term(FreqKey::zero(n), trap_hamiltonian(cfg) * cplx(1.0 / g));
    for (std::size_t s = 0; s < n; ++s) {
        const Operator x = scheme_lowering(cfg.schemes[s], space) * cplx(1.0 / g);
        h1.add_term(FreqKey::unit(n, s, -1), x);
        h1.add_term(FreqKey::unit(n, s, +1), x.adjoint());
    }
    h1.canonicalize();

    return HamiltonianOrders{.lambda = perturbative_parameter(cfg),
                             .frequency_unit = reference_detuning(cfg),
                             .orders = {std::move(h1)},
                             .h0 = free_hamiltonian(cfg)};
}

InteractionHamiltonian::InteractionHamiltonian(const RamanConfig& cfg)
    : static_part_((validate_structure(cfg, false), trap_hamiltonian(cfg)))
{
    for (const LaserPair& p : cfg.schemes) {
        lowering_.push_back(scheme_lowering(p, cfg.space).matrix());
        detunings_.push_back(p.detuning);
    }
}

Operator InteractionHamiltonian::operator()(double t) const
{
    Matrix h = static_part_.matrix();
    for (std::size_t s = 0; s < lowering_.size(); ++s) {
        const cplx phase = std::exp(-I_UNIT * (detunings_[s] * t));
        h += phase * lowering_[s];
        h += std::conj(phase) * lowering_[s].adjoint();
    }
    return {static_part_.space(), std::move(h)};
}

SchroedingerHamiltonian::SchroedingerHamiltonian(const RamanConfig& cfg)
    : static_part_((validate_structure(cfg, false), free_hamiltonian(cfg) + trap_hamiltonian(cfg)))
{
    const SpaceSpec& space = cfg.space;
    for (const LaserPair& p : cfg.schemes) {
        legs_.push_back((sigma(space, 1, 3) * displacement_phase(p.eta13, space) * p.g13).matrix());
        frequencies_.push_back(cfg.omega3 - cfg.omega1 - p.detuning);
        legs_.push_back((sigma(space, 2, 3) * displacement_phase(p.eta23, space) * p.g23).matrix());
        frequencies_.push_back(cfg.omega3 - cfg.omega2 - p.detuning);
    }
}

Operator SchroedingerHamiltonian::operator()(double t) const
{
    Matrix h = static_part_.matrix();
    for (std::size_t k = 0; k < legs_.size(); ++k) {
        const cplx phase = std::exp(I_UNIT * (frequencies_[k] * t));
        h += phase * legs_[k];
        h += std::conj(phase) * legs_[k].adjoint();
    }
    return {static_part_.space(), std::move(h)};
}

Operator interaction_hamiltonian(const RamanConfig& cfg, double t)
{
    return InteractionHamiltonian(cfg)(t);
}

Operator schroedinger_hamiltonian(const RamanConfig& cfg, double t)
{
    return SchroedingerHamiltonian(cfg)(t);
}

EffectiveModel analytic_effective_model(const RamanConfig& cfg)
{
    EffectiveModel m;
    for (const LaserPair& p : cfg.schemes) {
        const double a13 = std::norm(p.g13);
        const double a23 = std::norm(p.g23);
        m.shift1 += -a13 / p.detuning;
        m.shift2 += -a23 / p.detuning;
        m.shift3 += (a13 + a23) / p.detuning;

        EffectiveCoupling c;
        c.g12 = -p.g13 * std::conj(p.g23) / p.detuning;
        c.eta12.resize(p.eta13.size());
        for (std::size_t i = 0; i < p.eta13.size(); ++i)
            c.eta12[i] = p.eta13[i] - p.eta23.at(i);
        c.omega12 = cfg.omega2 - cfg.omega1;
        m.couplings.push_back(std::move(c));
    }
    return m;
}

Operator effective_c2_operator(const EffectiveModel& model, const RamanConfig& cfg)
{
    const SpaceSpec& space = cfg.space;
    if (space.atomic_dim != 3)
        throw SpaceMismatch("effective_c2_operator needs atomic_dim = 3");
    Operator c2 = sigma(space, 1, 1) * cplx(model.shift1) + sigma(space, 2, 2) * cplx(model.shift2)
                  + sigma(space, 3, 3) * cplx(model.shift3);
    const Operator s12 = sigma(space, 1, 2);
    for (const EffectiveCoupling& c : model.couplings) {
        if (static_cast<int>(c.eta12.size()) != space.mode_count)
            throw SpaceMismatch("effective coupling has a Lamb-Dicke vector of the wrong size");
        const Operator term = (s12 * displacement_phase(c.eta12, space)) * c.g12;
        c2 += term + term.adjoint();
    }
    return c2;
}

EffectiveModel combine_models(const std::vector<EffectiveModel>& models)
{
    EffectiveModel out;
    for (const EffectiveModel& m : models) {
        out.shift1 += m.shift1;
        out.shift2 += m.shift2;
        out.shift3 += m.shift3;
        out.couplings.insert(out.couplings.end(), m.couplings.begin(), m.couplings.end());
    }
    return out;
}

double max_frequency(const RamanConfig& cfg)
{
    double w = std::max({cfg.trap_freq, std::abs(cfg.omega1 - cfg.omega2),
                         std::abs(cfg.omega1 - cfg.omega3), std::abs(cfg.omega2 - cfg.omega3)});
    for (const LaserPair& p : cfg.schemes)
        w = std::max(w, std::abs(p.detuning));
    return w;
}

} // namespace ramanpt
