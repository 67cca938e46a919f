#include <doctest.h>

#include <cmath>
#include <set>

#include <ramanpt/errors.hpp>
#include <ramanpt/perturb.hpp>
#include <ramanpt/raman.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace ramanpt;

namespace {

const SpaceSpec kNoModes{.atomic_dim = 3, .mode_count = 0, .fock_cutoff = 1, .buffer = 0};

RamanConfig no_modes(cplx g13, cplx g23, double detuning)
{
    RamanConfig cfg;
    cfg.omega1 = 0.0;
    cfg.omega2 = 3.0;
    cfg.omega3 = 50.0;
    cfg.trap_freq = 1.0;
    cfg.space = kNoModes;
    cfg.schemes.push_back(LaserPair{.g13 = g13, .g23 = g23, .eta13 = {}, .eta23 = {}, .detuning = detuning});
    return cfg;
}

Operator physical_c2(const RamanConfig& cfg)
{
    const PerturbativeDecomposition d = compute_cz_orders(build_interaction_orders(cfg), 2);
    return d.c()[1] * (d.lambda() * d.lambda());
}

bool bit_equal(const Operator& a, const Operator& b)
{
    return a.space() == b.space() && a.matrix() == b.matrix();
}

} // namespace

TEST_SUITE("raman")
{
    TEST_CASE("perturbative parameter")
    {
        RamanConfig cfg = no_modes(2.0, 1.0, 200.0);
        CHECK(coupling_scale(cfg) == 2.0);
        CHECK(perturbative_parameter(cfg) == doctest::Approx(0.01).epsilon(1e-15));
        cfg.trap_freq = 3.0;
        CHECK(perturbative_parameter(cfg) == doctest::Approx(0.015).epsilon(1e-15));

        const RamanConfig two = fixtures::double_scheme();
        CHECK(reference_detuning(two) == -140.0);
        CHECK(build_interaction_orders(two).lambda == doctest::Approx(1.0 / -140.0));
    }

    TEST_CASE("single scheme without modes: four operator terms")
    {
        const RamanConfig cfg = no_modes(1.0, cplx(0.0, 0.5), 100.0);
        const HamiltonianOrders h = build_interaction_orders(cfg);
        REQUIRE(h.orders.size() == 1);
        const TrigPolyOp& h1 = h.orders.front();
        CHECK(h1.size() == 2);
        CHECK_FALSE(h1.has_zero_frequency());
        int nonzero = 0;
        for (const auto& [k, a] : h1.terms())
            nonzero += static_cast<int>((a.matrix().array().abs() > 0.0).count());
        CHECK(nonzero == 4);
        const Operator lowering = h1.coefficient(FreqKey{{-1}});
        CHECK(lowering.matrix()(0, 2) == cplx(1.0));
        CHECK(lowering.matrix()(1, 2) == cplx(0.0, 0.5));
        CHECK((h1.coefficient(FreqKey{{1}}) - lowering.adjoint()).norm() == 0.0);
        CHECK(h1.is_hermitian_valued(0.0));
    }

    TEST_CASE("two schemes: keys zero, +-D, +-D'")
    {
        const HamiltonianOrders h = build_interaction_orders(fixtures::double_scheme());
        std::set<FreqKey> keys;
        for (const auto& [k, a] : h.orders.front().terms())
            keys.insert(k);
        const std::set<FreqKey> expected{FreqKey{{0, 0}}, FreqKey{{1, 0}}, FreqKey{{-1, 0}},
                                         FreqKey{{0, 1}}, FreqKey{{0, -1}}};
        CHECK(keys == expected);
    }

    TEST_CASE("mean of H1 is the trap term")
    {
        const RamanConfig cfg = fixtures::double_scheme();
        const HamiltonianOrders h = build_interaction_orders(cfg);
        const double g = coupling_scale(cfg);
        CHECK((tp_mean(h.orders.front()) - total_number(cfg.space) * (cfg.trap_freq / g)).norm() == 0.0);
        // lambda C1 = H_B
        const PerturbativeDecomposition d = compute_cz_orders(h, 1);
        CHECK((d.c()[0] * d.lambda() - trap_hamiltonian(cfg)).norm()
              <= 1e-14 * trap_hamiltonian(cfg).norm());
    }

    TEST_CASE("interaction picture reproduces the Schroedinger Hamiltonian")
    {
        for (const RamanConfig& cfg : {fixtures::single_scheme(), fixtures::double_scheme()}) {
            const HamiltonianOrders h = build_interaction_orders(cfg);
            const Matrix h0 = free_hamiltonian(cfg).matrix();
            const double t = 1.3 / 100.0;
            const Matrix u = oracle::exp_minus_i_hermitian(h0, t);
            const Matrix lhs = u.adjoint() * (schroedinger_hamiltonian(cfg, t).matrix() - h0) * u;
            const Matrix rhs = tp_eval(h.orders.front(), t).matrix() * (h.lambda * h.frequency_unit);
            CHECK((lhs - rhs).norm() <= 1e-12 * rhs.norm());
            CHECK((interaction_hamiltonian(cfg, t).matrix() - rhs).norm() <= 1e-12 * rhs.norm());
        }
    }

    TEST_CASE("Schroedinger Hamiltonian: Hermitian and free limit")
    {
        const RamanConfig cfg = fixtures::double_scheme();
        for (double t : {0.0, 0.37 / cfg.trap_freq, 5.0 / 100.0}) {
            const Operator h = schroedinger_hamiltonian(cfg, t);
            CHECK((h - h.adjoint()).norm() <= 1e-14 * h.norm());
        }

        RamanConfig dark = cfg;
        for (LaserPair& p : dark.schemes)
            p.g13 = p.g23 = 0.0;
        const Operator h = schroedinger_hamiltonian(dark, 0.77);
        CHECK((h - (free_hamiltonian(dark) + trap_hamiltonian(dark))).norm() == 0.0);
        CHECK(h.matrix().isDiagonal(0.0));
        CHECK_THROWS_AS(build_interaction_orders(dark), InvalidScheme);
    }

    TEST_CASE("analytic model: single scheme values")
    {
        const RamanConfig cfg = fixtures::single_scheme();
        const EffectiveModel m = analytic_effective_model(cfg);
        CHECK(m.shift1 == doctest::Approx(-0.01).epsilon(1e-15));
        CHECK(m.shift2 == doctest::Approx(-0.01).epsilon(1e-15));
        CHECK(m.shift3 == doctest::Approx(0.02).epsilon(1e-15));
        REQUIRE(m.couplings.size() == 1);
        // Two-photon coupling -g13 g32 / detuning, |g12| = 0.01.
        CHECK(std::abs(m.couplings[0].g12 - cplx(-0.01)) < 1e-17);
        CHECK(m.couplings[0].eta12 == std::vector<double>{0.2});
        CHECK(m.couplings[0].omega12 == 3.0);
    }

    TEST_CASE("analytic model: shift structure")
    {
        const RamanConfig cfg = fixtures::double_scheme();
        const EffectiveModel m = analytic_effective_model(cfg);
        double expected3 = 0.0;
        for (const LaserPair& p : cfg.schemes)
            expected3 += (std::norm(p.g13) + std::norm(p.g23)) / p.detuning;
        CHECK(m.shift3 == doctest::Approx(expected3).epsilon(1e-15));
        CHECK(m.shift3 == doctest::Approx(-(m.shift1 + m.shift2)).epsilon(1e-14));
        for (std::size_t s = 0; s < cfg.schemes.size(); ++s) {
            const LaserPair& p = cfg.schemes[s];
            CHECK(m.couplings[s].g12 == -p.g13 * std::conj(p.g23) / p.detuning);
            CHECK(m.couplings[s].omega12 == cfg.omega2 - cfg.omega1);
        }
    }

    TEST_CASE("analytic model: opposite detunings cancel the shifts")
    {
        RamanConfig cfg = fixtures::single_scheme();
        cfg.schemes.push_back(cfg.schemes.front());
        cfg.schemes.back().detuning = -100.0;
        const EffectiveModel m = analytic_effective_model(cfg);
        CHECK(m.shift1 == 0.0);
        CHECK(m.shift2 == 0.0);
        CHECK(m.couplings[1].g12 == -m.couplings[0].g12);
    }

    TEST_CASE("co-propagating beams decouple the motion")
    {
        const RamanConfig cfg = fixtures::single_scheme(100.0, 0.1, 0.1);
        const EffectiveModel m = analytic_effective_model(cfg);
        CHECK(m.couplings[0].eta12 == std::vector<double>{0.0});
    }

    TEST_CASE("effective operator without modes")
    {
        const RamanConfig cfg = no_modes(cplx(1.0, 0.5), cplx(0.7, -0.2), 80.0);
        const EffectiveModel m = analytic_effective_model(cfg);
        const Operator c2 = effective_c2_operator(m, cfg);
        const cplx g12 = m.couplings[0].g12;
        Matrix expected = Matrix::Zero(3, 3);
        expected(0, 0) = m.shift1;
        expected(1, 1) = m.shift2;
        expected(2, 2) = m.shift3;
        expected(0, 1) = g12;
        expected(1, 0) = std::conj(g12);
        CHECK((c2.matrix() - expected).norm() == 0.0);
        CHECK(c2.is_hermitian(0.0));
    }

    TEST_CASE("effective operator: zero coupling is diagonal")
    {
        const RamanConfig cfg = fixtures::single_scheme();
        EffectiveModel m = analytic_effective_model(cfg);
        m.couplings[0].g12 = 0.0;
        CHECK(effective_c2_operator(m, cfg).matrix().isDiagonal(0.0));
        m.couplings[0].eta12 = {0.1, 0.2};
        CHECK_THROWS_AS(effective_c2_operator(m, cfg), SpaceMismatch);
    }

    TEST_CASE("effective operator commutes with the level projectors")
    {
        const RamanConfig cfg = fixtures::double_scheme();
        const Operator c2 = effective_c2_operator(analytic_effective_model(cfg), cfg);
        const Operator p12 = sigma(cfg.space, 1, 1) + sigma(cfg.space, 2, 2);
        CHECK(commutator(c2, p12).norm() == 0.0);
        CHECK(commutator(c2, sigma(cfg.space, 3, 3)).norm() == 0.0);
    }

    TEST_CASE("additivity over schemes")
    {
        const RamanConfig cfg = fixtures::double_scheme();
        std::vector<EffectiveModel> singles;
        Operator sum = Operator::zero(cfg.space);
        for (const LaserPair& p : cfg.schemes) {
            RamanConfig one = cfg;
            one.schemes = {p};
            singles.push_back(analytic_effective_model(one));
            sum += effective_c2_operator(singles.back(), one);
        }
        const EffectiveModel both = analytic_effective_model(cfg);
        CHECK(both == combine_models(singles));
        CHECK(bit_equal(effective_c2_operator(both, cfg), sum));
    }

    TEST_CASE("single-scheme special case of a two-scheme build")
    {
        const RamanConfig one = fixtures::single_scheme();
        RamanConfig two = fixtures::double_scheme();
        two.schemes = {one.schemes.front(), two.schemes.back()};
        two.schemes.back().g13 = 0.0;
        two.schemes.back().g23 = 0.0;
        const EffectiveModel m1 = analytic_effective_model(one);
        const EffectiveModel m2 = analytic_effective_model(two);
        CHECK(m2.shift1 == m1.shift1);
        CHECK(m2.shift2 == m1.shift2);
        CHECK(m2.shift3 == m1.shift3);
        CHECK(m2.couplings.front() == m1.couplings.front());
        CHECK(bit_equal(effective_c2_operator(m2, two), effective_c2_operator(m1, one)));
    }

    TEST_CASE("engine agrees with the analytic operator")
    {
        for (double eta : {0.0, 0.1, 0.2}) {
            const RamanConfig cfg = fixtures::single_scheme(100.0, eta, -eta);
            const Operator analytic = effective_c2_operator(analytic_effective_model(cfg), cfg);
            CHECK(interior_distance(physical_c2(cfg), analytic, fixtures::kPhys) <= 1e-9);
        }
        const RamanConfig two = fixtures::double_scheme();
        const Operator analytic = effective_c2_operator(analytic_effective_model(two), two);
        CHECK(interior_distance(physical_c2(two), analytic, fixtures::kPhys) <= 1e-9);
    }

    TEST_CASE("validation")
    {
        RamanConfig cfg = fixtures::double_scheme();
        cfg.schemes.back().detuning = cfg.schemes.front().detuning;
        CHECK_THROWS_AS(validate_config(cfg), DuplicateDetuning);
        CHECK_THROWS_AS(build_interaction_orders(cfg), DuplicateDetuning);

        cfg = fixtures::single_scheme();
        cfg.schemes.front().g23 = 0.0;
        CHECK_THROWS_AS(build_interaction_orders(cfg), InvalidScheme);

        cfg = fixtures::single_scheme();
        cfg.schemes.front().detuning = 0.0;
        CHECK_THROWS_AS(validate_config(cfg), InvalidScheme);

        cfg = fixtures::single_scheme();
        cfg.trap_freq = 0.0;
        CHECK_THROWS_AS(validate_config(cfg), InvalidScheme);

        cfg = fixtures::single_scheme();
        cfg.omega2 = cfg.omega1;
        CHECK_THROWS_AS(validate_config(cfg), InvalidScheme);

        cfg = fixtures::single_scheme();
        cfg.schemes.front().eta13 = {0.1, 0.2};
        CHECK_THROWS_AS(validate_config(cfg), InvalidScheme);

        cfg = fixtures::single_scheme();
        cfg.space.atomic_dim = 4;
        CHECK_THROWS_AS(validate_config(cfg), InvalidScheme);

        cfg = fixtures::single_scheme();
        cfg.schemes.clear();
        CHECK_THROWS_AS(validate_config(cfg), InvalidScheme);
    }

    TEST_CASE("high-detuning warning")
    {
        CHECK(config_warnings(fixtures::single_scheme()).empty());
        const auto w = config_warnings(fixtures::single_scheme(5.0));
        REQUIRE(w.size() == 1);
        CHECK(w.front().find("scheme 1") != std::string::npos);
    }

    TEST_CASE("fastest frequency")
    {
        CHECK(max_frequency(fixtures::single_scheme()) == 100.0);
        CHECK(max_frequency(fixtures::single_scheme(20.0)) == 50.0);
        CHECK(max_frequency(fixtures::double_scheme()) == 140.0);
    }
}
