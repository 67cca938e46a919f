#pragma once

#include <vector>

#include <ramanpt/raman.hpp>

namespace fixtures {

/// Desk-scale single-scheme setup: 3 levels, one mode, n_max 20, buffer 10.
inline ramanpt::RamanConfig single_scheme(double detuning = 100.0, double eta13 = 0.1,
                                          double eta23 = -0.1)
{
    ramanpt::RamanConfig cfg;
    cfg.omega1 = 0.0;
    cfg.omega2 = 3.0;
    cfg.omega3 = 50.0;
    cfg.trap_freq = 1.0;
    cfg.space = ramanpt::SpaceSpec{.atomic_dim = 3, .mode_count = 1, .fock_cutoff = 20, .buffer = 10};
    cfg.schemes.push_back(ramanpt::LaserPair{.g13 = 1.0, .g23 = 1.0, .eta13 = {eta13}, .eta23 = {eta23},
                                             .detuning = detuning});
    return cfg;
}

/// Two schemes with distinct detunings and complex strengths.
inline ramanpt::RamanConfig double_scheme()
{
    ramanpt::RamanConfig cfg = single_scheme();
    cfg.schemes.front().g13 = {0.8, 0.3};
    cfg.schemes.push_back(ramanpt::LaserPair{.g13 = {0.5, -0.2}, .g23 = {0.0, 0.9}, .eta13 = {0.05},
                                             .eta23 = {0.15}, .detuning = -140.0});
    return cfg;
}

inline constexpr int kPhys = 10;

} // namespace fixtures
