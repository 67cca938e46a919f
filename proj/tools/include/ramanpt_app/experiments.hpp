#pragma once

// Experiment drivers shared by the command-line tool and the test suites.

#include <optional>
#include <span>
#include <vector>

#include <ramanpt/perturb.hpp>
#include <ramanpt/propagate.hpp>
#include <ramanpt/raman.hpp>

namespace ramanpt::app {

/// Exact Schroedinger-picture evolutors U0(t) T(t) at the sample times, with T
/// stepped in the interaction picture by midpoint exponentials of step <= dt.
/// Single-scheme configs over more than a few detuning periods reuse the
/// one-period evolutor. With `interior_only` only the interior columns are
/// propagated (ignored when the periodic shortcut is taken).
std::vector<Operator> exact_evolutors(const RamanConfig& cfg, std::span<const double> samples,
                                      double dt, int n_phys, bool interior_only = false);

/// Same, with Richardson extrapolation over steps dt and dt/2.
std::vector<Operator> exact_evolutors_extrapolated(const RamanConfig& cfg,
                                                   std::span<const double> samples, double dt,
                                                   int n_phys, bool interior_only = false);

struct CompareRow
{
    double t = 0.0;
    double fid_exact_vs_dressed = 0.0;
    double fid_exact_vs_effective = 0.0;
    double p1 = 0.0, p2 = 0.0, p3 = 0.0;
    double p1_eff = 0.0, p2_eff = 0.0;
};

/// Exact vs order-2 dressed vs order-2 effective evolution from |1, n = 0>.
std::vector<CompareRow> compare_trajectories(const RamanConfig& cfg, std::span<const double> samples,
                                             double dt, int n_phys);

/// Interior distance between the exact and the order-2 evolutor at
/// |Delta_ref| t = 20 after rescaling the detunings to `lambda`. The step is
/// `dimensionless_step / |Delta_ref|`; the exact side is Richardson-extrapolated.
double sweep_error(const RamanConfig& cfg, double lambda, double dimensionless_step, int n_phys);

/// Least-squares slope of log(y) against log(x); empty for fewer than two points.
std::optional<double> loglog_slope(std::span<const double> x, std::span<const double> y);

} // namespace ramanpt::app
