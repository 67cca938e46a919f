#include "ramanpt/propagate.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

namespace ramanpt {

namespace {

// block <- exp(-i H h) block by a Taylor series applied to the block. Steps
// with ||H h||_1 > 1/2 are split into equal pieces first.
void apply_step_exponential(const Matrix& hamiltonian, double h, Matrix& block, Matrix& work)
{
    const double rho = hamiltonian.cwiseAbs().colwise().sum().maxCoeff() * std::abs(h);
    if (!std::isfinite(rho))
        throw NumericError("non-finite Hamiltonian during propagation");
    const int pieces = rho > 0.5 ? static_cast<int>(std::ceil(rho / 0.5)) : 1;
    const double sub = h / pieces;
    Matrix term(block.rows(), block.cols());
    for (int p = 0; p < pieces; ++p) {
        term = block;
        const double scale = block.norm();
        for (int k = 1; k <= 40; ++k) {
            work.noalias() = hamiltonian * term;
            term = work * (-I_UNIT * (sub / k));
            block += term;
            if (term.norm() <= 1e-17 * scale)
                break;
        }
    }
}

// Advances `u` from t0 to t1 in equal midpoint substeps no longer than dt.
void step_interval(const HamiltonianFn& h, double t0, double t1, double dt, Matrix& u)
{
    const double length = t1 - t0;
    if (length <= 0.0)
        return;
    const auto n = static_cast<long>(std::ceil(length / dt * (1.0 - 1e-12)));
    const double step = length / static_cast<double>(n);
    Matrix work(u.rows(), u.cols());
    for (long k = 0; k < n; ++k) {
        const double mid = t0 + (static_cast<double>(k) + 0.5) * step;
        apply_step_exponential(h(mid).matrix(), step, u, work);
    }
}

Matrix matrix_power(const Matrix& m, long n)
{
    Matrix result = Matrix::Identity(m.rows(), m.cols());
    Matrix base = m;
    while (n > 0) {
        if (n & 1)
            result = result * base;
        n >>= 1;
        if (n > 0)
            base = base * base;
    }
    return result;
}

} // namespace

PropagationRun exact_propagate(const HamiltonianFn& h, double t_final, double dt,
                               std::span<const double> samples,
                               const PropagationSettings& settings)
{
    if (!(dt > 0.0))
        throw StepTooLarge("time step must be positive");
    if (!(settings.max_frequency > 0.0))
        throw StepTooLarge("max_frequency must be declared and positive");
    if (dt > kStepFraction / settings.max_frequency * (1.0 + 1e-12))
        throw StepTooLarge("dt = " + std::to_string(dt) + " exceeds " + std::to_string(kStepFraction)
                           + " / max frequency = "
                           + std::to_string(kStepFraction / settings.max_frequency));
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (samples[i] < 0.0 || samples[i] > t_final)
            throw InvalidState("sample time outside [0, t_final]");
        if (i > 0 && samples[i] < samples[i - 1])
            throw InvalidState("sample times must be ascending");
    }

    const Operator h0 = h(0.0);
    const SpaceSpec space = h0.space();
    const Index dim = h0.dim();

    PropagationRun run;
    run.times.assign(samples.begin(), samples.end());
    run.step = dt;
    run.space = space;
    run.n_phys = settings.n_phys;

    if (!settings.period) {
        std::vector<Index> cols;
        if (settings.interior_only)
            cols = interior_indices(space, settings.n_phys);
        else
            for (Index i = 0; i < dim; ++i)
                cols.push_back(i);
        Matrix u = Matrix::Zero(dim, static_cast<Index>(cols.size()));
        for (std::size_t c = 0; c < cols.size(); ++c)
            u(cols[c], static_cast<Index>(c)) = 1.0;
        double t = 0.0;
        for (double s : samples) {
            step_interval(h, t, s, dt, u);
            t = s;
            Matrix full = Matrix::Zero(dim, dim);
            for (std::size_t c = 0; c < cols.size(); ++c)
                full.col(cols[c]) = u.col(static_cast<Index>(c));
            run.unitaries.emplace_back(space, std::move(full));
        }
        return run;
    }

    const double period = *settings.period;
    if (!(period > 0.0))
        throw InvalidState("period must be positive");

    // Split every sample into whole periods and an offset within one period.
    std::vector<long> whole(samples.size());
    std::vector<double> offset(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        double n = std::floor(samples[i] / period);
        double s = samples[i] - n * period;
        if (s >= period * (1.0 - 1e-12)) {
            n += 1.0;
            s = 0.0;
        }
        whole[i] = static_cast<long>(n);
        offset[i] = std::max(0.0, s);
    }

    std::vector<double> stops(offset.begin(), offset.end());
    stops.push_back(period);
    std::sort(stops.begin(), stops.end());
    stops.erase(std::unique(stops.begin(), stops.end()), stops.end());

    std::map<double, Matrix> within;
    Matrix u = Matrix::Identity(dim, dim);
    double t = 0.0;
    for (double s : stops) {
        step_interval(h, t, s, dt, u);
        t = s;
        within.emplace(s, u);
    }
    const Matrix& monodromy = within.at(period);

    // Powers are built incrementally in order of the period count.
    std::vector<std::size_t> order(samples.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return whole[a] < whole[b]; });

    std::vector<Matrix> results(samples.size());
    std::map<long, Matrix> jump_cache;
    long current = 0;
    Matrix power = Matrix::Identity(dim, dim);
    for (std::size_t i : order) {
        const long jump = whole[i] - current;
        if (jump > 0) {
            auto it = jump_cache.find(jump);
            if (it == jump_cache.end())
                it = jump_cache.emplace(jump, matrix_power(monodromy, jump)).first;
            power = it->second * power;
            current = whole[i];
        }
        results[i] = within.at(offset[i]) * power;
    }
    for (auto& m : results)
        run.unitaries.emplace_back(space, std::move(m));
    return run;
}

PropagationRun richardson_combine(const PropagationRun& coarse, const PropagationRun& fine)
{
    if (coarse.times != fine.times || !(coarse.space == fine.space))
        throw SpaceMismatch("richardson_combine: runs sample different times or spaces");
    PropagationRun out = fine;
    for (std::size_t i = 0; i < out.unitaries.size(); ++i)
        out.unitaries[i] = (fine.unitaries[i] * 4.0 - coarse.unitaries[i]) * (1.0 / 3.0);
    return out;
}

double fidelity(const Operator& u, const Operator& v, int n_phys)
{
    require_same_space(u.space(), v.space(), "fidelity");
    const auto idx = interior_indices(u.space(), n_phys);
    cplx trace = 0.0;
    for (Index i : idx)
        trace += u.matrix().col(i).dot(v.matrix().col(i)); // conj(u) . v
    return std::abs(trace) / static_cast<double>(idx.size());
}

std::vector<double> populations(std::span<const Operator> evolutors, const Vector& initial_state,
                                int level)
{
    if (std::abs(initial_state.norm() - 1.0) > 1e-10)
        throw InvalidState("initial state is not normalized (norm "
                           + std::to_string(initial_state.norm()) + ")");
    std::vector<double> out;
    out.reserve(evolutors.size());
    for (const Operator& u : evolutors) {
        const SpaceSpec& space = u.space();
        if (level < 1 || level > space.atomic_dim)
            throw InvalidIndex("level " + std::to_string(level) + " out of range");
        if (initial_state.size() != u.dim())
            throw SpaceMismatch("initial state dimension does not match the evolutor");
        const Vector psi = u.matrix() * initial_state;
        const Index block = space.mode_dimension();
        out.push_back(psi.segment((level - 1) * block, block).squaredNorm());
    }
    return out;
}

std::vector<double> populations(const PropagationRun& run, const Vector& initial_state, int level)
{
    return populations(std::span<const Operator>(run.unitaries), initial_state, level);
}

Vector basis_state(const SpaceSpec& space, int level, std::span<const int> occupations)
{
    Vector psi = Vector::Zero(space.dimension());
    psi(basis_index(space, level, occupations)) = 1.0;
    return psi;
}

} // namespace ramanpt
