#include "ramanpt/hilbert.hpp"

#include <cmath>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

namespace ramanpt {

namespace {

Matrix kron(const Matrix& a, const Matrix& b)
{
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Index int_pow(Index base, int exp)
{
    Index r = 1;
    for (int i = 0; i < exp; ++i)
        r *= base;
    return r;
}

// identity(atom) (x) I ... (x) single (x) ... I, with `single` on `mode`
Matrix embed_mode(const SpaceSpec& space, int mode, const Matrix& single)
{
    const Index L = space.levels_per_mode();
    const Index before = space.atomic_dim * int_pow(L, mode);
    const Index after = int_pow(L, space.mode_count - 1 - mode);
    Matrix m = kron(Matrix::Identity(before, before), single);
    return kron(m, Matrix::Identity(after, after));
}

Matrix ladder(int levels)
{
    Matrix a = Matrix::Zero(levels, levels);
    for (int n = 1; n < levels; ++n)
        a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return a;
}

void check_mode(const SpaceSpec& space, int mode)
{
    if (mode < 0 || mode >= space.mode_count)
        throw InvalidIndex("mode index " + std::to_string(mode) + " out of range [0, "
                           + std::to_string(space.mode_count) + ")");
}

} // namespace

Index SpaceSpec::mode_dimension() const noexcept
{
    return int_pow(levels_per_mode(), mode_count);
}

void SpaceSpec::validate() const
{
    if (atomic_dim < 1)
        throw InvalidIndex("atomic_dim must be >= 1");
    if (mode_count < 0)
        throw InvalidIndex("mode_count must be >= 0");
    if (fock_cutoff < 1 || buffer < 0)
        throw InvalidIndex("fock_cutoff must be >= 1 and buffer >= 0");
}

Index basis_index(const SpaceSpec& space, int level, std::span<const int> occupations)
{
    if (level < 1 || level > space.atomic_dim)
        throw InvalidIndex("atomic level " + std::to_string(level) + " out of range");
    if (static_cast<int>(occupations.size()) != space.mode_count)
        throw InvalidIndex("occupation vector length does not match mode count");
    Index idx = level - 1;
    for (int n : occupations) {
        if (n < 0 || n >= space.levels_per_mode())
            throw InvalidIndex("Fock occupation " + std::to_string(n) + " out of range");
        idx = idx * space.levels_per_mode() + n;
    }
    return idx;
}

// ---------------------------------------------------------------------------

Operator::Operator(SpaceSpec space, Matrix matrix)
    : space_(space), matrix_(std::move(matrix))
{
    if (matrix_.rows() != matrix_.cols() || matrix_.rows() != space_.dimension())
        throw SpaceMismatch("operator matrix is " + std::to_string(matrix_.rows()) + "x"
                            + std::to_string(matrix_.cols()) + ", space dimension is "
                            + std::to_string(space_.dimension()));
}

Operator Operator::zero(const SpaceSpec& space)
{
    return {space, Matrix::Zero(space.dimension(), space.dimension())};
}

Operator Operator::identity(const SpaceSpec& space)
{
    return {space, Matrix::Identity(space.dimension(), space.dimension())};
}

Operator Operator::adjoint() const
{
    return {space_, matrix_.adjoint()};
}

bool Operator::is_hermitian(double tol) const
{
    return (matrix_ - matrix_.adjoint()).norm() <= tol;
}

bool Operator::is_unitary(double tol) const
{
    return (matrix_.adjoint() * matrix_ - Matrix::Identity(dim(), dim())).norm() <= tol;
}

void require_same_space(const SpaceSpec& a, const SpaceSpec& b, const char* where)
{
    if (!(a == b))
        throw SpaceMismatch(std::string(where) + ": operands live on different spaces");
}

Operator& Operator::operator+=(const Operator& rhs)
{
    require_same_space(space_, rhs.space_, "operator+");
    matrix_ += rhs.matrix_;
    return *this;
}

Operator& Operator::operator-=(const Operator& rhs)
{
    require_same_space(space_, rhs.space_, "operator-");
    matrix_ -= rhs.matrix_;
    return *this;
}

Operator& Operator::operator*=(cplx s)
{
    matrix_ *= s;
    return *this;
}

Operator operator*(const Operator& lhs, const Operator& rhs)
{
    require_same_space(lhs.space_, rhs.space_, "operator*");
    return {lhs.space_, lhs.matrix_ * rhs.matrix_};
}

Operator commutator(const Operator& a, const Operator& b)
{
    require_same_space(a.space(), b.space(), "commutator");
    Matrix ab = a.matrix() * b.matrix();
    ab.noalias() -= b.matrix() * a.matrix();
    return {a.space(), std::move(ab)};
}

// ---------------------------------------------------------------------------

Operator build_basic_operator(const BasicKind& kind, const SpaceSpec& space)
{
    space.validate();
    const Index dim = space.dimension();
    const int L = space.levels_per_mode();

    struct Visitor
    {
        const SpaceSpec& space;
        Index dim;
        int L;

        Matrix operator()(const op::Sigma& s) const
        {
            if (s.l < 1 || s.l > space.atomic_dim || s.m < 1 || s.m > space.atomic_dim)
                throw InvalidIndex("sigma(" + std::to_string(s.l) + "," + std::to_string(s.m)
                                   + ") out of range for atomic_dim "
                                   + std::to_string(space.atomic_dim));
            const Index block = space.mode_dimension();
            Matrix m = Matrix::Zero(dim, dim);
            m.block((s.l - 1) * block, (s.m - 1) * block, block, block).setIdentity();
            return m;
        }
        Matrix operator()(const op::Annihilate& a) const
        {
            check_mode(space, a.mode);
            return embed_mode(space, a.mode, ladder(L));
        }
        Matrix operator()(const op::Create& c) const
        {
            check_mode(space, c.mode);
            return embed_mode(space, c.mode, ladder(L).adjoint());
        }
        Matrix operator()(const op::Number& n) const
        {
            check_mode(space, n.mode);
            Matrix single = Matrix::Zero(L, L);
            for (int k = 0; k < L; ++k)
                single(k, k) = static_cast<double>(k);
            return embed_mode(space, n.mode, single);
        }
        Matrix operator()(const op::Identity&) const { return Matrix::Identity(dim, dim); }
    };

    return {space, std::visit(Visitor{space, dim, L}, kind)};
}

Operator total_number(const SpaceSpec& space)
{
    Operator n = Operator::zero(space);
    for (int mode = 0; mode < space.mode_count; ++mode)
        n += number(space, mode);
    return n;
}

Operator displacement_phase(std::span<const double> eta, const SpaceSpec& space)
{
    space.validate();
    if (static_cast<int>(eta.size()) != space.mode_count)
        throw InvalidIndex("Lamb-Dicke vector has " + std::to_string(eta.size())
                           + " components, space has " + std::to_string(space.mode_count)
                           + " modes");
    const int L = space.levels_per_mode();

    // x = a + a^dagger is real symmetric tridiagonal; exp(-i eta x) via its
    // spectral decomposition is unitary to machine precision.
    Eigen::MatrixXd x = Eigen::MatrixXd::Zero(L, L);
    for (int n = 1; n < L; ++n) {
        const double s = std::sqrt(static_cast<double>(n));
        x(n - 1, n) = s;
        x(n, n - 1) = s;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(x);
    const Matrix v = solver.eigenvectors().cast<cplx>();

    Matrix modes = Matrix::Identity(1, 1);
    for (double component : eta) {
        if (!std::isfinite(component))
            throw NumericError("non-finite Lamb-Dicke component");
        if (component == 0.0) {
            modes = kron(modes, Matrix::Identity(L, L));
            continue;
        }
        Vector phases(L);
        for (int k = 0; k < L; ++k)
            phases(k) = std::exp(-I_UNIT * component * solver.eigenvalues()(k));
        const Matrix single = v * phases.asDiagonal() * v.transpose();
        modes = kron(modes, single);
    }
    const Matrix atom = Matrix::Identity(space.atomic_dim, space.atomic_dim);
    return {space, kron(atom, modes)};
}

Matrix matrix_exponential(const Matrix& a)
{
    if (!a.allFinite())
        throw NumericError("matrix_exponential: non-finite entries");
    Matrix out = a.exp();
    if (!out.allFinite())
        throw NumericError("matrix_exponential: overflow");
    return out;
}

Operator matrix_exponential(const Operator& a)
{
    return {a.space(), matrix_exponential(a.matrix())};
}

HermitianEvolution::HermitianEvolution(const Operator& hermitian)
    : space_(hermitian.space())
{
    if (!hermitian.matrix().allFinite())
        throw NumericError("HermitianEvolution: non-finite entries");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian.matrix());
    eigenvectors_ = solver.eigenvectors();
    eigenvalues_ = solver.eigenvalues();
}

Operator HermitianEvolution::evolve(double t) const
{
    Vector phases(eigenvalues_.size());
    for (Index k = 0; k < eigenvalues_.size(); ++k)
        phases(k) = std::exp(-I_UNIT * (eigenvalues_(k) * t));
    return {space_, eigenvectors_ * phases.asDiagonal() * eigenvectors_.adjoint()};
}

std::vector<Index> interior_indices(const SpaceSpec& space, int n_phys)
{
    if (n_phys < 0 || n_phys > space.fock_cutoff)
        throw InvalidIndex("n_phys = " + std::to_string(n_phys) + " outside [0, fock_cutoff = "
                           + std::to_string(space.fock_cutoff) + "]");
    const Index L = space.levels_per_mode();
    std::vector<Index> out;
    for (Index idx = 0; idx < space.dimension(); ++idx) {
        Index rest = idx % space.mode_dimension();
        bool inside = true;
        for (int m = 0; m < space.mode_count && inside; ++m) {
            inside = (rest % L) <= n_phys;
            rest /= L;
        }
        if (inside)
            out.push_back(idx);
    }
    return out;
}

double interior_distance(const Operator& a, const Operator& b, int n_phys)
{
    require_same_space(a.space(), b.space(), "interior_distance");
    const auto idx = interior_indices(a.space(), n_phys);
    double sum = 0.0;
    for (Index j : idx)
        for (Index i : idx)
            sum += std::norm(a.matrix()(i, j) - b.matrix()(i, j));
    return std::sqrt(sum);
}

} // namespace ramanpt
