#pragma once

// Dense operators on (atom) x (M truncated bosonic modes).
//
// Basis ordering is atom-major: index = level * L^M + sum_m n_m * L^(M-1-m),
// with L = fock_cutoff + buffer + 1 kept Fock states per mode. Levels are
// 1-based in the public API (sigma(1,3) is |1><3|), 0-based in indices.

#include <complex>
#include <span>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "ramanpt/errors.hpp"

namespace ramanpt {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Index = Eigen::Index;

inline constexpr cplx I_UNIT{0.0, 1.0};

struct SpaceSpec
{
    int atomic_dim = 3;
    int mode_count = 1;
    int fock_cutoff = 20; ///< n_max, highest physical Fock state per mode
    int buffer = 10;      ///< extra Fock states used during construction

    int levels_per_mode() const noexcept { return fock_cutoff + buffer + 1; }
    Index mode_dimension() const noexcept;
    Index dimension() const noexcept { return atomic_dim * mode_dimension(); }

    /// Throws InvalidIndex on nonsensical sizes.
    void validate() const;

    bool operator==(const SpaceSpec&) const = default;
};

/// Index of |level; n_0, n_1, ...> (level 1-based, occupations per mode).
Index basis_index(const SpaceSpec& space, int level, std::span<const int> occupations);

class Operator
{
public:
    Operator(SpaceSpec space, Matrix matrix);

    static Operator zero(const SpaceSpec& space);
    static Operator identity(const SpaceSpec& space);

    const SpaceSpec& space() const noexcept { return space_; }
    const Matrix& matrix() const noexcept { return matrix_; }
    Index dim() const noexcept { return matrix_.rows(); }

    Operator adjoint() const;
    double norm() const { return matrix_.norm(); }

    bool is_hermitian(double tol) const;
    bool is_unitary(double tol) const;

    Operator& operator+=(const Operator& rhs);
    Operator& operator-=(const Operator& rhs);
    Operator& operator*=(cplx s);

    friend Operator operator+(Operator lhs, const Operator& rhs) { return lhs += rhs; }
    friend Operator operator-(Operator lhs, const Operator& rhs) { return lhs -= rhs; }
    friend Operator operator*(Operator lhs, cplx s) { return lhs *= s; }
    friend Operator operator*(cplx s, Operator rhs) { return rhs *= s; }
    friend Operator operator*(const Operator& lhs, const Operator& rhs);
    friend Operator operator-(Operator op) { return op *= -1.0; }

private:
    SpaceSpec space_;
    Matrix matrix_;
};

Operator commutator(const Operator& a, const Operator& b);

void require_same_space(const SpaceSpec& a, const SpaceSpec& b, const char* where);

namespace op {
struct Sigma { int l; int m; };
struct Annihilate { int mode; };
struct Create { int mode; };
struct Number { int mode; };
struct Identity {};
} // namespace op

using BasicKind = std::variant<op::Sigma, op::Annihilate, op::Create, op::Number, op::Identity>;

/// Embeds the requested single-factor operator into the full space.
Operator build_basic_operator(const BasicKind& kind, const SpaceSpec& space);

inline Operator sigma(const SpaceSpec& s, int l, int m) { return build_basic_operator(op::Sigma{l, m}, s); }
inline Operator annihilate(const SpaceSpec& s, int mode) { return build_basic_operator(op::Annihilate{mode}, s); }
inline Operator create(const SpaceSpec& s, int mode) { return build_basic_operator(op::Create{mode}, s); }
inline Operator number(const SpaceSpec& s, int mode) { return build_basic_operator(op::Number{mode}, s); }

/// Sum of number operators over all modes.
Operator total_number(const SpaceSpec& space);

/// prod_m exp(-i eta_m (a_m + a_m^dagger)), i.e. exp(-i k.r) in Lamb-Dicke
/// units. One eta component per mode.
Operator displacement_phase(std::span<const double> eta, const SpaceSpec& space);

/// exp(A). Scaling and squaring (Pade) through Eigen's MatrixFunctions.
Matrix matrix_exponential(const Matrix& a);
Operator matrix_exponential(const Operator& a);

/// Spectral form of a Hermitian generator: evolve(t) = exp(-i H t) for any t
/// without loss of accuracy at large |t|.
class HermitianEvolution
{
public:
    explicit HermitianEvolution(const Operator& hermitian);

    Operator evolve(double t) const;
    const Eigen::VectorXd& eigenvalues() const noexcept { return eigenvalues_; }

private:
    SpaceSpec space_;
    Matrix eigenvectors_;
    Eigen::VectorXd eigenvalues_;
};

/// Basis indices with every mode occupation <= n_phys (atom unrestricted).
std::vector<Index> interior_indices(const SpaceSpec& space, int n_phys);

/// ||P (A - B) P||_F with P the interior projector at n_phys.
double interior_distance(const Operator& a, const Operator& b, int n_phys);

} // namespace ramanpt
