#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <ramanpt/errors.hpp>
#include <ramanpt/hilbert.hpp>

#include "oracles.hpp"

using namespace ramanpt;

namespace {

SpaceSpec space(int atoms, int modes, int cutoff, int buffer)
{
    return SpaceSpec{.atomic_dim = atoms, .mode_count = modes, .fock_cutoff = cutoff, .buffer = buffer};
}

// Projector onto basis states with every mode occupation <= n.
Matrix interior_projector(const SpaceSpec& s, int n)
{
    Matrix p = Matrix::Zero(s.dimension(), s.dimension());
    for (Index i : interior_indices(s, n))
        p(i, i) = 1.0;
    return p;
}

} // namespace

TEST_SUITE("hilbert")
{
    TEST_CASE("space dimension and ordering")
    {
        const SpaceSpec s = space(3, 2, 4, 1);
        CHECK(s.levels_per_mode() == 6);
        CHECK(s.dimension() == 3 * 36);
        const std::vector<int> occ{2, 5};
        CHECK(basis_index(s, 2, occ) == 36 + 2 * 6 + 5);
        CHECK_THROWS_AS(basis_index(s, 4, occ), InvalidIndex);
        CHECK_THROWS_AS(space(3, 1, 0, 1).validate(), InvalidIndex);
    }

    TEST_CASE("ladder matrix on a three-state mode")
    {
        const Operator a = annihilate(space(1, 1, 1, 1), 0);
        Matrix expected = Matrix::Zero(3, 3);
        expected(0, 1) = 1.0;
        expected(1, 2) = std::sqrt(2.0);
        CHECK((a.matrix() - expected).norm() == 0.0);
    }

    TEST_CASE("sigma(1,3) without modes")
    {
        const Operator s13 = sigma(space(3, 0, 1, 0), 1, 3);
        Matrix expected = Matrix::Zero(3, 3);
        expected(0, 2) = 1.0;
        CHECK(s13.dim() == 3);
        CHECK((s13.matrix() - expected).norm() == 0.0);
    }

    TEST_CASE("canonical commutator holds on the interior")
    {
        const SpaceSpec s = space(2, 2, 5, 1);
        for (int mode = 0; mode < 2; ++mode) {
            const Operator a = annihilate(s, mode);
            const Operator c = commutator(a, create(s, mode));
            const Matrix p = interior_projector(s, s.fock_cutoff);
            const Matrix restricted = p * c.matrix() * p;
            CHECK((restricted - p).norm() < 1e-13);
        }
    }

    TEST_CASE("number operator is a^dagger a")
    {
        const SpaceSpec s = space(3, 1, 6, 2);
        const Operator n = number(s, 0);
        CHECK((n - create(s, 0) * annihilate(s, 0)).norm() < 1e-14);
        CHECK((total_number(s) - n).norm() == 0.0);
    }

    TEST_CASE("sigma products follow the matrix-unit rule")
    {
        const SpaceSpec s = space(3, 1, 2, 1);
        for (int l = 1; l <= 3; ++l)
            for (int m = 1; m <= 3; ++m)
                for (int p = 1; p <= 3; ++p)
                    for (int q = 1; q <= 3; ++q) {
                        const Operator lhs = sigma(s, l, m) * sigma(s, p, q);
                        const Operator rhs = m == p ? sigma(s, l, q) : Operator::zero(s);
                        CHECK((lhs - rhs).norm() == 0.0);
                    }
    }

    TEST_CASE("index errors")
    {
        const SpaceSpec s = space(3, 1, 2, 1);
        CHECK_THROWS_AS(sigma(s, 0, 1), InvalidIndex);
        CHECK_THROWS_AS(sigma(s, 1, 4), InvalidIndex);
        CHECK_THROWS_AS(annihilate(s, 1), InvalidIndex);
        CHECK_THROWS_AS(create(s, -1), InvalidIndex);
        CHECK_THROWS_AS(number(space(3, 0, 2, 1), 0), InvalidIndex);
        CHECK(build_basic_operator(op::Identity{}, s).matrix().isIdentity());
    }

    TEST_CASE("operator arithmetic refuses mixed spaces")
    {
        const Operator a = Operator::identity(space(3, 1, 2, 1));
        const Operator b = Operator::identity(space(3, 1, 3, 1));
        CHECK_THROWS_AS(a + b, SpaceMismatch);
        CHECK_THROWS_AS(a * b, SpaceMismatch);
        CHECK_THROWS_AS(Operator(space(3, 1, 2, 1), Matrix::Zero(4, 4)), SpaceMismatch);
    }

    TEST_CASE("displacement phase: identity, unitarity, inverse")
    {
        const SpaceSpec s = space(3, 1, 20, 10);
        const std::vector<double> zero{0.0};
        CHECK((displacement_phase(zero, s).matrix() - Matrix::Identity(s.dimension(), s.dimension())).norm()
              < 1e-15);

        const SpaceSpec wide = space(1, 1, 20, 10); // cutoff + buffer = 30
        const std::vector<double> eta{0.1};
        const std::vector<double> minus_eta{-0.1};
        const Operator d = displacement_phase(eta, wide);
        CHECK(d.is_unitary(1e-10));
        CHECK((d.adjoint() * d - Operator::identity(wide)).norm() <= 1e-10);
        CHECK((displacement_phase(eta, wide) * displacement_phase(minus_eta, wide)
               - Operator::identity(wide))
                  .norm()
              <= 1e-10);
    }

    TEST_CASE("displacement phase on two modes factorizes")
    {
        const SpaceSpec s = space(2, 2, 4, 2);
        const std::vector<double> both{0.2, -0.3};
        const std::vector<double> first{0.2, 0.0};
        const std::vector<double> second{0.0, -0.3};
        const Operator d = displacement_phase(both, s);
        CHECK((d - displacement_phase(first, s) * displacement_phase(second, s)).norm() < 1e-13);
        const std::vector<double> short_eta{0.1};
        CHECK_THROWS_AS(displacement_phase(short_eta, s), InvalidIndex);
    }

    TEST_CASE("vacuum overlap equals the Gaussian series")
    {
        const SpaceSpec s = space(1, 1, 40, 0);
        const std::vector<double> eta{0.3};
        const cplx v = displacement_phase(eta, s).matrix()(0, 0);
        const cplx series = oracle::vacuum_overlap_series(0.3);
        CHECK(std::abs(series - std::exp(-0.045)) < 1e-15);
        CHECK(std::abs(v - series) < 1e-8);
    }

    TEST_CASE("matrix exponential: trivial cases")
    {
        const SpaceSpec s = space(2, 0, 1, 0);
        CHECK((matrix_exponential(Operator::zero(s)) - Operator::identity(s)).norm() < 1e-15);

        const double theta = 0.7;
        Matrix a = Matrix::Zero(2, 2);
        a(0, 0) = I_UNIT * theta;
        a(1, 1) = -I_UNIT * theta;
        const Matrix e = matrix_exponential(a);
        CHECK(std::abs(e(0, 0) - std::exp(I_UNIT * theta)) < 1e-15);
        CHECK(std::abs(e(1, 1) - std::exp(-I_UNIT * theta)) < 1e-15);
        CHECK(std::abs(e(0, 1)) == 0.0);
    }

    TEST_CASE("matrix exponential against the eigendecomposition oracle")
    {
        std::mt19937_64 rng(20240611);
        for (int trial = 0; trial < 5; ++trial) {
            const Matrix h = oracle::random_hermitian(8, rng);
            const Matrix e = matrix_exponential(Matrix(-I_UNIT * h));
            const Matrix ref = oracle::exp_minus_i_hermitian(h, 1.0);
            CHECK((e - ref).norm() <= 1e-11);
            CHECK((e.adjoint() * e - Matrix::Identity(8, 8)).norm() <= 1e-10);
        }
    }

    TEST_CASE("matrix exponential relative accuracy for large norms")
    {
        std::mt19937_64 rng(7);
        Matrix h = oracle::random_hermitian(6, rng);
        h *= 900.0 / h.norm();
        const Matrix e = matrix_exponential(Matrix(-I_UNIT * h));
        const Matrix ref = oracle::exp_minus_i_hermitian(h, 1.0);
        CHECK((e - ref).norm() / ref.norm() <= 1e-12);
        CHECK((e.adjoint() * e - Matrix::Identity(6, 6)).norm() <= 1e-10);
    }

    TEST_CASE("matrix exponential rejects non-finite input")
    {
        Matrix a = Matrix::Zero(2, 2);
        a(0, 1) = std::nan("");
        CHECK_THROWS_AS(matrix_exponential(a), NumericError);
        a(0, 1) = std::numeric_limits<double>::infinity();
        CHECK_THROWS_AS(matrix_exponential(a), NumericError);
    }

    TEST_CASE("Hermitian evolution matches the oracle at long times")
    {
        std::mt19937_64 rng(3);
        const SpaceSpec s = space(2, 1, 2, 0);
        const Matrix h = oracle::random_hermitian(static_cast<int>(s.dimension()), rng);
        const HermitianEvolution ev(Operator(s, h));
        for (double t : {0.0, 0.3, 1e3}) {
            const Matrix ref = oracle::exp_minus_i_hermitian(h, t);
            CHECK((ev.evolve(t).matrix() - ref).norm() < 1e-9);
        }
    }

    TEST_CASE("interior distance")
    {
        const SpaceSpec s = space(3, 1, 4, 2);
        const Operator a = Operator::identity(s);
        CHECK(interior_distance(a, a, 3) == 0.0);
        CHECK(interior_distance(a, Operator::zero(s), 2) == doctest::Approx(3.0));

        Matrix m = a.matrix();
        const std::vector<int> high{4};
        m(basis_index(s, 2, high), basis_index(s, 2, high)) = 5.0;
        CHECK(interior_distance(a, Operator(s, m), 3) == 0.0);
        CHECK(interior_distance(a, Operator(s, m), 4) == doctest::Approx(4.0));

        CHECK_THROWS_AS(interior_distance(a, Operator::identity(space(3, 1, 5, 2)), 2), SpaceMismatch);
        CHECK_THROWS_AS(interior_distance(a, a, 5), InvalidIndex);
    }

    TEST_CASE("anti-Hermitian exponentials are unitary (property)")
    {
        std::mt19937_64 rng(11);
        const SpaceSpec s = space(3, 1, 6, 2);
        for (int trial = 0; trial < 4; ++trial) {
            const Matrix h = oracle::random_hermitian(static_cast<int>(s.dimension()), rng);
            const Operator u = matrix_exponential(Operator(s, -I_UNIT * h));
            CHECK(u.is_unitary(1e-10));
        }
    }
}
