#pragma once

// Operator-valued trigonometric polynomials f(t) = sum_k A_k exp(i w_k t).
//
// Frequencies are exact integer combinations of a declared basis, so the
// zero (secular) frequency is detected by integer equality, never by a
// floating-point comparison.

#include <compare>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ramanpt/hilbert.hpp"

namespace ramanpt {

/// Relative threshold below which coefficients are dropped on canonicalization.
inline constexpr double kDropRelative = 1e-14;
/// Nonzero keys with |w| < kResonanceRelative * max|base| are refused.
inline constexpr double kResonanceRelative = 1e-9;

struct FreqBasis
{
    std::vector<std::string> labels;
    std::vector<double> values;

    FreqBasis() = default;
    FreqBasis(std::vector<std::string> labels, std::vector<double> values);

    std::size_t size() const noexcept { return values.size(); }
    double max_abs() const noexcept;

    bool operator==(const FreqBasis&) const = default;
};

struct FreqKey
{
    std::vector<int> coeffs;

    static FreqKey zero(std::size_t n) { return {std::vector<int>(n, 0)}; }
    /// sign * (basis frequency i)
    static FreqKey unit(std::size_t n, std::size_t i, int sign = 1);

    bool is_zero() const noexcept;
    double value(const FreqBasis& basis) const;
    std::string to_string(const FreqBasis& basis) const;

    FreqKey operator-() const;
    friend FreqKey operator+(const FreqKey& a, const FreqKey& b);

    auto operator<=>(const FreqKey&) const = default;
    bool operator==(const FreqKey&) const = default;
};

class TrigPolyOp
{
public:
    using TermMap = std::map<FreqKey, Operator>;

    TrigPolyOp(FreqBasis basis, SpaceSpec space);

    const FreqBasis& basis() const noexcept { return basis_; }
    const SpaceSpec& space() const noexcept { return space_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    /// Accumulates into the coefficient of `key`. Does not canonicalize.
    void add_term(const FreqKey& key, const Operator& coefficient);
    /// Coefficient at `key`, or the zero operator.
    Operator coefficient(const FreqKey& key) const;
    bool has_zero_frequency() const;
    /// Copy without the zero-frequency term.
    TrigPolyOp oscillating_part() const;

    /// Drops terms with norm <= kDropRelative * max(reference, largest term norm).
    void canonicalize(double reference_scale = 0.0);
    double max_coefficient_norm() const;

    /// f(t)^dagger as a polynomial: key k -> (A_{-k})^dagger.
    TrigPolyOp adjoint() const;
    bool is_hermitian_valued(double tol) const;
    /// (f + f^dagger)/2, exactly Hermitian-valued.
    TrigPolyOp hermitian_part() const;

    TrigPolyOp& operator+=(const TrigPolyOp& rhs);
    TrigPolyOp& operator-=(const TrigPolyOp& rhs);
    TrigPolyOp& operator*=(cplx s);

    friend TrigPolyOp operator+(TrigPolyOp a, const TrigPolyOp& b) { return a += b; }
    friend TrigPolyOp operator-(TrigPolyOp a, const TrigPolyOp& b) { return a -= b; }
    friend TrigPolyOp operator*(TrigPolyOp a, cplx s) { return a *= s; }
    friend TrigPolyOp operator*(cplx s, TrigPolyOp a) { return a *= s; }

private:
    void require_compatible(const TrigPolyOp& other, const char* where) const;

    FreqBasis basis_;
    SpaceSpec space_;
    TermMap terms_;
};

/// Pointwise product; keys add component-wise.
TrigPolyOp tp_product(const TrigPolyOp& f, const TrigPolyOp& g);
/// fg - gf
TrigPolyOp tp_commutator(const TrigPolyOp& f, const TrigPolyOp& g);
/// Long-time average, i.e. the zero-key coefficient.
Operator tp_mean(const TrigPolyOp& f);
/// F with dF/dt = f and zero mean; term rule B e^{iwt} -> B/(iw) e^{iwt}.
/// Throws SecularTerm if f has a zero-frequency term.
TrigPolyOp tp_zero_mean_primitive(const TrigPolyOp& f);
/// sum_k A_k exp(i w_k t)
Operator tp_eval(const TrigPolyOp& f, double t);
/// int_0^t f, including the secular part (zero key contributes A_0 t).
Operator tp_integral_from_zero(const TrigPolyOp& f, double t);

/// Throws NearResonance listing every nonzero key of f with
/// |w| < kResonanceRelative * max|base|.
void check_resonances(const TrigPolyOp& f);

nlohmann::json space_to_json(const SpaceSpec& space);
SpaceSpec space_from_json(const nlohmann::json& j);
nlohmann::json operator_to_json(const Operator& op);
Operator operator_from_json(const nlohmann::json& j, const SpaceSpec& space);
nlohmann::json tp_to_json(const TrigPolyOp& f);
TrigPolyOp tp_from_json(const nlohmann::json& j);

} // namespace ramanpt
