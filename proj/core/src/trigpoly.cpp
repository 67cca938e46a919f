#include "ramanpt/trigpoly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ramanpt {

FreqBasis::FreqBasis(std::vector<std::string> labels_, std::vector<double> values_)
    : labels(std::move(labels_)), values(std::move(values_))
{
    if (labels.size() != values.size())
        throw Mismatch("frequency basis: label and value counts differ");
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i]))
            throw NumericError("frequency basis: non-finite value for " + labels[i]);
        if (values[i] == 0.0)
            throw NumericError("frequency basis: zero value for " + labels[i]
                               + " (zero frequency is the zero key)");
    }
}

double FreqBasis::max_abs() const noexcept
{
    double m = 0.0;
    for (double v : values)
        m = std::max(m, std::abs(v));
    return m;
}

FreqKey FreqKey::unit(std::size_t n, std::size_t i, int sign)
{
    FreqKey k = zero(n);
    k.coeffs.at(i) = sign;
    return k;
}

bool FreqKey::is_zero() const noexcept
{
    return std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c == 0; });
}

double FreqKey::value(const FreqBasis& basis) const
{
    if (coeffs.size() != basis.size())
        throw Mismatch("frequency key length does not match basis");
    double w = 0.0;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        w += coeffs[i] * basis.values[i];
    return w;
}

std::string FreqKey::to_string(const FreqBasis& basis) const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const int c = coeffs[i];
        if (c == 0)
            continue;
        if (c < 0)
            os << "-";
        else if (os.tellp() > 0)
            os << "+";
        if (std::abs(c) != 1)
            os << std::abs(c) << "*";
        os << (i < basis.labels.size() ? basis.labels[i] : "w" + std::to_string(i));
    }
    return os.str();
}

FreqKey FreqKey::operator-() const
{
    FreqKey k = *this;
    for (int& c : k.coeffs)
        c = -c;
    return k;
}

FreqKey operator+(const FreqKey& a, const FreqKey& b)
{
    if (a.coeffs.size() != b.coeffs.size())
        throw Mismatch("frequency keys of different length");
    FreqKey k = a;
    for (std::size_t i = 0; i < k.coeffs.size(); ++i)
        k.coeffs[i] += b.coeffs[i];
    return k;
}

// ---------------------------------------------------------------------------

TrigPolyOp::TrigPolyOp(FreqBasis basis, SpaceSpec space)
    : basis_(std::move(basis)), space_(space)
{}

void TrigPolyOp::require_compatible(const TrigPolyOp& other, const char* where) const
{
    if (!(basis_ == other.basis_))
        throw Mismatch(std::string(where) + ": different frequency bases");
    if (!(space_ == other.space_))
        throw Mismatch(std::string(where) + ": different operator spaces");
}

void TrigPolyOp::add_term(const FreqKey& key, const Operator& coefficient)
{
    if (key.coeffs.size() != basis_.size())
        throw Mismatch("add_term: key length does not match basis");
    if (!(coefficient.space() == space_))
        throw Mismatch("add_term: coefficient on a different space");
    auto it = terms_.find(key);
    if (it == terms_.end())
        terms_.emplace(key, coefficient);
    else
        it->second += coefficient;
}

Operator TrigPolyOp::coefficient(const FreqKey& key) const
{
    auto it = terms_.find(key);
    return it == terms_.end() ? Operator::zero(space_) : it->second;
}

bool TrigPolyOp::has_zero_frequency() const
{
    return terms_.contains(FreqKey::zero(basis_.size()));
}

TrigPolyOp TrigPolyOp::oscillating_part() const
{
    TrigPolyOp out = *this;
    out.terms_.erase(FreqKey::zero(basis_.size()));
    return out;
}

double TrigPolyOp::max_coefficient_norm() const
{
    double m = 0.0;
    for (const auto& [key, a] : terms_)
        m = std::max(m, a.norm());
    return m;
}

void TrigPolyOp::canonicalize(double reference_scale)
{
    const double threshold = kDropRelative * std::max(reference_scale, max_coefficient_norm());
    std::erase_if(terms_, [threshold](const auto& kv) { return kv.second.norm() <= threshold; });
}

TrigPolyOp TrigPolyOp::adjoint() const
{
    TrigPolyOp out(basis_, space_);
    for (const auto& [key, a] : terms_)
        out.terms_.emplace(-key, a.adjoint());
    return out;
}

bool TrigPolyOp::is_hermitian_valued(double tol) const
{
    const TrigPolyOp adj = adjoint();
    std::vector<FreqKey> keys;
    for (const auto& [k, a] : terms_)
        keys.push_back(k);
    for (const auto& [k, a] : adj.terms_)
        keys.push_back(k);
    for (const auto& k : keys)
        if ((coefficient(k) - adj.coefficient(k)).norm() > tol)
            return false;
    return true;
}

TrigPolyOp TrigPolyOp::hermitian_part() const
{
    TrigPolyOp out = *this;
    out += adjoint();
    out *= 0.5;
    out.canonicalize(max_coefficient_norm());
    return out;
}

TrigPolyOp& TrigPolyOp::operator+=(const TrigPolyOp& rhs)
{
    require_compatible(rhs, "tp add");
    const double ref = std::max(max_coefficient_norm(), rhs.max_coefficient_norm());
    for (const auto& [key, a] : rhs.terms_)
        add_term(key, a);
    canonicalize(ref);
    return *this;
}

TrigPolyOp& TrigPolyOp::operator-=(const TrigPolyOp& rhs)
{
    require_compatible(rhs, "tp subtract");
    const double ref = std::max(max_coefficient_norm(), rhs.max_coefficient_norm());
    for (const auto& [key, a] : rhs.terms_)
        add_term(key, -a);
    canonicalize(ref);
    return *this;
}

TrigPolyOp& TrigPolyOp::operator*=(cplx s)
{
    for (auto& [key, a] : terms_)
        a *= s;
    canonicalize();
    return *this;
}

// ---------------------------------------------------------------------------

TrigPolyOp tp_product(const TrigPolyOp& f, const TrigPolyOp& g)
{
    if (!(f.basis() == g.basis()))
        throw Mismatch("tp_product: different frequency bases");
    if (!(f.space() == g.space()))
        throw Mismatch("tp_product: different operator spaces");

    TrigPolyOp out(f.basis(), f.space());
    double ref = 0.0;
    // std::map iteration is sorted, so every per-key sum is accumulated in
    // lexicographic (k, l) order.
    for (const auto& [kf, a] : f.terms())
        for (const auto& [kg, b] : g.terms()) {
            out.add_term(kf + kg, a * b);
            ref = std::max(ref, a.norm() * b.norm());
        }
    out.canonicalize(ref);
    return out;
}

TrigPolyOp tp_commutator(const TrigPolyOp& f, const TrigPolyOp& g)
{
    if (!(f.basis() == g.basis()))
        throw Mismatch("tp_commutator: different frequency bases");
    if (!(f.space() == g.space()))
        throw Mismatch("tp_commutator: different operator spaces");

    TrigPolyOp out(f.basis(), f.space());
    double ref = 0.0;
    for (const auto& [kf, a] : f.terms())
        for (const auto& [kg, b] : g.terms()) {
            out.add_term(kf + kg, commutator(a, b));
            ref = std::max(ref, 2.0 * a.norm() * b.norm());
        }
    out.canonicalize(ref);
    return out;
}

void check_resonances(const TrigPolyOp& f)
{
    const double limit = kResonanceRelative * f.basis().max_abs();
    std::vector<std::string> offending;
    for (const auto& [key, a] : f.terms())
        if (!key.is_zero() && std::abs(key.value(f.basis())) < limit)
            offending.push_back(key.to_string(f.basis()));
    if (!offending.empty()) {
        std::string msg = "near-resonant frequency keys:";
        for (const auto& k : offending)
            msg += " " + k;
        throw NearResonance(msg, std::move(offending));
    }
}

Operator tp_mean(const TrigPolyOp& f)
{
    check_resonances(f);
    return f.coefficient(FreqKey::zero(f.basis().size()));
}

TrigPolyOp tp_zero_mean_primitive(const TrigPolyOp& f)
{
    check_resonances(f);
    if (f.has_zero_frequency())
        throw SecularTerm("tp_zero_mean_primitive: input has a zero-frequency term; "
                          "subtract its mean first");
    TrigPolyOp out(f.basis(), f.space());
    for (const auto& [key, b] : f.terms())
        out.add_term(key, b * (1.0 / (I_UNIT * key.value(f.basis()))));
    out.canonicalize();
    return out;
}

Operator tp_eval(const TrigPolyOp& f, double t)
{
    Matrix sum = Matrix::Zero(f.space().dimension(), f.space().dimension());
    for (const auto& [key, a] : f.terms())
        sum += std::exp(I_UNIT * (key.value(f.basis()) * t)) * a.matrix();
    return {f.space(), std::move(sum)};
}

Operator tp_integral_from_zero(const TrigPolyOp& f, double t)
{
    check_resonances(f);
    Matrix sum = Matrix::Zero(f.space().dimension(), f.space().dimension());
    for (const auto& [key, a] : f.terms()) {
        if (key.is_zero()) {
            sum += t * a.matrix();
        } else {
            const double w = key.value(f.basis());
            sum += ((std::exp(I_UNIT * (w * t)) - 1.0) / (I_UNIT * w)) * a.matrix();
        }
    }
    return {f.space(), std::move(sum)};
}

} // namespace ramanpt
