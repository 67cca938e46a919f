#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ramanpt {

/// Base of every error thrown by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class InvalidIndex : public Error { public: using Error::Error; };
class NumericError : public Error { public: using Error::Error; };
class SpaceMismatch : public Error { public: using Error::Error; };

/// Trigonometric polynomials over different frequency bases or spaces.
class Mismatch : public Error { public: using Error::Error; };

/// A nonzero frequency key realizes a frequency too close to zero.
class NearResonance : public Error
{
public:
    NearResonance(const std::string& what, std::vector<std::string> keys)
        : Error(what), keys_(std::move(keys))
    {}

    const std::vector<std::string>& keys() const noexcept { return keys_; }

private:
    std::vector<std::string> keys_;
};

/// Zero-mean primitive requested for a polynomial with a zero-frequency term.
class SecularTerm : public Error { public: using Error::Error; };

class InvalidHamiltonian : public Error { public: using Error::Error; };
class DuplicateDetuning : public Error { public: using Error::Error; };
class InvalidScheme : public Error { public: using Error::Error; };
class StepTooLarge : public Error { public: using Error::Error; };
class InvalidState : public Error { public: using Error::Error; };

} // namespace ramanpt
