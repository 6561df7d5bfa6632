#pragma once

#include <stdexcept>
#include <string>

namespace weingarten {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the requested construction.
class DomainError : public Error {
public:
    using Error::Error;
};

/// The sampled surface point is not immersed (|x_u x x_v| vanishes).
class DegenerateJet : public Error {
public:
    using Error::Error;
};

/// The offset distance hits a focal point, 1 - 2tH + t^2 K = 0.
class FocalPoint : public Error {
public:
    using Error::Error;
};

/// The profile-only curvature formula divides by r' = 0 at this parameter.
class FormulaSingular : public Error {
public:
    using Error::Error;
};

/// A tube radius reaches the focal radius of its center curve.
class ImmersionError : public Error {
public:
    using Error::Error;
};

/// The zero coefficient triple, which imposes no condition at all.
class InvalidTriple : public Error {
public:
    using Error::Error;
};

}  // namespace weingarten
