#pragma once

// Error types shared by the whole library.
//
// Everything fails loudly: a violated precondition, a malformed input, or an
// arithmetic impossibility throws rather than producing a default value.

#include <stdexcept>
#include <string>

namespace mslope {

// Base class for every error thrown by this library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// A value failed validation: bad construction arguments, an index outside the
// basis of the requested space, a genus outside an operation's domain, a
// malformed serialized form, division by zero, or a polynomial-degree overflow.
class validation_error : public error {
public:
    explicit validation_error(const std::string& what) : error(what) {}
};

// An operation needed an exact coefficient but met the Unknown marker.
class indeterminate_error : public error {
public:
    explicit indeterminate_error(const std::string& what) : error(what) {}
};

// Two independent computations of the same quantity disagree. Thrown by
// derivations that recompute a figure from first principles and cross-check
// it against its recorded display form; a mismatch means an engine bug, not
// bad user input.
class consistency_error : public error {
public:
    explicit consistency_error(const std::string& what) : error(what) {}
};

} // namespace mslope
