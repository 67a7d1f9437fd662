#pragma once

#include <stdexcept>
#include <string>

namespace mms {

/// Malformed input document or a violated data-model invariant.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its documented preconditions.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The requested computation exceeds the configured work limits.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A construction that is guaranteed to succeed did not; indicates a bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace mms
