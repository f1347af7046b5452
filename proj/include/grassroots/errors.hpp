// Copyright 2026 the grassroots contributors. Licensed under the Apache
// License, Version 2.0. See the LICENSE file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace grassroots {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An agent or node is outside the domain it is required to be in.
struct DomainError : Error {
    using Error::Error;
};

/// A platform guard rejected the transaction.
struct GuardError : Error {
    using Error::Error;
};

/// Participant set is malformed (e.g. a binary transaction with p == q).
struct InvalidParticipantsError : Error {
    using Error::Error;
};

/// The requested transaction would not change any local state.
struct NoOpError : Error {
    using Error::Error;
};

/// A federation join violates the community order.
struct OrderError : Error {
    using Error::Error;
};

/// Transaction is not enabled at the given configuration.
struct NotEnabledError : Error {
    using Error::Error;
};

/// Malformed label, trace, scenario or configuration text.
struct ParseError : Error {
    using Error::Error;
};

/// A checker guardrail (agent count / depth) was exceeded.
struct LimitError : Error {
    using Error::Error;
};

/// Replay or scripted execution failed; `index` is the offending step.
struct ValidationError : Error {
    ValidationError(const std::string& msg, std::size_t at)
        : Error(msg), index(at) {}
    std::size_t index;
};

} // namespace grassroots
