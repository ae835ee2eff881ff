#pragma once

#include <stdexcept>
#include <string>

namespace synthtab {

// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid schema, configuration, or input data. Maps to CLI exit code 1.
class ValidationError : public Error {
public:
    using Error::Error;
};

// Unusable content: malformed JSON, no extractable record array, bad file.
class ParseError : public Error {
public:
    using Error::Error;
};

// Network or HTTP failure while talking to a completion backend.
// status() is the HTTP status code, 0 for connection-level failures.
class TransportError : public Error {
public:
    TransportError(const std::string& msg, int status, bool retryable)
        : Error(msg), status_(status), retryable_(retryable) {}

    int status() const { return status_; }
    bool retryable() const { return retryable_; }

private:
    int status_;
    bool retryable_;
};

}  // namespace synthtab
