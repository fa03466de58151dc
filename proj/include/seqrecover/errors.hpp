#pragma once

#include <stdexcept>
#include <string>

namespace seqrecover {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed sequence text. Carries the offending token and its position.
class ParseError : public Error {
public:
    ParseError(std::string token, std::size_t position, const std::string& why)
        : Error("parse error at token " + std::to_string(position) + " '" + token + "': " + why),
          token_(std::move(token)),
          position_(position) {}

    const std::string& token() const noexcept { return token_; }
    std::size_t position() const noexcept { return position_; }

private:
    std::string token_;
    std::size_t position_;
};

/// A symbol kind that the selected cost model cannot price (e.g. a wildcard under DTW).
class UnsupportedAlphabet : public Error {
public:
    using Error::Error;
};

/// Operation undefined for the given operands (empty warping, wrong sequence shape, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// MSS instance asking for more separated picks than the list admits.
class InfeasibleError : public Error {
public:
    using Error::Error;
};

/// Oracle answers that no binary input of the allowed length could have produced.
class AdversarialOracle : public Error {
public:
    using Error::Error;
};

/// A guarantee the decoders rely on was observed to fail. Must never fire.
class TheoremViolation : public Error {
public:
    using Error::Error;
};

class InvalidMatching : public Error {
public:
    using Error::Error;
};

/// Misuse of an oracle session: wrong mode, double submission, query too long.
class SessionError : public Error {
public:
    using Error::Error;
};

/// Local search found no strictly improving neighbour while the distance is positive.
class DescentStuck : public Error {
public:
    using Error::Error;
};

class BudgetExhausted : public Error {
public:
    using Error::Error;
};

}  // namespace seqrecover
