#pragma once

#include <stdexcept>
#include <string>

namespace lensurg {

// Input outside an operation's domain (non-standard string, value <= 1, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// An extended-rational computation reached 0/0.
class UndefinedValue : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class InvalidPair : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Surgery presentation with infinite first homology where a finite one is needed.
class DegenerateCokernel : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace lensurg
