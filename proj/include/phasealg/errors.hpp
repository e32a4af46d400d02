#pragma once

#include <stdexcept>
#include <string>

namespace phasealg {

/// Malformed or out-of-range input (bad flags, non-finite numbers, zero denominators).
class InvalidInput : public std::invalid_argument {
public:
    explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// Input is well formed but lies in a parameter domain the toolkit does not handle.
class UnsupportedDomain : public std::domain_error {
public:
    explicit UnsupportedDomain(const std::string& what) : std::domain_error(what) {}
};

/// A documented precondition of an operation was violated (e.g. degenerate parameters).
class PreconditionError : public std::logic_error {
public:
    explicit PreconditionError(const std::string& what) : std::logic_error(what) {}
};

/// Physical domain violation, e.g. a constituent mass not exceeding the current mass.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// An identity that must hold on a correct build did not (bracket closure, centrality, ...).
class ConsistencyError : public std::runtime_error {
public:
    explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace phasealg
