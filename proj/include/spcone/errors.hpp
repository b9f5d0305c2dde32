#pragma once

#include <stdexcept>
#include <string>

namespace spcone {

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidExponent : std::invalid_argument {
    explicit InvalidExponent(const std::string& msg) : std::invalid_argument(msg) {}
};

struct InvalidOrder : std::invalid_argument {
    explicit InvalidOrder(const std::string& msg) : std::invalid_argument(msg) {}
};

struct NotInterior : std::runtime_error {
    explicit NotInterior(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidDirection : std::invalid_argument {
    explicit InvalidDirection(const std::string& msg) : std::invalid_argument(msg) {}
};

struct SingularHessian : std::runtime_error {
    explicit SingularHessian(const std::string& msg) : std::runtime_error(msg) {}
};

struct SolverError : std::runtime_error {
    explicit SolverError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace spcone
