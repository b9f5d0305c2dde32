#pragma once

#include <optional>
#include <string>

#include "spcone/errors.hpp"

namespace spcone {

enum class FamilyKind { NegLog, NegEntropy, Power };

std::string to_string(FamilyKind kind);
FamilyKind family_kind_from_string(const std::string& name);

/// Scalar kernel g of the trace function tr g(W).
///
/// Admissible families (convex, C3 on x > 0, with matrix monotone g'):
///   neglog      g(x) = -log(x)
///   negentropy  g(x) = x log(x)
///   power       g(x) = x^p for p in [1,2], g(x) = -x^p for p in (0,1)
class FunctionFamily {
public:
    static FunctionFamily neglog();
    static FunctionFamily negentropy();
    static FunctionFamily power(double exponent);  // throws InvalidExponent

    static FunctionFamily make(FamilyKind kind, std::optional<double> exponent = std::nullopt);

    FamilyKind kind() const { return kind_; }
    double exponent() const { return exponent_; }
    std::string name() const;

    /// g(x), x > 0.
    double value(double x) const;
    /// Closed-form derivative of order 1, 2 or 3 at x > 0.
    double deriv(double x, int order) const;

    bool operator==(const FunctionFamily&) const = default;

private:
    FunctionFamily(FamilyKind kind, double exponent) : kind_(kind), exponent_(exponent) {}

    FamilyKind kind_;
    double exponent_;  // meaningful only for Power
};

}  // namespace spcone
