#include "spcone/function_family.hpp"

#include <cmath>

namespace spcone {

std::string to_string(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::NegLog: return "neglog";
        case FamilyKind::NegEntropy: return "negentropy";
        case FamilyKind::Power: return "power";
    }
    return "?";
}

FamilyKind family_kind_from_string(const std::string& name) {
    if (name == "neglog") return FamilyKind::NegLog;
    if (name == "negentropy") return FamilyKind::NegEntropy;
    if (name == "power") return FamilyKind::Power;
    throw ParseError("unknown function family kind: '" + name + "'");
}

FunctionFamily FunctionFamily::neglog() { return {FamilyKind::NegLog, 0.0}; }
FunctionFamily FunctionFamily::negentropy() { return {FamilyKind::NegEntropy, 0.0}; }

FunctionFamily FunctionFamily::power(double p) {
    // g' is p*x^(p-1) up to sign; matrix monotone iff p-1 in [-1,1], and the
    // sign convention keeps g convex only for p in (0,1) or [1,2].
    if (!(p > 0.0 && p <= 2.0)) {
        throw InvalidExponent("power exponent must lie in (0,1) or [1,2], got " + std::to_string(p));
    }
    return {FamilyKind::Power, p};
}

FunctionFamily FunctionFamily::make(FamilyKind kind, std::optional<double> exponent) {
    switch (kind) {
        case FamilyKind::NegLog: return neglog();
        case FamilyKind::NegEntropy: return negentropy();
        case FamilyKind::Power:
            if (!exponent) throw InvalidExponent("power family requires an exponent");
            return power(*exponent);
    }
    throw InvalidExponent("unknown family kind");
}

std::string FunctionFamily::name() const {
    if (kind_ == FamilyKind::Power) return "power(" + std::to_string(exponent_) + ")";
    return to_string(kind_);
}

namespace {
void require_positive(double x) {
    if (!(x > 0.0)) throw DomainError("scalar kernel evaluated at x <= 0");
}
}  // namespace

double FunctionFamily::value(double x) const {
    require_positive(x);
    switch (kind_) {
        case FamilyKind::NegLog: return -std::log(x);
        case FamilyKind::NegEntropy: return x * std::log(x);
        case FamilyKind::Power: {
            const double s = exponent_ >= 1.0 ? 1.0 : -1.0;
            return s * std::pow(x, exponent_);
        }
    }
    return 0.0;
}

double FunctionFamily::deriv(double x, int order) const {
    require_positive(x);
    if (order < 1 || order > 3) throw InvalidOrder("derivative order must be 1, 2 or 3");
    switch (kind_) {
        case FamilyKind::NegLog:
            switch (order) {
                case 1: return -1.0 / x;
                case 2: return 1.0 / (x * x);
                default: return -2.0 / (x * x * x);
            }
        case FamilyKind::NegEntropy:
            switch (order) {
                case 1: return std::log(x) + 1.0;
                case 2: return 1.0 / x;
                default: return -1.0 / (x * x);
            }
        case FamilyKind::Power: {
            const double p = exponent_;
            const double s = p >= 1.0 ? 1.0 : -1.0;
            switch (order) {
                case 1: return s * p * std::pow(x, p - 1.0);
                case 2: return s * p * (p - 1.0) * std::pow(x, p - 2.0);
                default: return s * p * (p - 1.0) * (p - 2.0) * std::pow(x, p - 3.0);
            }
        }
    }
    return 0.0;
}

}  // namespace spcone
