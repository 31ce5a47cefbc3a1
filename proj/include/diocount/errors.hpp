#pragma once

#include <stdexcept>
#include <string>

namespace diocount {

// Domain errors carry a stable machine-readable code alongside the human
// message; the CLI maps them to exit status 2 and a JSON error object.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

inline DomainError invalid_representation(const std::string& msg) {
    return DomainError("invalid-representation", msg);
}
inline DomainError division_by_zero(const std::string& msg) {
    return DomainError("division-by-zero", msg);
}
inline DomainError no_threshold(const std::string& msg) {
    return DomainError("no-threshold", msg);
}
inline DomainError undefined_gcd(const std::string& msg) {
    return DomainError("undefined-gcd", msg);
}
inline DomainError no_inverse(const std::string& msg) {
    return DomainError("no-inverse", msg);
}
inline DomainError precondition_violation(const std::string& msg) {
    return DomainError("precondition", msg);
}
inline DomainError non_coprime(const std::string& msg) {
    return DomainError("non-coprime", msg);
}
inline DomainError arity_error(const std::string& msg) {
    return DomainError("arity", msg);
}
inline DomainError degenerate_matrix(const std::string& msg) {
    return DomainError("degenerate-matrix", msg);
}
inline DomainError rank_error(const std::string& msg) {
    return DomainError("rank", msg);
}
inline DomainError envelope_error(const std::string& msg) {
    return DomainError("envelope", msg);
}
inline DomainError infinite_count(const std::string& msg) {
    return DomainError("infinite-count", msg);
}
inline DomainError not_one_prime(const std::string& msg) {
    return DomainError("not-1-prime", msg);
}
inline DomainError ambiguous_chamber(const std::string& msg) {
    return DomainError("ambiguous-chamber", msg);
}
inline DomainError fit_failure(const std::string& msg) {
    return DomainError("fit-failed", msg);
}
inline DomainError non_integral(const std::string& msg) {
    return DomainError("non-integral", msg);
}
inline DomainError internal_error(const std::string& msg) {
    return DomainError("internal", msg);
}

} // namespace diocount
