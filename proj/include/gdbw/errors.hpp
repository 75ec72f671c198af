#pragma once

#include <stdexcept>
#include <string>

namespace gdbw {

// Error kinds surfaced verbatim through the CLI as machine-readable strings.
enum class errc {
    not_a_cycle,
    not_a_bwt_image,
    not_balanced,
    divisibility,
    dimension_mismatch,
    modulus_mismatch,
    digit_out_of_range,
    bound_exceeded,
    not_prime,
    not_invertible,
    not_strongly_connected,
    out_of_range,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::not_a_cycle: return "NotACycle";
        case errc::not_a_bwt_image: return "NotABwtImage";
        case errc::not_balanced: return "NotBalanced";
        case errc::divisibility: return "DivisibilityError";
        case errc::dimension_mismatch: return "DimensionMismatch";
        case errc::modulus_mismatch: return "ModulusMismatch";
        case errc::digit_out_of_range: return "DigitOutOfRange";
        case errc::bound_exceeded: return "BoundExceeded";
        case errc::not_prime: return "NotPrime";
        case errc::not_invertible: return "NotInvertible";
        case errc::not_strongly_connected: return "NotStronglyConnected";
        case errc::out_of_range: return "OutOfRange";
    }
    return "Unknown";
}

class DomainError : public std::runtime_error {
public:
    DomainError(errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    errc code() const noexcept { return code_; }
    const char* kind() const noexcept { return errc_name(code_); }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& message) {
    throw DomainError(code, message);
}

}  // namespace gdbw
