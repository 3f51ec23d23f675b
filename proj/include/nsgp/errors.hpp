#ifndef NSGP_ERRORS_HPP
#define NSGP_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nsgp {

// Every library error carries a short machine-parsable code alongside the
// human-readable message.  The CLI maps codes to exit statuses.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

inline Error gcd_not_one(const std::string& msg) { return Error("GcdNotOne", msg); }
inline Error empty_generators() { return Error("EmptyGenerators", "generator list is empty"); }
inline Error not_an_element(const std::string& msg) { return Error("NotAnElement", msg); }
inline Error explosion_guard(const std::string& msg) { return Error("ExplosionGuard", msg); }
inline Error single_generator(const std::string& msg) { return Error("SingleGenerator", msg); }
inline Error overflow_error(const std::string& msg) { return Error("Overflow", msg); }
inline Error not_stable(const std::string& msg) { return Error("NotStable", msg); }
inline Error identity_mismatch(const std::string& msg) { return Error("IdentityMismatch", msg); }
inline Error table_too_short(const std::string& msg) { return Error("TableTooShort", msg); }
inline Error not_two_generated(const std::string& msg) { return Error("NotTwoGenerated", msg); }
inline Error anchor_unverified(const std::string& msg) { return Error("AnchorUnverified", msg); }
inline Error no_decomposition(const std::string& msg) { return Error("NoDecomposition", msg); }
inline Error invalid_argument(const std::string& msg) { return Error("InvalidArgument", msg); }

// Checked 64-bit arithmetic; all series/invariant coefficients are exact.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw overflow_error("integer addition overflowed 64 bits");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw overflow_error("integer multiplication overflowed 64 bits");
    return r;
}

}  // namespace nsgp

#endif
