#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace posetlie {

/// Coefficient ring: Z, Q or Z/p.
struct Coefficients {
    enum class Kind { Z, Q, Zp };
    Kind kind = Kind::Z;
    std::uint32_t p = 0;

    static Coefficients integers() { return {}; }
    static Coefficients rationals() { return {Kind::Q, 0}; }
    static Coefficients mod(std::uint32_t prime) { return {Kind::Zp, prime}; }

    /// Accepts "Z", "Q", "Zp:P" (also "Z_P" and "ZP").
    static Coefficients parse(const std::string& s);

    bool is_field() const { return kind != Kind::Z; }
    std::uint32_t characteristic() const { return kind == Kind::Zp ? p : 0; }
    std::string to_string() const;
    bool operator==(const Coefficients&) const = default;
};

bool is_prime(std::uint64_t n);

}  // namespace posetlie
