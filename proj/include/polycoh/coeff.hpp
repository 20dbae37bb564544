#pragma once

#include <string>

#include "polycoh/errors.hpp"

namespace polycoh {

enum class RingKind { Integers, Rationals, PrimeField };

inline bool is_prime(long n)
{
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Coefficient selector for every cohomology computation: Z, Q or Z/p.
struct CoeffRing {
    RingKind kind = RingKind::Integers;
    long p = 0;  // set iff kind == PrimeField

    static CoeffRing Z() { return {RingKind::Integers, 0}; }
    static CoeffRing Q() { return {RingKind::Rationals, 0}; }
    static CoeffRing Fp(long p)
    {
        if (!is_prime(p)) throw InputError("Z/p requires a prime p, got p=" + std::to_string(p));
        return {RingKind::PrimeField, p};
    }

    bool is_field() const { return kind != RingKind::Integers; }

    std::string name() const
    {
        switch (kind) {
            case RingKind::Integers: return "Z";
            case RingKind::Rationals: return "Q";
            default: return "Z/" + std::to_string(p);
        }
    }

    // Accepts "Z", "Q", "Z2", "Z/2", "Zp" spellings with p prime.
    static CoeffRing parse(const std::string& s)
    {
        if (s == "Z") return Z();
        if (s == "Q") return Q();
        if (s.size() >= 2 && s[0] == 'Z') {
            std::string digits = s[1] == '/' ? s.substr(2) : s.substr(1);
            if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos)
                return Fp(std::stol(digits));
        }
        throw InputError("unknown coefficient ring '" + s + "' (expected Z, Q or Z/p)");
    }

    bool operator==(const CoeffRing& o) const { return kind == o.kind && p == o.p; }
};

}  // namespace polycoh
