#pragma once

#include <cstdint>

namespace grassmap {

using Scalar = std::uint64_t;

/// Arithmetic in the prime field F_p for a word-sized prime modulus p.
/// Every value is kept reduced to [0, p). Instances are immutable and
/// freely copyable; two fields compare equal iff their moduli do.
class PrimeField {
public:
    /// 2^61 - 1, the default modulus of the verification harness.
    static constexpr Scalar default_prime = (Scalar{1} << 61) - 1;
    /// 2^31 - 1, the smallest modulus the verification suites accept
    /// outside toy mode.
    static constexpr Scalar min_verify_prime = (Scalar{1} << 31) - 1;

    /// Throws std::invalid_argument unless p is prime and p < 2^62.
    explicit PrimeField(Scalar p);

    Scalar modulus() const noexcept { return p_; }

    Scalar reduce(Scalar a) const noexcept { return a % p_; }
    Scalar add(Scalar a, Scalar b) const noexcept {
        Scalar s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Scalar sub(Scalar a, Scalar b) const noexcept {
        return a >= b ? a - b : a + p_ - b;
    }
    Scalar neg(Scalar a) const noexcept { return a == 0 ? 0 : p_ - a; }
    Scalar mul(Scalar a, Scalar b) const noexcept {
        return static_cast<Scalar>(static_cast<unsigned __int128>(a) * b % p_);
    }
    Scalar pow(Scalar a, Scalar e) const noexcept;
    /// Multiplicative inverse; throws std::domain_error("zero inverse") on 0.
    Scalar inv(Scalar a) const;

    /// Embeds a signed integer, e.g. -2 for a polynomial coefficient.
    Scalar from_int(long long v) const noexcept;

    bool operator==(const PrimeField&) const = default;

    /// Deterministic Miller-Rabin, valid for all 64-bit inputs.
    static bool is_prime(Scalar n);

private:
    Scalar p_;
};

} // namespace grassmap
