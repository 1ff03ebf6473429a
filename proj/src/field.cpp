#include "grassmap/field.hpp"

#include <stdexcept>

namespace grassmap {

namespace {

Scalar mulmod(Scalar a, Scalar b, Scalar m) {
    return static_cast<Scalar>(static_cast<unsigned __int128>(a) * b % m);
}

Scalar powmod(Scalar a, Scalar e, Scalar m) {
    Scalar r = 1 % m;
    a %= m;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

PrimeField::PrimeField(Scalar p) : p_(p) {
    if (p >= (Scalar{1} << 62))
        throw std::invalid_argument("modulus too large (must be < 2^62)");
    if (!is_prime(p))
        throw std::invalid_argument("modulus is not prime");
}

Scalar PrimeField::pow(Scalar a, Scalar e) const noexcept {
    return powmod(a, e, p_);
}

Scalar PrimeField::inv(Scalar a) const {
    if (a == 0) throw std::domain_error("zero inverse");
    // p prime, so a^(p-2) works for every nonzero a.
    return powmod(a, p_ - 2, p_);
}

Scalar PrimeField::from_int(long long v) const noexcept {
    if (v >= 0) return static_cast<Scalar>(v) % p_;
    Scalar m = static_cast<Scalar>(-(v + 1)) + 1; // |v| without overflow on LLONG_MIN
    return neg(m % p_);
}

bool PrimeField::is_prime(Scalar n) {
    if (n < 2) return false;
    for (Scalar q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    Scalar d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // This witness set is deterministic for all n < 3.3 * 10^24.
    for (Scalar a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        Scalar x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

} // namespace grassmap
