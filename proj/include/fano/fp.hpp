#ifndef FANO_FP_HPP
#define FANO_FP_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include "fano/rng.hpp"

namespace fano {

// Element of a prime field F_p, p an odd prime < 2^62.
//
// Each element carries its modulus so values from different fields cannot be
// mixed silently. A default-constructed element is the "unbound" zero (p = 0);
// it binds to the other operand's field on first use. Everything is exact,
// there is no floating point anywhere in this library.
struct Fp {
    std::uint64_t v = 0;
    std::uint64_t p = 0;

    bool is_zero() const { return v == 0; }

    friend std::uint64_t merge_mod(const Fp& a, const Fp& b) {
        if (a.p != 0 && b.p != 0 && a.p != b.p)
            throw std::logic_error("Fp: mixed moduli " + std::to_string(a.p) + " vs " + std::to_string(b.p));
        return a.p != 0 ? a.p : b.p;
    }

    friend Fp operator+(const Fp& a, const Fp& b) {
        std::uint64_t m = merge_mod(a, b);
        std::uint64_t s = a.v + b.v;
        if (m != 0 && s >= m) s -= m;
        return {s, m};
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        std::uint64_t m = merge_mod(a, b);
        std::uint64_t s = a.v >= b.v ? a.v - b.v : a.v + m - b.v;
        return {s, m};
    }
    friend Fp operator-(const Fp& a) {
        if (a.v == 0) return a;
        if (a.p == 0) throw std::logic_error("Fp: negating unbound element");
        return {a.p - a.v, a.p};
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        std::uint64_t m = merge_mod(a, b);
        if (m == 0) return {a.v * b.v, 0};
        return {static_cast<std::uint64_t>((unsigned __int128)a.v * b.v % m), m};
    }
    Fp inv() const {
        if (v == 0) throw std::domain_error("Fp: inverse of zero");
        if (p == 0) {
            if (v == 1) return {1, 0};
            throw std::logic_error("Fp: inverse of unbound element");
        }
        // extended Euclid; p prime so any nonzero v is invertible
        std::int64_t t = 0, newt = 1;
        std::int64_t r = (std::int64_t)p, newr = (std::int64_t)v;
        while (newr != 0) {
            std::int64_t q = r / newr;
            std::int64_t tmp = t - q * newt; t = newt; newt = tmp;
            tmp = r - q * newr; r = newr; newr = tmp;
        }
        if (t < 0) t += (std::int64_t)p;
        return {(std::uint64_t)t, p};
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inv(); }

    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }

    friend bool operator==(const Fp& a, const Fp& b) {
        merge_mod(a, b);
        return a.v == b.v;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }
};

inline Fp zero_like(const Fp& x) { return {0, x.p}; }
inline Fp one_like(const Fp& x) {
    if (x.p == 0) throw std::logic_error("Fp: one_like of unbound element");
    return {1, x.p};
}
inline bool has_field(const Fp& x) { return x.p != 0; }

bool is_prime_u64(std::uint64_t n);

// Factory for F_p elements; the library default is p = 32003.
// The geometry models all need odd p (Gram matrices halve off-diagonal
// coefficients); p = 2 is admitted only as the enumeration field of the
// semistability check.
struct PrimeField {
    std::uint64_t p;

    explicit PrimeField(std::uint64_t prime) : p(prime) {
        if (prime < 2 || prime >= (1ULL << 62) || !is_prime_u64(prime))
            throw std::invalid_argument("PrimeField: modulus must be a prime < 2^62, got " + std::to_string(prime));
    }

    Fp operator()(long long n) const {
        long long r = n % (long long)p;
        if (r < 0) r += (long long)p;
        return {(std::uint64_t)r, p};
    }
    Fp zero() const { return {0, p}; }
    Fp one() const { return {1, p}; }
    Fp half() const {
        if (p == 2) throw std::domain_error("PrimeField: 1/2 does not exist in characteristic 2");
        return {(p + 1) / 2, p};
    }
    Fp random(Rng& rng) const { return {rng.below(p), p}; }
    Fp random_nonzero(Rng& rng) const { return {1 + rng.below(p - 1), p}; }
};

constexpr std::uint64_t kDefaultPrime = 32003;

} // namespace fano

#endif
