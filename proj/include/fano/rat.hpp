#ifndef FANO_RAT_HPP
#define FANO_RAT_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace fano {

// Arbitrary-precision rational, a thin value wrapper around GMP's mpq.
// Used for the fraction-free determinant mode and for Hilbert polynomial
// arithmetic; the samplers all work over F_p.
struct Rat {
    mpq_class q;

    Rat() : q(0) {}
    Rat(long long n) : q((long)n) {}
    Rat(long long n, long long d) : q((long)n, (long)d) {
        if (d == 0) throw std::domain_error("Rat: zero denominator");
        q.canonicalize();
    }
    explicit Rat(mpq_class v) : q(std::move(v)) { q.canonicalize(); }

    bool is_zero() const { return q == 0; }
    bool is_integer() const { return q.get_den() == 1; }

    Rat inv() const {
        if (is_zero()) throw std::domain_error("Rat: inverse of zero");
        return Rat(mpq_class(1) / q);
    }

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q + b.q)); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q - b.q)); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q * b.q)); }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero()) throw std::domain_error("Rat: division by zero");
        return Rat(mpq_class(a.q / b.q));
    }
    friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.q)); }

    Rat& operator+=(const Rat& o) { q += o.q; return *this; }
    Rat& operator-=(const Rat& o) { q -= o.q; return *this; }
    Rat& operator*=(const Rat& o) { q *= o.q; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q == b.q; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.q != b.q; }

    std::string str() const { return q.get_str(); }
};

inline Rat zero_like(const Rat&) { return Rat(); }
inline Rat one_like(const Rat&) { return Rat(1); }
inline bool has_field(const Rat&) { return true; }

struct RationalField {
    Rat operator()(long long n) const { return Rat(n); }
    Rat zero() const { return Rat(); }
    Rat one() const { return Rat(1); }
};

} // namespace fano

#endif
