#ifndef FANO_LINALG_HPP
#define FANO_LINALG_HPP

#include "fano/fp.hpp"
#include "fano/mat.hpp"
#include "fano/rat.hpp"
#include "fano/rng.hpp"

namespace fano {

using FMat = Mat<Fp>;
using QMat = Mat<Rat>;

inline FMat zeros(const PrimeField& K, int r, int c) { return FMat(r, c, K.zero()); }

inline FMat eye(const PrimeField& K, int n) {
    FMat m = zeros(K, n, n);
    for (int i = 0; i < n; ++i) m(i, i) = K.one();
    return m;
}

inline FMat random_mat(const PrimeField& K, int r, int c, Rng& rng) {
    FMat m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = K.random(rng);
    return m;
}

inline FMat random_symmetric(const PrimeField& K, int n, Rng& rng) {
    FMat m = zeros(K, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m(i, j) = m(j, i) = K.random(rng);
    return m;
}

inline FMat random_skew(const PrimeField& K, int n, Rng& rng) {
    FMat m = zeros(K, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            m(i, j) = K.random(rng);
            m(j, i) = -m(i, j);
        }
    return m;
}

// Exact determinant: Gaussian elimination over F_p, fraction-free Bareiss
// over the rationals.
inline Fp det(const PrimeField& K, const FMat& m) { return det_gauss(m, K.one()); }
inline Rat det(const QMat& m) { return det_bareiss(m, Rat(1)); }

inline Fp pfaffian(const PrimeField& K, const FMat& m) { return pfaffian(m, K.one()); }
inline Rat pfaffian(const QMat& m) { return pfaffian(m, Rat(1)); }

inline FMat random_invertible(const PrimeField& K, int n, Rng& rng) {
    for (int tries = 0; tries < 200; ++tries) {
        FMat m = random_mat(K, n, n, rng);
        if (!det(K, m).is_zero()) return m;
    }
    throw std::runtime_error("random_invertible: exhausted retries (field too small?)");
}

} // namespace fano

#endif
