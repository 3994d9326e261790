#ifndef FANO_JUMPING_HPP
#define FANO_JUMPING_HPP

#include "fano/hilbert.hpp"
#include "fano/monads.hpp"

namespace fano {

// Matrix of homogeneous degree-1 forms; rows/cols as in PolyMat, every
// nonzero entry of total degree exactly 1.
struct LinearFormMatrix {
    int nvars = 0;
    PolyMat m;
};

LinearFormMatrix make_linear_form_matrix(PolyMat m);

// The (k-1) x k matrix of linear forms on the line space P(U) attached to a
// quadric monad: entry (i, w) = sum_u A[i][w][u] x_u.  It is the tensor A
// itself reread as a sheaf map.
LinearFormMatrix jumping_lines_matrix(const PrimeField& K, const MonadData& m);

// The signed maximal minors of a (n-1) x n matrix of forms; the vector of
// minors spans the kernel: B . minors = 0 as an exact polynomial identity.
std::vector<FPoly> maximal_minors(const PrimeField& K, const LinearFormMatrix& b, Rng& rng);

// Degree of the jumping-lines curve from the Hilbert polynomial of
// 0 -> O(-k) -> W* (x) O(-1) -> I (x) O -> F -> 0 on P^3; the polynomial is
// linear in t and the leading coefficient is C(k, 2).
long jumping_curve_degree(int k);
QPoly jumping_curve_hilbert(int k);

// rank(B_E(u)) <= k - 2 at the given point of P(U)
bool point_is_jumping(const PrimeField& K, const MonadData& m, const FMat& u);

// The symmetric k x k matrix of linear forms on P(B*) attached to a V22 net
// (the net itself, reread blockwise), and its determinant: the curve of
// jumping conics, of degree k for generic splitting.
LinearFormMatrix jumping_conics_matrix(const PrimeField& K, const Net& n);
FPoly jumping_conics_curve(const PrimeField& K, const Net& n, Rng& rng);

} // namespace fano

#endif
