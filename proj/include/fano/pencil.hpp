#ifndef FANO_PENCIL_HPP
#define FANO_PENCIL_HPP

#include "fano/fpoly.hpp"

namespace fano {

// Pencil of quadrics in P^5: two 6x6 symmetric matrices, not proportional.
struct Pencil {
    FMat q1, q2;
};

Pencil make_pencil(const PrimeField& K, FMat q1, FMat q2);

// det(lambda Q1 + mu Q2): the binary sextic whose six roots are the
// degenerate members of the pencil (the branch points of the genus-2 cover).
FPoly branch_sextic(const PrimeField& K, const Pencil& p, Rng& rng);

// degree exactly 6 and squarefree (exact binary-form test)
bool is_smooth_pencil(const PrimeField& K, const Pencil& p, Rng& rng);
bool sextic_is_squarefree(const PrimeField& K, const FPoly& f);

} // namespace fano

#endif
