#ifndef FANO_TENSOR_HPP
#define FANO_TENSOR_HPP

#include <array>
#include <utility>
#include <vector>

#include "fano/geometry.hpp"
#include "fano/linalg.hpp"

namespace fano {

// ---------------------------------------------------------------------------
// Wedge-square bookkeeping on a 4-dimensional space U, with the invariant
// splitting  Lambda^2 U = V (+) <omega>  for the standard symplectic 2-form
// omega = e0^e2 + e1^e3.  Basis of Lambda^2 U is ordered lex: pairs (i<j).
// ---------------------------------------------------------------------------

// lex order on pairs: (0,1)(0,2)(0,3)(1,2)(1,3)(2,3)
inline int wedge_index4(int i, int j) {
    static const int table[4][4] = {
        {-1, 0, 1, 2},
        {-1, -1, 3, 4},
        {-1, -1, -1, 5},
        {-1, -1, -1, -1},
    };
    return i < j ? table[i][j] : table[j][i];
}

struct SpinSplit {
    PrimeField K;
    FMat omega_gram;   // 4x4 skew Gram of omega on U
    FMat omega_coords; // 6x1 coordinates of omega in the wedge basis
    FMat v_basis;      // 6x5, columns span V = { v : v ^ omega = 0 }
    FMat p_v;          // 6x6 projection onto V along <omega>
    FMat p_omega;      // 6x6 projection onto <omega> along V
    FMat coord_v;      // 5x6: coordinates of the V-component in the v_basis columns

    Fp pair(const FMat& u, const FMat& v) const { // omega(u, v), u and v as 4x1 columns
        return (u.transpose() * omega_gram * v)(0, 0);
    }
};

// Coefficient of e0^e1^e2^e3 in x ^ y for 2-forms given by 6-coordinate columns.
Fp wedge_top_coeff(const FMat& x, const FMat& y);

// Plucker coordinates of p ^ q for two 4x1 columns.
FMat plucker(const PrimeField& K, const FMat& p, const FMat& q);

SpinSplit build_spin_split(const PrimeField& K);

// ---------------------------------------------------------------------------
// Elements of I (x) W (x) U, stored as one dimW x dimU slice per I-index.
// ---------------------------------------------------------------------------

struct Tensor3 {
    int dim_i = 0, dim_w = 0, dim_u = 0;
    std::vector<FMat> slices;

    static Tensor3 zero(const PrimeField& K, int di, int dw, int du) {
        Tensor3 t;
        t.dim_i = di;
        t.dim_w = dw;
        t.dim_u = du;
        t.slices.assign(di, zeros(K, dw, du));
        return t;
    }

    Fp at(int i, int w, int u) const { return slices[i](w, u); }
    Fp& at(int i, int w, int u) { return slices[i](w, u); }

    friend bool operator==(const Tensor3& a, const Tensor3& b) {
        return a.dim_i == b.dim_i && a.dim_w == b.dim_w && a.dim_u == b.dim_u && a.slices == b.slices;
    }
};

enum class Parity { Symmetric, Skew };

struct Duality {
    FMat m;
    Parity parity;
};

// Checks squareness, invertibility and the declared parity.
Duality make_duality(const PrimeField& K, FMat m, Parity parity);

// ---------------------------------------------------------------------------
// Nets of quadrics: symmetric k x k arrays of B-coordinates, embedded as one
// big bilinear form on I (x) U.  For V5 the 3-dimensional B sits in
// Lambda^2 U (dim U = 5, skew Grams, skew ambient form); for V22 the space
// B^* sits in S^2 U (dim U = 4, symmetric Grams, symmetric ambient form).
// ---------------------------------------------------------------------------

struct Net {
    Geometry geom = Geometry::V5;
    int k = 0;
    int dim_u = 0;
    std::vector<FMat> b_gram;                       // 3 Gram matrices of the B basis
    std::vector<std::vector<std::array<Fp, 3>>> c;  // c[i][j][b] = c[j][i][b]

    static Net zero(const PrimeField& K, Geometry g, int k);

    Fp coeff(int i, int j, int b) const { return c[i][j][b]; }
    void set_coeff(int i, int j, int b, const Fp& v) {
        c[i][j][b] = v;
        c[j][i][b] = v;
    }

    // The (k dimU) x (k dimU) matrix of the embedded form; exactly skew for
    // V5 and symmetric for V22.
    FMat ambient(const PrimeField& K) const;
};

// The quadric structural condition: the coordinates of A D A^t in the
// obstruction component Lambda^2 I (x) V.  Returns 5 * C(dimI, 2) field
// elements; a monad datum solves the equations iff they are all zero.
std::vector<Fp> project_condition(const PrimeField& K, const Tensor3& a, const Duality& d, const SpinSplit& spin);

// The V-coordinates of the pair condition for rows (i, j) only.
FMat pair_condition(const PrimeField& K, const Tensor3& a, const Duality& d, const SpinSplit& spin, int i, int j);

} // namespace fano

#endif
