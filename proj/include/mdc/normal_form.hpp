#pragma once

#include "mdc/matrix.hpp"

namespace mdc {

// Column-style Hermite normal form of a nonsingular n x n matrix M:
//   M * V = H,  V unimodular,  H upper triangular with h_ii > 0 and
//   0 <= h_ij < h_ii for j > i.
// H is the unique such matrix for the column lattice of M.
struct HermiteDecomposition {
    IntMatrix H;
    IntMatrix V;
};

HermiteDecomposition hermite_normal_form(const IntMatrix& m);

// Hermite form of a full-row-rank n x c matrix (c >= n):
//   W * V = [0 | H] with H as above.  Used for lattices given by more
//   generators than the ambient dimension (e.g. [M | A]).
struct LatticeHermite {
    IntMatrix transformed;  // n x c, first c-n columns zero
    IntMatrix V;            // c x c unimodular
    IntMatrix H;            // the right n x n block of `transformed`
};

LatticeHermite lattice_hermite(const IntMatrix& w);

// Smith normal form of a nonsingular n x n matrix M:
//   U * M * V = S = diag(s_1..s_n),  s_i > 0,  s_i | s_{i+1},
//   |det U| = |det V| = 1.
// divisors[k] = d_{k+1} = s_1 * ... * s_{k+1} (the determinantal divisors),
// so d_n = |det M|.
struct SmithDecomposition {
    IntMatrix U;
    IntMatrix S;
    IntMatrix V;
    Vec factors;   // s_1..s_n
    Vec divisors;  // d_1..d_n
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

// Invariant factors s_1..s_n (the diagonal of the Smith form).
Vec invariant_factors(const IntMatrix& m);

// Determinantal divisors d_1..d_n, d_k = gcd of all k x k minors, computed
// as running products of the invariant factors.
Vec determinantal_divisors(const IntMatrix& m);

// Direct minor-enumeration path for the determinantal divisors; exponential
// in n, so restricted to n <= 4.  Kept as an independent cross-check of
// `determinantal_divisors`.
Vec determinantal_divisors_by_minors(const IntMatrix& m);

}  // namespace mdc
