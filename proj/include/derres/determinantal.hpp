// The generic n x (n+1) matrix X, its maximal minors F_r, the transposed
// Jacobian of the minors, and exhaustive checks of the minor/partial
// identities that drive every construction downstream.

#pragma once

#include <random>
#include <vector>

#include "derres/poly.hpp"
#include "derres/polymatrix.hpp"
#include "derres/report.hpp"

namespace derres {

struct GenericMatrix {
    int n = 0;
    PolyMatrix X;                   // n x (n+1), entry (i,j) = x[i,j]
    std::vector<Polynomial> minors; // F_1..F_{n+1}, F_r = det of X with column r deleted

    const std::vector<Polynomial>& ideal_gens() const { return minors; }
    const Polynomial& minor(int r) const { return minors.at(static_cast<std::size_t>(r) - 1); }
};

// Throws std::invalid_argument for n < 2.
GenericMatrix build_generic(int n);

struct JacobianTranspose {
    // (n+1) x n(n+1); row i is indexed by F_i, column (j,k) by x[j,k] in
    // row-major order; entry (i,(j,k)) = dF_i/dx[j,k].
    PolyMatrix matrix;
};

JacobianTranspose jacobian_transpose(const GenericMatrix& g);

// det of X with the listed columns and rows deleted (plain determinant, no
// Laplace sign; callers supply signs).  Throws std::invalid_argument if the
// deletion does not leave a nonempty square matrix.
Polynomial signed_subminor(const GenericMatrix& g, const std::vector<int>& delete_cols,
                           const std::vector<int>& delete_rows);

// Exhaustive exact check of the four minor/partial identities and the swap
// identity over all valid index tuples:
//   (1) sum_u x[i,u] dF_r/dx[s,u] = delta_{i,s} F_r
//   (2) sum_k x[k,i] dF_i/dx[k,j] = (-1)^{i+j+1} F_j          (i != j)
//   (3) sum_{r != i} (-1)^r dF_r/dx[j,i] x[l,r] = delta_{j,l} (-1)^{i+1} F_i
//   (4) sum_l dF_i/dx[l,k] x[l,t] = 0                         (i,k,t distinct)
//   swap: dF_i/dx[k,j] = (-1)^{i+j+1} dF_j/dx[k,i]            (i != j)
VerificationReport check_identities(const GenericMatrix& g);

// Uniformly random assignment of all n(n+1) variables.
PrimeFieldAssignment random_point(const GenericMatrix& g, std::uint64_t prime,
                                  std::mt19937_64& rng);

// Random point of the determinantal variety: X specializes to a product of
// random n x (n-1) and (n-1) x (n+1) matrices, so every maximal minor
// vanishes there.
PrimeFieldAssignment random_variety_point(const GenericMatrix& g, std::uint64_t prime,
                                          std::mt19937_64& rng);

}  // namespace derres
