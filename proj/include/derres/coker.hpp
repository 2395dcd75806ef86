// The length-two resolution of the Jacobian cokernel: first differential the
// transposed Jacobian, second differential assembled from the column blocks
// A_k (X^T with column k removed) and the appended columns B_l, together
// with the dg module action of the Hilbert-Burch algebra on it.

#pragma once

#include "derres/complex.hpp"
#include "derres/determinantal.hpp"
#include "derres/hilbert_burch.hpp"

namespace derres {

// A derivation written as a coordinate vector: the polynomial coefficient of
// d/dx[i,j] per variable.
struct DerivationVector {
    std::string name;
    std::map<VariableIndex, Polynomial> coords;

    Polynomial apply(const Polynomial& f) const;
    std::string str() const;  // "name: x[2,1]*d/dx[1,1] + ..."

    friend bool operator==(const DerivationVector&, const DerivationVector&) = default;
};

struct CokernelResolution {
    int n = 0;
    GradedComplex complex;  // ranks n+1, n(n+1), (n-1)(n+1); d1 = J^T, d2 = partial2
    MultTable action;       // (e_i, a_j), (e_i, b_{j,k}), (T_i, a_j) entries

    // Basis orders: a[1..n+1]; b row-major; c in the column order of the
    // second differential (off-diagonal blocks first, then the diagonal
    // columns c[l,l] for l = 2..n; c[1,1] does not exist).
    std::vector<BasisLabel> basis0, basis1, basis2;
    const std::vector<BasisLabel>& basis(int degree) const;

    ChainElement diff(const BasisLabel& label) const;
    ChainElement diff(const ChainElement& element) const;

    // Action of an algebra basis label on a module basis label or chain;
    // degree sums above 2 act as zero.  Throws std::invalid_argument on
    // labels that belong to neither complex.
    ChainElement act(const BasisLabel& algebra_label, const BasisLabel& module_label) const;
    ChainElement act(const BasisLabel& algebra_label, const ChainElement& element) const;

private:
    friend CokernelResolution build_coker_resolution(const GenericMatrix&);
    std::map<BasisLabel, ChainElement> diffs_;
};

// The n(n+1) x (n-1)(n+1) second differential, columns labeled by the c
// basis; every column, read as a derivation, annihilates every maximal minor.
PolyMatrix build_partial2(const GenericMatrix& g);

CokernelResolution build_coker_resolution(const GenericMatrix& g);

ChainElement dg_action(const CokernelResolution& coker, const BasisLabel& algebra_label,
                       const BasisLabel& module_label);

// Each column of the second differential, read as a derivation via the
// correspondence b[i,j] <-> d/dx[i,j], must send every minor to zero exactly.
VerificationReport partial2_derivation_check(const GenericMatrix& g);

// The column-combination identities showing that every minor-scaled standard
// basis vector lies in the column span of the transposed Jacobian:
//   sum_k x[k,i] col(b_{k,j}) = (-1)^{i+j+1} F_j e_i   for i != j, and
//   sum_{u != i} x[i,u] col(b_{i,u}) - sum_{k != i} x[k,i] col(b_{k,i}) = F_i e_i.
VerificationReport coker_descent_check(const GenericMatrix& g);

// Leibniz on all pairs, unit law, associativity of all triple products, the
// Golod module condition, and the alternative-row form of the e_i.a_i action.
VerificationReport verify_dg_module(const CokernelResolution& coker,
                                    const HilbertBurchAlgebra& alg);

// Every action coordinate of positive-degree algebra elements has zero
// constant term.
VerificationReport golod_condition_module(const CokernelResolution& coker,
                                          const HilbertBurchAlgebra& alg);

// Column of a labeled matrix as a derivation, rows indexed like the b basis.
DerivationVector column_as_derivation(const PolyMatrix& m, std::size_t col, int n,
                                      std::string name);

// Lines "e[i].b[j,k] = <chain element>" for every stored action pair.
std::string dump_action_table(const CokernelResolution& coker);

}  // namespace derres
