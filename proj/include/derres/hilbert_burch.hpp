// The length-two resolution of the determinantal quotient ring, together
// with its dg algebra product on the basis {1, e_i, T_i}, the dg axiom
// sweep, and the Golod product condition.

#pragma once

#include <map>
#include <string>
#include <utility>

#include "derres/complex.hpp"
#include "derres/determinantal.hpp"

namespace derres {

// Products of basis elements, stored for degree sums up to the top degree of
// the complex; everything above that is zero for degree reasons and products
// with the unit are implicit.
struct MultTable {
    std::map<std::pair<BasisLabel, BasisLabel>, ChainElement> entries;

    const ChainElement* find(const BasisLabel& a, const BasisLabel& b) const {
        auto it = entries.find({a, b});
        return it == entries.end() ? nullptr : &it->second;
    }
};

struct HilbertBurchAlgebra {
    int n = 0;
    GradedComplex complex;  // ranks 1, n+1, n; d1 = [F_1, -F_2, ...], d2 = X^T
    MultTable product;      // all (e_i, e_j) pairs

    int top_degree() const { return 2; }

    // Differential of a basis element as a chain element one degree down.
    ChainElement diff(const BasisLabel& label) const;
    ChainElement diff(const ChainElement& element) const;

    ChainElement multiply(const BasisLabel& a, const BasisLabel& b) const;
    ChainElement multiply(const BasisLabel& a, const ChainElement& element) const;
    ChainElement multiply(const ChainElement& element, const BasisLabel& b) const;

    std::vector<BasisLabel> basis(int degree) const;

private:
    friend HilbertBurchAlgebra build_hilbert_burch(const GenericMatrix&);
    std::map<BasisLabel, ChainElement> diffs_;
};

HilbertBurchAlgebra build_hilbert_burch(const GenericMatrix& g);

// Leibniz on all basis pairs, graded commutativity, odd squares, the unit
// law, associativity of triple products, and the agreement of the minor form
// of e_i*e_j with its partial-derivative form.
VerificationReport verify_dga(const HilbertBurchAlgebra& alg, const GenericMatrix& g);

// Every product of positive-degree basis elements must have all coordinates
// in the maximal ideal (zero constant term).
VerificationReport golod_condition_ring(const HilbertBurchAlgebra& alg);

// Lines "e[i]*e[j] = <chain element>", pairs sorted by (i, j).
std::string dump_product_table(const HilbertBurchAlgebra& alg);

}  // namespace derres
