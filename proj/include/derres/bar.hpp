// The relative bar resolution of the Jacobian cokernel over the determinantal
// ring, assembled from the Hilbert-Burch algebra and its module action on the
// cokernel resolution.  Truncating at the second term presents the derivation
// module: generators are read off the columns of [partial2 | M], and the
// power series of the expected ranks comes from a two-term recurrence.

#pragma once

#include "derres/coker.hpp"
#include "derres/hilbert_burch.hpp"

namespace derres {

// Basis word of the bar construction: a sequence of shifted algebra factors
// (each e or T) followed by a module basis element.  The homological degree
// is the sum of the shifted factor degrees plus the module degree.
struct BarWord {
    std::vector<BasisLabel> factors;
    BasisLabel module_label;

    int word_length() const { return static_cast<int>(factors.size()); }
    int degree() const;

    std::string str() const;            // "e[1]|b[2,3]", bare module label when no factors
    std::string display_label() const;  // "L[i,j]" for e_i tensor a_j, else str()

    friend bool operator==(const BarWord&, const BarWord&) = default;
};

class BarResolution {
public:
    BarResolution(const GenericMatrix& g, const HilbertBurchAlgebra& alg,
                  const CokernelResolution& coker)
        : g_(&g), alg_(&alg), coker_(&coker) {}

    int n() const { return g_->n; }
    const GenericMatrix& generic() const { return *g_; }

    // Basis of the r-th term in canonical order: words sorted by factor
    // count, then composition, then per-slot basis position.
    const std::vector<BarWord>& term_basis(int r) const;

    // Matrix of the differential from term r to term r-1 over the ambient
    // ring; its reduction modulo the minor ideal is the bar differential.
    const PolyMatrix& differential(int r) const;

    // The complex d_1..d_rmax packaged for composition/minimality checks.
    GradedComplex as_graded_complex(int rmax) const;

private:
    const GenericMatrix* g_;
    const HilbertBurchAlgebra* alg_;
    const CokernelResolution* coker_;
    // Construction is deterministic; caches grow monotonically per degree.
    mutable std::map<int, std::vector<BarWord>> basis_cache_;
    mutable std::map<int, PolyMatrix> diff_cache_;
};

// d_{r-1} o d_r vanishes modulo the minor ideal for 2 <= r <= rmax, certified
// by normal-form reduction and by >= `points` random specializations on the
// determinantal variety, with the two oracles agreeing entry by entry; every
// differential is minimal; and the cokernel-resolution block of d_2 composes
// to zero exactly over the ambient ring.
VerificationReport verify_bar(const BarResolution& bar, int rmax, std::uint64_t prime,
                              int points, std::uint64_t seed);

struct DerivationPresentation {
    std::vector<DerivationVector> generators;  // V[i,k], B[l], L[i,j]
    PolyMatrix relations;                      // the degree-3 bar differential
};

// Reads the 2n(n+1) generators of the derivation module off the columns of
// the degree-2 bar differential.
DerivationPresentation truncate_to_der(const BarResolution& bar);

// Exact identity expressing the Euler derivation over the generator set:
// E = n * sum_k (-1)^{k+1} L[k,k] + (n+1) * sum_{l>=2} B[l].
VerificationReport euler_identity(const GenericMatrix& g);

// Power series coefficients b_0..b_degree of n(n+1)(2+nt)/(1-t-n t^2) via
// b_i = b_{i-1} + n b_{i-2}; these are the expected ranks of the truncated
// resolution.
std::vector<mpz_class> poincare_coefficients(int n, int degree);

// Series (n+1)(1+(n-1)t)/(1-t-n t^2) of the cokernel: the bar term ranks.
std::vector<mpz_class> coker_poincare_coefficients(int n, int degree);

// At n = 2 every nonzero differential entry through the given degree must be
// plus or minus a single variable.  Throws std::invalid_argument when n != 2.
VerificationReport linearity_check(const BarResolution& bar, int max_degree);

// Witnesses of entries that are not zero or +-(single variable).
std::vector<std::string> nonlinear_entries(const PolyMatrix& m);

}  // namespace derres
