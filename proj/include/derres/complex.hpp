// Graded complexes of labeled polynomial matrices: composition and
// minimality checks, probabilistic rank probes over a prime field, and the
// rank-additivity half of the acyclicity criterion.

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "derres/polymatrix.hpp"
#include "derres/report.hpp"

namespace derres {

enum class LabelKind : std::uint8_t { Unit, E, T, A, B, C };

// Basis element of one homological degree of the algebra resolution
// (1, e_i, T_i) or of the cokernel resolution (a_i, b_{i,j}, c_{i,j}).
// c[1,1] is not a valid label: that coordinate is zero by convention.
struct BasisLabel {
    LabelKind kind = LabelKind::Unit;
    int i = 0;
    int j = 0;

    friend auto operator<=>(const BasisLabel&, const BasisLabel&) = default;

    std::string str() const;
    int degree() const;  // homological degree within its complex

    static BasisLabel unit() { return {LabelKind::Unit, 0, 0}; }
    static BasisLabel e(int i) { return {LabelKind::E, i, 0}; }
    static BasisLabel t(int i) { return {LabelKind::T, i, 0}; }
    static BasisLabel a(int i) { return {LabelKind::A, i, 0}; }
    static BasisLabel b(int i, int j) { return {LabelKind::B, i, j}; }
    static BasisLabel c(int i, int j) { return {LabelKind::C, i, j}; }
};

// Finitely supported element of one degree of a labeled complex.
struct ChainElement {
    int degree = 0;
    std::map<BasisLabel, Polynomial> coords;

    bool is_zero() const;
    void add(const BasisLabel& label, const Polynomial& coeff);
    void axpy(const Polynomial& scale, const ChainElement& other);

    // "x[2,3]*T[1] - x[1,3]*T[2]"; multi-term coefficients are parenthesized.
    std::string str() const;

    friend bool operator==(const ChainElement&, const ChainElement&) = default;
};

struct GradedComplex {
    std::string name;
    // diffs[k] maps degree k+1 to degree k; row/col labels carried on the matrices.
    std::vector<PolyMatrix> diffs;

    int top() const { return static_cast<int>(diffs.size()); }
    const PolyMatrix& diff(int degree) const;  // 1 <= degree <= top
    std::size_t rank_of_term(int degree) const;
};

// d_i o d_{i+1} must vanish entrywise, either exactly (no generators) or with
// zero normal form against the generators.  Failures are reported as
// (degree, row, col) witnesses.
VerificationReport compose_check(const GradedComplex& c,
                                 const std::vector<Polynomial>* modulo_gens = nullptr);

// Passes iff no differential entry has a nonzero constant term.
VerificationReport minimality_check(const GradedComplex& c);

struct RankProbe {
    std::size_t max_rank = 0;
    std::vector<std::size_t> trial_ranks;
    std::uint64_t prime = 0;
    std::uint64_t seed = 0;

    bool all_trials_hit(std::size_t bound) const;
    // The probe value is always a lower bound for the generic rank; it is
    // certified against a predicted value once some trial reaches it.
    bool certifies(std::size_t bound) const { return max_rank == bound; }
};

// Max rank over `trials` random specializations of the matrix over the prime
// field; a certified lower bound for the generic rank.  Requires prime > 2^30
// and trials >= 1.
RankProbe rank_probe(const PolyMatrix& m, std::uint64_t prime, int trials, std::uint64_t seed);

// Rank-additivity condition: with term ranks f_1..f_s and matrix ranks
// r_1..r_s (r_{s+1} = 0), checks f_i = r_i + r_{i+1} for all i.
VerificationReport be_condition_one(const GradedComplex& c, const std::vector<std::size_t>& ranks);

}  // namespace derres
