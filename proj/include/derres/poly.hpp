// Exact sparse multivariate polynomial arithmetic over the integers.
//
// The variables are the entries x[i,j] of a generic matrix, ordered
// row-major: x[1,1] precedes x[1,2] precedes ... precedes x[n,n+1].
// The term order is lexicographic with that precedence (x[1,1] most
// significant), a "diagonal" order: the leading term of every maximal
// minor of the generic matrix is its main-diagonal product.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace derres {

struct VariableIndex {
    int row = 0;  // 1-based
    int col = 0;  // 1-based

    friend auto operator<=>(const VariableIndex&, const VariableIndex&) = default;

    std::string str() const;  // "x[i,j]"
};

// Product of variable powers; exponents are positive, entries sorted by variable.
class Monomial {
public:
    using Exponents = std::vector<std::pair<VariableIndex, int>>;

    Monomial() = default;
    explicit Monomial(VariableIndex v, int exp = 1);
    explicit Monomial(Exponents exps);  // sorts and drops zero exponents

    bool is_one() const { return exps_.empty(); }
    int degree() const;
    int exponent_of(VariableIndex v) const;
    const Exponents& exponents() const { return exps_; }

    Monomial times(const Monomial& other) const;
    bool divides(const Monomial& other) const;
    Monomial divided_into(const Monomial& other) const;  // other / *this

    std::string str() const;  // "x[1,2]*x[2,3]^2", "1" when empty

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    Exponents exps_;
};

// Lexicographic term order with row-major variable precedence.
struct TermOrder {
    enum class Kind { LexRowMajor };
    Kind kind = Kind::LexRowMajor;

    // <0, 0, >0 as a precedes, equals, follows b.
    static int compare(const Monomial& a, const Monomial& b);
};

struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return TermOrder::compare(a, b) < 0;
    }
};

class Polynomial {
public:
    using TermMap = std::map<Monomial, mpz_class, MonomialLess>;

    Polynomial() = default;
    explicit Polynomial(long value);
    explicit Polynomial(const mpz_class& value);
    Polynomial(const Monomial& m, const mpz_class& coeff);

    static Polynomial variable(VariableIndex v);
    static Polynomial parse(std::string_view text);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Total degree; nullopt for the zero polynomial (degree minus infinity).
    std::optional<int> degree() const;
    bool is_homogeneous() const;
    mpz_class constant_term() const;

    // Largest term under the term order; throws std::domain_error on zero.
    std::pair<Monomial, mpz_class> leading() const;

    void add_term(const Monomial& m, const mpz_class& coeff);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const mpz_class& scalar);

    Polynomial derivative(VariableIndex v) const;

    std::string str() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    TermMap terms_;
};

Polynomial operator+(Polynomial lhs, const Polynomial& rhs);
Polynomial operator-(Polynomial lhs, const Polynomial& rhs);
Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
Polynomial operator*(const mpz_class& scalar, Polynomial p);

// Remainder of multivariate division of p by gens under the fixed term order.
// No term of the result is divisible by the leading term of any generator,
// and p minus the result lies in the ideal generated by gens.  With the
// diagonal term order the maximal minors form a Groebner basis, so a zero
// remainder against them certifies ideal membership.
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& gens);

// Exact quotient num/den; throws std::domain_error if den does not divide num.
Polynomial divide_exact(const Polynomial& num, const Polynomial& den);

// Point of the prime field k^{n(n+1)}, values already reduced mod prime.
struct PrimeFieldAssignment {
    std::uint64_t prime = 0;
    std::map<VariableIndex, std::uint64_t> values;
};

// Exact evaluation in the prime field; throws std::invalid_argument listing
// the first missing assignment.
std::uint64_t specialize(const Polynomial& p, const PrimeFieldAssignment& assignment);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t prime);

}  // namespace derres
