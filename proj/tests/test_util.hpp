#pragma once

#include <random>

#include "derres/poly.hpp"

namespace derres::testutil {

// Small random polynomial in the variables of an n x (n+1) grid.
inline Polynomial random_poly(std::mt19937_64& rng, int n = 2, int max_terms = 4,
                              int max_degree = 3) {
    std::uniform_int_distribution<int> terms(0, max_terms);
    std::uniform_int_distribution<int> degree(0, max_degree);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> row(1, n);
    std::uniform_int_distribution<int> col(1, n + 1);
    Polynomial out;
    const int count = terms(rng);
    for (int t = 0; t < count; ++t) {
        Monomial::Exponents exps;
        const int d = degree(rng);
        for (int k = 0; k < d; ++k) exps.emplace_back(VariableIndex{row(rng), col(rng)}, 1);
        out.add_term(Monomial(std::move(exps)), mpz_class(coeff(rng)));
    }
    return out;
}

inline VariableIndex random_var(std::mt19937_64& rng, int n = 2) {
    std::uniform_int_distribution<int> row(1, n);
    std::uniform_int_distribution<int> col(1, n + 1);
    return VariableIndex{row(rng), col(rng)};
}

inline Monomial random_monomial(std::mt19937_64& rng, int n = 2, int max_degree = 3) {
    std::uniform_int_distribution<int> degree(0, max_degree);
    Monomial::Exponents exps;
    const int d = degree(rng);
    for (int k = 0; k < d; ++k) exps.emplace_back(random_var(rng, n), 1);
    return Monomial(std::move(exps));
}

}  // namespace derres::testutil
