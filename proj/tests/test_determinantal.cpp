#include <doctest.h>

#include "derres/determinantal.hpp"

using namespace derres;

namespace {

Polynomial var(int i, int j) { return Polynomial::variable(VariableIndex{i, j}); }

}  // namespace

TEST_CASE("generic matrix construction") {
    CHECK_THROWS_AS(build_generic(1), std::invalid_argument);

    GenericMatrix g = build_generic(2);
    CHECK(g.X.rows() == 2);
    CHECK(g.X.cols() == 3);
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 3; ++j) CHECK(g.X.at(i - 1, j - 1) == var(i, j));

    CHECK(g.minor(1) == var(1, 2) * var(2, 3) - var(1, 3) * var(2, 2));
    CHECK(g.minor(2) == var(1, 1) * var(2, 3) - var(1, 3) * var(2, 1));
    CHECK(g.minor(3) == var(1, 1) * var(2, 2) - var(1, 2) * var(2, 1));

    GenericMatrix g3 = build_generic(3);
    for (int r = 1; r <= 4; ++r) {
        CHECK(g3.minor(r).term_count() == 6);
        CHECK(*g3.minor(r).degree() == 3);
        CHECK(g3.minor(r).is_homogeneous());
        CHECK(g3.minor(r).constant_term() == 0);
    }
}

TEST_CASE("jacobian transpose layout and entries") {
    GenericMatrix g = build_generic(2);
    JacobianTranspose jt = jacobian_transpose(g);
    CHECK(jt.matrix.rows() == 3);
    CHECK(jt.matrix.cols() == 6);

    const Polynomial expected[3][6] = {
        {Polynomial(), var(2, 3), -var(2, 2), Polynomial(), -var(1, 3), var(1, 2)},
        {var(2, 3), Polynomial(), -var(2, 1), -var(1, 3), Polynomial(), var(1, 1)},
        {var(2, 2), -var(2, 1), Polynomial(), -var(1, 2), var(1, 1), Polynomial()}};
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 6; ++c) CHECK(jt.matrix.at(r, c) == expected[r][c]);

    CHECK(jt.matrix.row_labels() ==
          std::vector<std::string>{"F[1]", "F[2]", "F[3]"});
    CHECK(jt.matrix.col_labels() ==
          std::vector<std::string>{"x[1,1]", "x[1,2]", "x[1,3]", "x[2,1]", "x[2,2]", "x[2,3]"});
}

TEST_CASE("jacobian entries are homogeneous and vanish on deleted columns") {
    for (int n = 2; n <= 4; ++n) {
        GenericMatrix g = build_generic(n);
        JacobianTranspose jt = jacobian_transpose(g);
        for (int i = 1; i <= n + 1; ++i)
            for (int j = 1; j <= n; ++j)
                for (int k = 1; k <= n + 1; ++k) {
                    const Polynomial& entry =
                        jt.matrix.at(i - 1, static_cast<std::size_t>(j - 1) * (n + 1) + k - 1);
                    CHECK(entry.is_homogeneous());
                    if (!entry.is_zero()) CHECK(*entry.degree() == n - 1);
                    if (k == i) CHECK(entry.is_zero());
                }
    }
}

TEST_CASE("signed subminors") {
    GenericMatrix g = build_generic(2);
    CHECK(signed_subminor(g, {1, 2}, {1}) == var(2, 3));
    for (int r = 1; r <= 3; ++r) CHECK(signed_subminor(g, {r}, {}) == g.minor(r));
    CHECK_THROWS_AS(signed_subminor(g, {1, 2, 3}, {}), std::invalid_argument);
    CHECK_THROWS_AS(signed_subminor(g, {1}, {1, 1}), std::invalid_argument);
}

TEST_CASE("identity sweeps pass exhaustively") {
    for (int n = 2; n <= 3; ++n) {
        GenericMatrix g = build_generic(n);
        VerificationReport report = check_identities(g);
        CHECK(report.all_passed());
    }
}

TEST_CASE("identity spot values from the 2x3 case") {
    GenericMatrix g = build_generic(2);

    // identity (3) with i=2, j=l=1 sums to -F_2
    Polynomial sum;
    for (int r = 1; r <= 3; ++r) {
        if (r == 2) continue;
        Polynomial term = g.minor(r).derivative(VariableIndex{1, 2}) * var(1, r);
        if (r % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    CHECK(sum == -g.minor(2));

    // identity (1) with i=s=1, r=1 is the row expansion of F_1
    Polynomial euler_row;
    for (int u = 1; u <= 3; ++u)
        euler_row += var(1, u) * g.minor(1).derivative(VariableIndex{1, u});
    CHECK(euler_row == g.minor(1));
}

TEST_CASE("variety points kill every minor") {
    std::mt19937_64 rng(41);
    const std::uint64_t prime = 2147483647ull;
    for (int n = 2; n <= 4; ++n) {
        GenericMatrix g = build_generic(n);
        for (int trial = 0; trial < 5; ++trial) {
            PrimeFieldAssignment pt = random_variety_point(g, prime, rng);
            for (int r = 1; r <= n + 1; ++r) CHECK(specialize(g.minor(r), pt) == 0);
        }
    }
}
