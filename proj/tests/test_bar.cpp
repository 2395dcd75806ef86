#include <doctest.h>

#include "derres/bar.hpp"
#include "derres/emit.hpp"
#include "derres/golden.hpp"

using namespace derres;

namespace {

struct Setup {
    GenericMatrix g;
    HilbertBurchAlgebra alg;
    CokernelResolution coker;
    BarResolution bar;

    explicit Setup(int n)
        : g(build_generic(n)),
          alg(build_hilbert_burch(g)),
          coker(build_coker_resolution(g)),
          bar(g, alg, coker) {}
};

Polynomial var(int i, int j) { return Polynomial::variable(VariableIndex{i, j}); }

}  // namespace

TEST_CASE("bar term ranks") {
    Setup s(2);
    CHECK(s.bar.term_basis(0).size() == 3);
    CHECK(s.bar.term_basis(1).size() == 6);
    CHECK(s.bar.term_basis(2).size() == 12);
    CHECK(s.bar.term_basis(3).size() == 24);

    for (const BarWord& w : s.bar.term_basis(0)) {
        CHECK(w.word_length() == 0);
        CHECK(w.module_label.kind == LabelKind::A);
    }

    // degree 2 splits as 3 bare module words plus 9 one-factor words
    std::size_t bare = 0, tensor = 0;
    for (const BarWord& w : s.bar.term_basis(2)) (w.word_length() == 0 ? bare : tensor) += 1;
    CHECK(bare == 3);
    CHECK(tensor == 9);
}

TEST_CASE("bar term ranks satisfy the two-term recurrence") {
    for (int n = 2; n <= 4; ++n) {
        Setup s(n);
        std::vector<std::size_t> ranks;
        for (int r = 0; r <= 8; ++r) ranks.push_back(s.bar.term_basis(r).size());
        for (int r = 2; r <= 8; ++r)
            CHECK(ranks[r] == ranks[r - 1] + static_cast<std::size_t>(n) * ranks[r - 2]);
        // and they agree with the series of the cokernel
        std::vector<mpz_class> series = coker_poincare_coefficients(n, 8);
        for (int r = 0; r <= 8; ++r)
            CHECK(mpz_class(static_cast<long>(ranks[r])) == series[static_cast<std::size_t>(r)]);
    }
}

TEST_CASE("degree-1 bar differential is the transposed jacobian") {
    for (int n = 2; n <= 3; ++n) {
        Setup s(n);
        const PolyMatrix& d1 = s.bar.differential(1);
        PolyMatrix jt = jacobian_transpose(s.g).matrix;
        REQUIRE(d1.rows() == jt.rows());
        REQUIRE(d1.cols() == jt.cols());
        for (std::size_t r = 0; r < d1.rows(); ++r)
            for (std::size_t c = 0; c < d1.cols(); ++c) CHECK(d1.at(r, c) == jt.at(r, c));
    }
}

TEST_CASE("degree-2 bar differential matches the printed matrix") {
    Setup s(2);
    CHECK(matrix_text(s.bar.differential(2)) == golden::bar2_n2);

    // and its left block is the second differential of the module resolution
    PolyMatrix d2 = s.bar.differential(2);
    PolyMatrix partial2 = build_partial2(s.g);
    for (std::size_t r = 0; r < partial2.rows(); ++r)
        for (std::size_t c = 0; c < partial2.cols(); ++c)
            CHECK(d2.at(r, c) == partial2.at(r, c));
}

TEST_CASE("degree-3 bar differential block structure") {
    Setup s(2);
    const PolyMatrix& d3 = s.bar.differential(3);
    REQUIRE(d3.rows() == 12);
    REQUIRE(d3.cols() == 24);

    const std::vector<BarWord>& rows = s.bar.term_basis(2);
    const std::vector<BarWord>& cols = s.bar.term_basis(3);
    auto row_index = [&](const std::string& str) {
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (rows[i].str() == str) return i;
        FAIL("missing row ", str);
        return std::size_t(0);
    };

    for (std::size_t c = 0; c < cols.size(); ++c) {
        const BarWord& w = cols[c];
        REQUIRE(w.word_length() == 1);
        if (w.factors[0].kind == LabelKind::E && w.module_label.kind == LabelKind::B) {
            // rows e_u|a_l carry the jacobian block for u = i
            const int i = w.factors[0].i;
            for (int u = 1; u <= 3; ++u)
                for (int l = 1; l <= 3; ++l) {
                    BarWord target{{BasisLabel::e(u)}, BasisLabel::a(l)};
                    Polynomial expected;
                    if (u == i)
                        expected = s.g.minor(l).derivative(
                            VariableIndex{w.module_label.i, w.module_label.j});
                    CHECK(d3.at(row_index(target.str()), c) == expected);
                }
            // rows c[*] carry the action of e_i on b
            ChainElement action = s.coker.act(w.factors[0], w.module_label);
            for (const auto& cw : s.bar.term_basis(2))
                if (cw.word_length() == 0) {
                    auto it = action.coords.find(cw.module_label);
                    Polynomial expected = it == action.coords.end() ? Polynomial() : it->second;
                    CHECK(d3.at(row_index(cw.str()), c) == expected);
                }
        } else {
            REQUIRE(w.factors[0].kind == LabelKind::T);
            REQUIRE(w.module_label.kind == LabelKind::A);
            // rows e_u|a_l carry minus the algebra second differential
            const int i = w.factors[0].i;
            const int j = w.module_label.i;
            for (int u = 1; u <= 3; ++u)
                for (int l = 1; l <= 3; ++l) {
                    BarWord target{{BasisLabel::e(u)}, BasisLabel::a(l)};
                    Polynomial expected;
                    if (l == j) expected = -var(i, u);
                    CHECK(d3.at(row_index(target.str()), c) == expected);
                }
        }
    }
}

TEST_CASE("bar composites vanish modulo the ideal") {
    Setup s(2);
    VerificationReport report = verify_bar(s.bar, 4, 2147483647ull, 20, 0);
    CHECK(report.all_passed());
}

TEST_CASE("generator extraction at n = 2") {
    Setup s(2);
    DerivationPresentation pres = truncate_to_der(s.bar);
    REQUIRE(pres.generators.size() == 12);

    std::vector<std::string> names;
    for (const auto& gen : pres.generators) names.push_back(gen.name);
    CHECK(names == std::vector<std::string>{"V[2,1]", "V[1,2]", "B[2]", "L[1,1]", "L[1,2]",
                                            "L[1,3]", "L[2,1]", "L[2,2]", "L[2,3]", "L[3,1]",
                                            "L[3,2]", "L[3,3]"});

    for (const auto& gen : pres.generators)
        for (int r = 1; r <= 3; ++r) {
            Polynomial value = gen.apply(s.g.minor(r));
            CHECK(normal_form(value, s.g.ideal_gens()).is_zero());
        }

    CHECK(pres.relations.rows() == 12);
    CHECK(pres.relations.cols() == 24);
}

TEST_CASE("generator counts scale as 2n(n+1)") {
    for (int n = 2; n <= 5; ++n) {
        Setup s(n);
        CHECK(truncate_to_der(s.bar).generators.size() == 2ull * n * (n + 1));
    }
}

TEST_CASE("euler derivation decomposes over the generators") {
    for (int n : {2, 5}) CHECK(euler_identity(build_generic(n)).all_passed());
}

TEST_CASE("betti series") {
    std::vector<mpz_class> n2 = poincare_coefficients(2, 4);
    CHECK(n2 == std::vector<mpz_class>{mpz_class(12), mpz_class(24), mpz_class(48), mpz_class(96),
                                       mpz_class(192)});
    std::vector<mpz_class> n3 = poincare_coefficients(3, 3);
    CHECK(n3 == std::vector<mpz_class>{mpz_class(24), mpz_class(60), mpz_class(132), mpz_class(312)});

    std::vector<mpz_class> coker2 = coker_poincare_coefficients(2, 4);
    CHECK(coker2 == std::vector<mpz_class>{mpz_class(3), mpz_class(6), mpz_class(12), mpz_class(24),
                                           mpz_class(48)});

    // the bar term ranks realize the series shifted by two
    for (int n = 2; n <= 3; ++n) {
        Setup s(n);
        std::vector<mpz_class> series = poincare_coefficients(n, 4);
        for (int r = 0; r <= 4; ++r)
            CHECK(mpz_class(static_cast<long>(s.bar.term_basis(r + 2).size())) ==
                  series[static_cast<std::size_t>(r)]);
    }
}

TEST_CASE("linearity at n = 2") {
    Setup s(2);
    CHECK(linearity_check(s.bar, 5).all_passed());

    Setup s3(3);
    CHECK_THROWS_AS(linearity_check(s3.bar, 3), std::invalid_argument);

    PolyMatrix synthetic(1, 2);
    synthetic.at(0, 0) = s.g.minor(1);
    synthetic.at(0, 1) = var(1, 1);
    std::vector<std::string> witnesses = nonlinear_entries(synthetic);
    REQUIRE(witnesses.size() == 1);
    CHECK(witnesses.front().find("(1,1)") != std::string::npos);
}

TEST_CASE("bar word display labels") {
    BarWord ea{{BasisLabel::e(2)}, BasisLabel::a(3)};
    CHECK(ea.display_label() == "L[2,3]");
    CHECK(ea.str() == "e[2]|a[3]");
    BarWord c{{}, BasisLabel::c(2, 1)};
    CHECK(c.display_label() == "c[2,1]");
    BarWord eb{{BasisLabel::e(1)}, BasisLabel::b(2, 3)};
    CHECK(eb.display_label() == "e[1]|b[2,3]");
}
