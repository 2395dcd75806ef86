#include "derres/hilbert_burch.hpp"

#include <sstream>

namespace derres {

namespace {

ChainElement zero_chain(int degree) {
    ChainElement out;
    out.degree = degree;
    return out;
}

}  // namespace

ChainElement HilbertBurchAlgebra::diff(const BasisLabel& label) const {
    auto it = diffs_.find(label);
    if (it == diffs_.end()) return zero_chain(label.degree() - 1);
    return it->second;
}

ChainElement HilbertBurchAlgebra::diff(const ChainElement& element) const {
    ChainElement out = zero_chain(element.degree - 1);
    for (const auto& [label, coeff] : element.coords) out.axpy(coeff, diff(label));
    return out;
}

ChainElement HilbertBurchAlgebra::multiply(const BasisLabel& a, const BasisLabel& b) const {
    if (a.kind == LabelKind::Unit) {
        ChainElement out = zero_chain(b.degree());
        out.add(b, Polynomial(1L));
        return out;
    }
    if (b.kind == LabelKind::Unit) {
        ChainElement out = zero_chain(a.degree());
        out.add(a, Polynomial(1L));
        return out;
    }
    const int degree = a.degree() + b.degree();
    if (degree > top_degree()) return zero_chain(degree);
    if (const ChainElement* entry = product.find(a, b)) return *entry;
    return zero_chain(degree);
}

ChainElement HilbertBurchAlgebra::multiply(const BasisLabel& a, const ChainElement& element) const {
    ChainElement out = zero_chain(a.degree() + element.degree);
    for (const auto& [label, coeff] : element.coords) out.axpy(coeff, multiply(a, label));
    return out;
}

ChainElement HilbertBurchAlgebra::multiply(const ChainElement& element, const BasisLabel& b) const {
    ChainElement out = zero_chain(element.degree + b.degree());
    for (const auto& [label, coeff] : element.coords) out.axpy(coeff, multiply(label, b));
    return out;
}

std::vector<BasisLabel> HilbertBurchAlgebra::basis(int degree) const {
    std::vector<BasisLabel> out;
    if (degree == 0) out.push_back(BasisLabel::unit());
    if (degree == 1)
        for (int i = 1; i <= n + 1; ++i) out.push_back(BasisLabel::e(i));
    if (degree == 2)
        for (int i = 1; i <= n; ++i) out.push_back(BasisLabel::t(i));
    return out;
}

HilbertBurchAlgebra build_hilbert_burch(const GenericMatrix& g) {
    const int n = g.n;
    HilbertBurchAlgebra alg;
    alg.n = n;

    PolyMatrix d1(1, static_cast<std::size_t>(n) + 1);
    std::vector<std::string> e_labels;
    for (int i = 1; i <= n + 1; ++i) {
        d1.at(0, i - 1) = (i % 2 == 1) ? g.minor(i) : -g.minor(i);
        e_labels.push_back(BasisLabel::e(i).str());
    }
    d1.set_row_labels({BasisLabel::unit().str()});
    d1.set_col_labels(e_labels);

    PolyMatrix d2 = g.X.transpose();
    std::vector<std::string> t_labels;
    for (int k = 1; k <= n; ++k) t_labels.push_back(BasisLabel::t(k).str());
    d2.set_row_labels(e_labels);
    d2.set_col_labels(t_labels);

    alg.complex.name = "hilbert-burch";
    alg.complex.diffs = {std::move(d1), std::move(d2)};

    for (int i = 1; i <= n + 1; ++i) {
        ChainElement de;
        de.degree = 0;
        de.add(BasisLabel::unit(), (i % 2 == 1) ? g.minor(i) : -g.minor(i));
        alg.diffs_[BasisLabel::e(i)] = std::move(de);
    }
    for (int k = 1; k <= n; ++k) {
        ChainElement dt;
        dt.degree = 1;
        for (int l = 1; l <= n + 1; ++l)
            dt.add(BasisLabel::e(l), Polynomial::variable(VariableIndex{k, l}));
        alg.diffs_[BasisLabel::t(k)] = std::move(dt);
    }

    // e_i * e_j = sum_k (-1)^{i+j+k} det X^k_{i,j} T_k for i < j, extended
    // antisymmetrically; squares are zero.
    for (int i = 1; i <= n + 1; ++i)
        for (int j = 1; j <= n + 1; ++j) {
            ChainElement prod;
            prod.degree = 2;
            if (i != j) {
                const int lo = std::min(i, j), hi = std::max(i, j);
                const int outer_sign = i < j ? 1 : -1;
                for (int k = 1; k <= n; ++k) {
                    Polynomial coeff = signed_subminor(g, {lo, hi}, {k});
                    int s = ((lo + hi + k) % 2 == 0 ? 1 : -1) * outer_sign;
                    prod.add(BasisLabel::t(k), s > 0 ? coeff : -coeff);
                }
            }
            alg.product.entries[{BasisLabel::e(i), BasisLabel::e(j)}] = std::move(prod);
        }
    return alg;
}

VerificationReport verify_dga(const HilbertBurchAlgebra& alg, const GenericMatrix& g) {
    const int n = alg.n;
    VerificationReport report;

    auto& comm = report.add("dg algebra: graded commutativity and odd squares", {{"n", n}});
    for (int i = 1; i <= n + 1; ++i)
        for (int j = 1; j <= n + 1; ++j) {
            ChainElement ab = alg.multiply(BasisLabel::e(i), BasisLabel::e(j));
            ChainElement ba = alg.multiply(BasisLabel::e(j), BasisLabel::e(i));
            ChainElement sum = ab;
            sum.axpy(Polynomial(1L), ba);  // odd degrees: ab = -ba
            if (!sum.is_zero())
                record_failure(comm, "e[" + std::to_string(i) + "]*e[" + std::to_string(j) +
                                         "] + e[" + std::to_string(j) + "]*e[" +
                                         std::to_string(i) + "] = " + sum.str());
            if (i == j && !ab.is_zero())
                record_failure(comm, "e[" + std::to_string(i) + "]^2 = " + ab.str());
        }

    auto& unit = report.add("dg algebra: unit law", {{"n", n}});
    for (int d = 0; d <= 2; ++d)
        for (const auto& label : alg.basis(d)) {
            ChainElement left = alg.multiply(BasisLabel::unit(), label);
            ChainElement right = alg.multiply(label, BasisLabel::unit());
            ChainElement expect;
            expect.degree = d;
            expect.add(label, Polynomial(1L));
            if (left != expect || right != expect)
                record_failure(unit, "unit law fails on " + label.str());
        }

    // Leibniz d(a*b) = d(a)*b + (-1)^{|a|} a*d(b) on every basis pair of
    // positive degrees.
    auto& leibniz = report.add("dg algebra: Leibniz rule", {{"n", n}});
    for (int da = 1; da <= 2; ++da)
        for (int db = 1; db <= 2; ++db)
            for (const auto& a : alg.basis(da))
                for (const auto& b : alg.basis(db)) {
                    ChainElement lhs = alg.diff(alg.multiply(a, b));
                    ChainElement rhs = alg.multiply(alg.diff(a), b);
                    ChainElement tail = alg.multiply(a, alg.diff(b));
                    rhs.axpy(Polynomial(da % 2 == 0 ? 1L : -1L), tail);
                    rhs.axpy(Polynomial(-1L), lhs);
                    if (!rhs.is_zero())
                        record_failure(leibniz, "Leibniz fails on (" + a.str() + ", " + b.str() +
                                                    "): difference = " + rhs.str());
                }

    auto& assoc = report.add("dg algebra: associativity", {{"n", n}});
    for (int i = 1; i <= n + 1; ++i)
        for (int j = 1; j <= n + 1; ++j)
            for (int k = 1; k <= n + 1; ++k) {
                ChainElement lhs =
                    alg.multiply(alg.multiply(BasisLabel::e(i), BasisLabel::e(j)), BasisLabel::e(k));
                ChainElement rhs =
                    alg.multiply(BasisLabel::e(i), alg.multiply(BasisLabel::e(j), BasisLabel::e(k)));
                if (lhs != rhs)
                    record_failure(assoc, "(e e) e != e (e e) at (" + std::to_string(i) + "," +
                                              std::to_string(j) + "," + std::to_string(k) + ")");
            }

    // The minor form of e_i*e_j agrees with the partial-derivative form
    // (-1)^{i+1} sum_k dF_i/dx[k,j] T_k; antisymmetry makes the sign uniform
    // across i < j and i > j.
    auto& partial_form = report.add("dg algebra: product partial-derivative form", {{"n", n}});
    for (int i = 1; i <= n + 1; ++i)
        for (int j = 1; j <= n + 1; ++j) {
            if (i == j) continue;
            ChainElement expect;
            expect.degree = 2;
            const int sign = i % 2 == 1 ? 1 : -1;
            for (int k = 1; k <= n; ++k) {
                Polynomial coeff = g.minor(i).derivative(VariableIndex{k, j});
                expect.add(BasisLabel::t(k), sign > 0 ? coeff : -coeff);
            }
            if (alg.multiply(BasisLabel::e(i), BasisLabel::e(j)) != expect)
                record_failure(partial_form, "forms disagree on e[" + std::to_string(i) + "]*e[" +
                                                 std::to_string(j) + "]");
        }

    return report;
}

VerificationReport golod_condition_ring(const HilbertBurchAlgebra& alg) {
    VerificationReport report;
    auto& result = report.add("golod: positive-degree products land in the maximal ideal",
                              {{"n", alg.n}});
    for (int da = 1; da <= 2; ++da)
        for (int db = 1; db <= 2; ++db)
            for (const auto& a : alg.basis(da))
                for (const auto& b : alg.basis(db)) {
                    ChainElement prod = alg.multiply(a, b);
                    for (const auto& [label, coeff] : prod.coords)
                        if (coeff.constant_term() != 0)
                            record_failure(result, a.str() + "*" + b.str() + " has unit coordinate on " +
                                                       label.str());
                }
    return report;
}

std::string dump_product_table(const HilbertBurchAlgebra& alg) {
    std::ostringstream os;
    for (int i = 1; i <= alg.n + 1; ++i)
        for (int j = 1; j <= alg.n + 1; ++j) {
            ChainElement prod = alg.multiply(BasisLabel::e(i), BasisLabel::e(j));
            os << "e[" << i << "]*e[" << j << "] = " << prod.str() << "\n";
        }
    return os.str();
}

}  // namespace derres
