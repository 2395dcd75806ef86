#include "derres/coker.hpp"

#include <sstream>

namespace derres {

Polynomial DerivationVector::apply(const Polynomial& f) const {
    Polynomial out;
    for (const auto& [v, coeff] : coords) out += coeff * f.derivative(v);
    return out;
}

std::string DerivationVector::str() const {
    std::string out = name + ":";
    bool first = true;
    bool any = false;
    for (const auto& [v, coeff] : coords) {
        if (coeff.is_zero()) continue;
        any = true;
        std::string var = "d/dx[" + std::to_string(v.row) + "," + std::to_string(v.col) + "]";
        if (coeff.term_count() == 1) {
            auto [m, c] = coeff.leading();
            const bool neg = c < 0;
            mpz_class mag = neg ? mpz_class(-c) : c;
            out += first ? (neg ? " -" : " ") : (neg ? " - " : " + ");
            std::string body;
            if (!m.is_one()) {
                if (mag != 1) body += mag.get_str() + "*";
                body += m.str() + "*";
            } else {
                body += mag.get_str() + "*";
            }
            out += body + var;
        } else {
            out += first ? " " : " + ";
            out += "(" + coeff.str() + ")*" + var;
        }
        first = false;
    }
    if (!any) out += " 0";
    return out;
}

namespace {

ChainElement zero_chain(int degree) {
    ChainElement out;
    out.degree = degree;
    return out;
}

std::vector<BasisLabel> c_basis_order(int n) {
    std::vector<BasisLabel> out;
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= n; ++i)
            if (i != j) out.push_back(BasisLabel::c(i, j));
    for (int l = 2; l <= n; ++l) out.push_back(BasisLabel::c(l, l));
    return out;
}

}  // namespace

const std::vector<BasisLabel>& CokernelResolution::basis(int degree) const {
    switch (degree) {
        case 0: return basis0;
        case 1: return basis1;
        case 2: return basis2;
    }
    throw std::invalid_argument("module basis degree out of range");
}

ChainElement CokernelResolution::diff(const BasisLabel& label) const {
    auto it = diffs_.find(label);
    if (it == diffs_.end()) return zero_chain(label.degree() - 1);
    return it->second;
}

ChainElement CokernelResolution::diff(const ChainElement& element) const {
    ChainElement out = zero_chain(element.degree - 1);
    for (const auto& [label, coeff] : element.coords) out.axpy(coeff, diff(label));
    return out;
}

ChainElement CokernelResolution::act(const BasisLabel& algebra_label,
                                     const BasisLabel& module_label) const {
    const bool alg_ok = algebra_label.kind == LabelKind::Unit ||
                        (algebra_label.kind == LabelKind::E && algebra_label.i >= 1 &&
                         algebra_label.i <= n + 1) ||
                        (algebra_label.kind == LabelKind::T && algebra_label.i >= 1 &&
                         algebra_label.i <= n);
    const bool mod_ok =
        (module_label.kind == LabelKind::A && module_label.i >= 1 && module_label.i <= n + 1) ||
        (module_label.kind == LabelKind::B && module_label.i >= 1 && module_label.i <= n &&
         module_label.j >= 1 && module_label.j <= n + 1) ||
        (module_label.kind == LabelKind::C && module_label.i >= 1 && module_label.i <= n &&
         module_label.j >= 1 && module_label.j <= n && !(module_label.i == 1 && module_label.j == 1));
    if (!alg_ok || !mod_ok)
        throw std::invalid_argument("dg action on invalid label pair (" + algebra_label.str() +
                                    ", " + module_label.str() + ")");
    if (algebra_label.kind == LabelKind::Unit) {
        ChainElement out = zero_chain(module_label.degree());
        out.add(module_label, Polynomial(1L));
        return out;
    }
    const int degree = algebra_label.degree() + module_label.degree();
    if (degree > 2) return zero_chain(degree);
    if (const ChainElement* entry = action.find(algebra_label, module_label)) return *entry;
    return zero_chain(degree);
}

ChainElement CokernelResolution::act(const BasisLabel& algebra_label,
                                     const ChainElement& element) const {
    ChainElement out = zero_chain(algebra_label.degree() + element.degree);
    for (const auto& [label, coeff] : element.coords) out.axpy(coeff, act(algebra_label, label));
    return out;
}

PolyMatrix build_partial2(const GenericMatrix& g) {
    const int n = g.n;
    const std::size_t rows = static_cast<std::size_t>(n) * (n + 1);
    const std::vector<BasisLabel> cols = c_basis_order(n);
    PolyMatrix m(rows, cols.size());

    std::vector<std::string> row_labels;
    for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n + 1; ++k) row_labels.push_back(BasisLabel::b(j, k).str());
    std::vector<std::string> col_labels;
    for (const auto& c : cols) col_labels.push_back(c.str());

    auto row_of = [n](int j, int k) {
        return static_cast<std::size_t>(j - 1) * (n + 1) + (k - 1);
    };
    for (std::size_t col = 0; col < cols.size(); ++col) {
        const int i = cols[col].i, j = cols[col].j;
        if (i != j) {
            // column of the block A_j: x[i,u] in the rows of b[j,*]
            for (int u = 1; u <= n + 1; ++u)
                m.at(row_of(j, u), col) = Polynomial::variable(VariableIndex{i, u});
        } else {
            // appended column B_i: -x[1,s] against b[1,s], x[i,s] against b[i,s]
            for (int s = 1; s <= n + 1; ++s) {
                m.at(row_of(1, s), col) = -Polynomial::variable(VariableIndex{1, s});
                m.at(row_of(i, s), col) = Polynomial::variable(VariableIndex{i, s});
            }
        }
    }
    m.set_row_labels(std::move(row_labels));
    m.set_col_labels(std::move(col_labels));
    return m;
}

CokernelResolution build_coker_resolution(const GenericMatrix& g) {
    const int n = g.n;
    CokernelResolution coker;
    coker.n = n;

    for (int i = 1; i <= n + 1; ++i) coker.basis0.push_back(BasisLabel::a(i));
    for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n + 1; ++k) coker.basis1.push_back(BasisLabel::b(j, k));
    coker.basis2 = c_basis_order(n);

    PolyMatrix d1 = jacobian_transpose(g).matrix;
    {
        std::vector<std::string> rl, cl;
        for (const auto& l : coker.basis0) rl.push_back(l.str());
        for (const auto& l : coker.basis1) cl.push_back(l.str());
        d1.set_row_labels(std::move(rl));
        d1.set_col_labels(std::move(cl));
    }
    PolyMatrix d2 = build_partial2(g);
    coker.complex.name = "coker-resolution";
    coker.complex.diffs = {std::move(d1), std::move(d2)};

    for (const auto& b : coker.basis1) {
        ChainElement db = zero_chain(0);
        for (int l = 1; l <= n + 1; ++l)
            db.add(BasisLabel::a(l), g.minor(l).derivative(VariableIndex{b.i, b.j}));
        coker.diffs_[b] = std::move(db);
    }
    for (const auto& c : coker.basis2) {
        ChainElement dc = zero_chain(1);
        for (int l = 1; l <= n + 1; ++l)
            dc.add(BasisLabel::b(c.j, l), Polynomial::variable(VariableIndex{c.i, l}));
        if (c.i == c.j)
            for (int k = 1; k <= n + 1; ++k)
                dc.add(BasisLabel::b(1, k), -Polynomial::variable(VariableIndex{1, k}));
        coker.diffs_[c] = std::move(dc);
    }

    // e_i . a_j
    for (int i = 1; i <= n + 1; ++i)
        for (int j = 1; j <= n + 1; ++j) {
            ChainElement out = zero_chain(1);
            if (i != j) {
                const int sign = (j % 2 == 0) ? 1 : -1;
                for (int k = 1; k <= n; ++k) {
                    Polynomial coeff = Polynomial::variable(VariableIndex{k, j});
                    out.add(BasisLabel::b(k, i), sign > 0 ? coeff : -coeff);
                }
            } else {
                const int sign = (i % 2 == 1) ? 1 : -1;
                for (int k = 1; k <= n + 1; ++k) {
                    if (k == i) continue;
                    Polynomial coeff = Polynomial::variable(VariableIndex{1, k});
                    out.add(BasisLabel::b(1, k), sign > 0 ? coeff : -coeff);
                }
                for (int l = 2; l <= n; ++l) {
                    Polynomial coeff = Polynomial::variable(VariableIndex{l, i});
                    out.add(BasisLabel::b(l, i), sign > 0 ? -coeff : coeff);
                }
            }
            coker.action.entries[{BasisLabel::e(i), BasisLabel::a(j)}] = std::move(out);
        }

    // e_i . b_{j,k} = (-1)^{i+1} sum_l dF_i/dx[l,k] c[l,j], with c[1,1] dropped
    for (int i = 1; i <= n + 1; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n + 1; ++k) {
                ChainElement out = zero_chain(2);
                const int sign = (i % 2 == 1) ? 1 : -1;
                for (int l = 1; l <= n; ++l) {
                    if (l == 1 && j == 1) continue;
                    Polynomial coeff = g.minor(i).derivative(VariableIndex{l, k});
                    out.add(BasisLabel::c(l, j), sign > 0 ? coeff : -coeff);
                }
                coker.action.entries[{BasisLabel::e(i), BasisLabel::b(j, k)}] = std::move(out);
            }

    // T_i . a_j = (-1)^j sum_k x[k,j] c[i,k], with c[1,1] dropped
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n + 1; ++j) {
            ChainElement out = zero_chain(2);
            const int sign = (j % 2 == 0) ? 1 : -1;
            for (int k = 1; k <= n; ++k) {
                if (i == 1 && k == 1) continue;
                Polynomial coeff = Polynomial::variable(VariableIndex{k, j});
                out.add(BasisLabel::c(i, k), sign > 0 ? coeff : -coeff);
            }
            coker.action.entries[{BasisLabel::t(i), BasisLabel::a(j)}] = std::move(out);
        }

    return coker;
}

ChainElement dg_action(const CokernelResolution& coker, const BasisLabel& algebra_label,
                       const BasisLabel& module_label) {
    return coker.act(algebra_label, module_label);
}

DerivationVector column_as_derivation(const PolyMatrix& m, std::size_t col, int n,
                                      std::string name) {
    if (m.rows() != static_cast<std::size_t>(n) * (n + 1))
        throw std::invalid_argument("column_as_derivation: row count is not n(n+1)");
    DerivationVector d;
    d.name = std::move(name);
    std::size_t row = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n + 1; ++j) {
            const Polynomial& entry = m.at(row++, col);
            if (!entry.is_zero()) d.coords[VariableIndex{i, j}] = entry;
        }
    return d;
}

VerificationReport partial2_derivation_check(const GenericMatrix& g) {
    VerificationReport report;
    auto& result = report.add("second differential columns act as derivations killing the minors",
                              {{"n", g.n}});
    PolyMatrix d2 = build_partial2(g);
    for (std::size_t col = 0; col < d2.cols(); ++col) {
        DerivationVector delta = column_as_derivation(d2, col, g.n, d2.col_labels()[col]);
        for (int r = 1; r <= g.n + 1; ++r) {
            Polynomial value = delta.apply(g.minor(r));
            if (!value.is_zero())
                record_failure(result, delta.name + " applied to F[" + std::to_string(r) +
                                           "] = " + value.str());
        }
    }
    return report;
}

VerificationReport coker_descent_check(const GenericMatrix& g) {
    const int n = g.n;
    VerificationReport report;
    PolyMatrix jt = jacobian_transpose(g).matrix;
    auto jt_col = [&](int j, int k) {
        // column of J^T corresponding to d/dx[j,k]
        return static_cast<std::size_t>(j - 1) * (n + 1) + (k - 1);
    };

    auto& offdiag = report.add("coker descent: off-diagonal column combinations", {{"n", n}});
    for (int i = 1; i <= n + 1; ++i)
        for (int j = 1; j <= n + 1; ++j) {
            if (i == j) continue;
            for (int r = 1; r <= n + 1; ++r) {
                Polynomial lhs;
                for (int k = 1; k <= n; ++k)
                    lhs += Polynomial::variable(VariableIndex{k, i}) * jt.at(r - 1, jt_col(k, j));
                Polynomial rhs;
                if (r == i) rhs = ((i + j + 1) % 2 == 0) ? g.minor(j) : -g.minor(j);
                if (lhs != rhs) {
                    std::ostringstream os;
                    os << "(i,j,row)=(" << i << "," << j << "," << r << "): got " << lhs.str();
                    record_failure(offdiag, os.str());
                }
            }
        }

    auto& diag = report.add("coker descent: diagonal column combinations", {{"n", n}});
    for (int i = 1; i <= n; ++i)
        for (int r = 1; r <= n + 1; ++r) {
            Polynomial lhs;
            for (int u = 1; u <= n + 1; ++u) {
                if (u == i) continue;
                lhs += Polynomial::variable(VariableIndex{i, u}) * jt.at(r - 1, jt_col(i, u));
            }
            for (int k = 1; k <= n; ++k) {
                if (k == i) continue;
                lhs -= Polynomial::variable(VariableIndex{k, i}) * jt.at(r - 1, jt_col(k, i));
            }
            Polynomial rhs = (r == i) ? g.minor(i) : Polynomial();
            if (lhs != rhs) {
                std::ostringstream os;
                os << "(i,row)=(" << i << "," << r << "): got " << lhs.str();
                record_failure(diag, os.str());
            }
        }

    return report;
}

namespace {

// Product of an algebra chain with a module basis label, extending the basis
// action bilinearly.
ChainElement act_chain(const CokernelResolution& coker, const ChainElement& algebra_chain,
                       const BasisLabel& module_label) {
    ChainElement out;
    out.degree = algebra_chain.degree + module_label.degree();
    for (const auto& [label, coeff] : algebra_chain.coords)
        out.axpy(coeff, coker.act(label, module_label));
    return out;
}

}  // namespace

VerificationReport verify_dg_module(const CokernelResolution& coker,
                                    const HilbertBurchAlgebra& alg) {
    const int n = coker.n;
    VerificationReport report;

    auto& unit = report.add("dg module: unit law", {{"n", n}});
    for (int d = 0; d <= 2; ++d)
        for (const auto& u : coker.basis(d)) {
            ChainElement got = coker.act(BasisLabel::unit(), u);
            ChainElement expect = zero_chain(d);
            expect.add(u, Polynomial(1L));
            if (got != expect) record_failure(unit, "unit law fails on " + u.str());
        }

    // Leibniz d(a.u) = d(a).u + (-1)^{|a|} a.d(u) for every algebra basis
    // element of positive degree and every module basis element; exact over
    // the ambient polynomial ring.
    auto& leibniz = report.add("dg module: Leibniz rule", {{"n", n}});
    for (int da = 1; da <= 2; ++da)
        for (const auto& a : alg.basis(da))
            for (int du = 0; du <= 2; ++du)
                for (const auto& u : coker.basis(du)) {
                    ChainElement lhs = coker.diff(coker.act(a, u));
                    ChainElement rhs = act_chain(coker, alg.diff(a), u);
                    rhs.axpy(Polynomial(da % 2 == 0 ? 1L : -1L), coker.act(a, coker.diff(u)));
                    rhs.axpy(Polynomial(-1L), lhs);
                    if (!rhs.is_zero())
                        record_failure(leibniz, "Leibniz fails on (" + a.str() + ", " + u.str() +
                                                    "): difference = " + rhs.str());
                }

    // Associativity (x y).u = x.(y u) over all algebra basis pairs and all
    // module basis elements; only the (e_i e_j).a_k family is nontrivial.
    auto& assoc = report.add("dg module: associativity", {{"n", n}});
    for (int da = 1; da <= 2; ++da)
        for (int db = 1; db <= 2; ++db)
            for (const auto& a : alg.basis(da))
                for (const auto& b : alg.basis(db))
                    for (int du = 0; du <= 2; ++du)
                        for (const auto& u : coker.basis(du)) {
                            ChainElement lhs = act_chain(coker, alg.multiply(a, b), u);
                            ChainElement rhs = coker.act(a, coker.act(b, u));
                            if (lhs != rhs)
                                record_failure(assoc, "(" + a.str() + " " + b.str() + ")." +
                                                          u.str() + " != " + a.str() + ".(" +
                                                          b.str() + " " + u.str() + ")");
                        }

    report.append(golod_condition_module(coker, alg));

    // The alternative form of e_i.a_i built from any fixed row s differs from
    // the stored one by the differential of (-1)^{i+1} c[s,s].
    auto& alt = report.add("dg module: alternative diagonal action rows", {{"n", n}});
    for (int s = 1; s <= n; ++s)
        for (int i = 1; i <= n + 1; ++i) {
            ChainElement alternative = zero_chain(1);
            const int sign = (i % 2 == 1) ? 1 : -1;
            for (int k = 1; k <= n + 1; ++k) {
                if (k == i) continue;
                Polynomial coeff = Polynomial::variable(VariableIndex{s, k});
                alternative.add(BasisLabel::b(s, k), sign > 0 ? coeff : -coeff);
            }
            for (int l = 1; l <= n; ++l) {
                if (l == s) continue;
                Polynomial coeff = Polynomial::variable(VariableIndex{l, i});
                alternative.add(BasisLabel::b(l, i), sign > 0 ? -coeff : coeff);
            }
            alternative.axpy(Polynomial(-1L), coker.act(BasisLabel::e(i), BasisLabel::a(i)));
            ChainElement expect = zero_chain(1);
            if (s != 1) {
                expect = coker.diff(BasisLabel::c(s, s));
                for (auto& [label, coeff] : expect.coords)
                    if (sign < 0) coeff = -coeff;
            }
            if (alternative != expect)
                record_failure(alt, "row " + std::to_string(s) + ", e[" + std::to_string(i) +
                                        "].a[" + std::to_string(i) + "]");
        }

    return report;
}

VerificationReport golod_condition_module(const CokernelResolution& coker,
                                          const HilbertBurchAlgebra& alg) {
    VerificationReport report;
    auto& result = report.add("golod: positive-degree action lands in the maximal ideal",
                              {{"n", coker.n}});
    for (int da = 1; da <= 2; ++da)
        for (const auto& a : alg.basis(da))
            for (int du = 0; du <= 2; ++du)
                for (const auto& u : coker.basis(du)) {
                    ChainElement out = coker.act(a, u);
                    for (const auto& [label, coeff] : out.coords)
                        if (coeff.constant_term() != 0)
                            record_failure(result, a.str() + "." + u.str() +
                                                       " has unit coordinate on " + label.str());
                }
    return report;
}

std::string dump_action_table(const CokernelResolution& coker) {
    std::ostringstream os;
    for (const auto& [key, chain] : coker.action.entries)
        os << key.first.str() << "." << key.second.str() << " = " << chain.str() << "\n";
    return os.str();
}

}  // namespace derres
