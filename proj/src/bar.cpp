#include "derres/bar.hpp"

#include <sstream>
#include <unordered_map>

namespace derres {

int BarWord::degree() const {
    int d = module_label.degree();
    for (const auto& f : factors) d += f.degree() + 1;
    return d;
}

std::string BarWord::str() const {
    std::string out;
    for (const auto& f : factors) out += f.str() + "|";
    out += module_label.str();
    return out;
}

std::string BarWord::display_label() const {
    if (factors.size() == 1 && factors[0].kind == LabelKind::E &&
        module_label.kind == LabelKind::A)
        return "L[" + std::to_string(factors[0].i) + "," + std::to_string(module_label.i) + "]";
    return str();
}

namespace {

// Compositions of shifted degrees: factor degrees in {1,2}, enumerated in
// lexicographic order for a fixed length.
void enumerate_compositions(int length, std::vector<int>& current,
                            std::vector<std::vector<int>>& out) {
    if (static_cast<int>(current.size()) == length) {
        out.push_back(current);
        return;
    }
    for (int d = 1; d <= 2; ++d) {
        current.push_back(d);
        enumerate_compositions(length, current, out);
        current.pop_back();
    }
}

}  // namespace

const std::vector<BarWord>& BarResolution::term_basis(int r) const {
    if (auto it = basis_cache_.find(r); it != basis_cache_.end()) return it->second;
    if (r < 0) throw std::invalid_argument("bar term degree must be nonnegative");

    std::vector<BarWord> words;
    const int max_length = r / 2;  // each factor contributes at least 2 to the degree
    for (int p = 0; p <= max_length; ++p) {
        std::vector<std::vector<int>> compositions;
        std::vector<int> scratch;
        enumerate_compositions(p, scratch, compositions);
        for (const auto& comp : compositions) {
            int shifted = 0;
            for (int d : comp) shifted += d + 1;
            const int module_degree = r - shifted;
            if (module_degree < 0 || module_degree > 2) continue;

            // Nested enumeration, leftmost slot most significant.
            std::vector<BarWord> partial;
            partial.push_back(BarWord{{}, BasisLabel::unit()});
            for (int slot = 0; slot < p; ++slot) {
                std::vector<BarWord> next;
                for (const auto& w : partial)
                    for (const auto& f : alg_->basis(comp[slot])) {
                        BarWord grown = w;
                        grown.factors.push_back(f);
                        next.push_back(std::move(grown));
                    }
                partial = std::move(next);
            }
            for (const auto& w : partial)
                for (const auto& u : coker_->basis(module_degree)) {
                    BarWord word = w;
                    word.module_label = u;
                    words.push_back(std::move(word));
                }
        }
    }
    return basis_cache_.emplace(r, std::move(words)).first->second;
}

const PolyMatrix& BarResolution::differential(int r) const {
    if (auto it = diff_cache_.find(r); it != diff_cache_.end()) return it->second;
    if (r < 1) throw std::invalid_argument("bar differential degree must be positive");

    const std::vector<BarWord>& domain = term_basis(r);
    const std::vector<BarWord>& target = term_basis(r - 1);
    std::unordered_map<std::string, std::size_t> row_of;
    row_of.reserve(target.size());
    for (std::size_t i = 0; i < target.size(); ++i) row_of.emplace(target[i].str(), i);

    PolyMatrix m(target.size(), domain.size());
    auto add_term = [&](const BarWord& word, int sign, const Polynomial& coeff, std::size_t col) {
        if (coeff.is_zero()) return;
        auto it = row_of.find(word.str());
        if (it == row_of.end())
            throw std::logic_error("bar differential produced a word outside the target basis: " +
                                   word.str());
        m.at(it->second, col) += sign > 0 ? coeff : -coeff;
    };

    for (std::size_t col = 0; col < domain.size(); ++col) {
        const BarWord& w = domain[col];
        const int p = w.word_length();

        // prefix[k] = sum of shifted degrees of the factors left of slot k
        std::vector<int> prefix(static_cast<std::size_t>(p) + 1, 0);
        for (int k = 0; k < p; ++k) prefix[k + 1] = prefix[k] + w.factors[k].degree() + 1;

        // internal differentials of the factors (degree-one factors die in
        // the reduced construction: their boundary is a scalar)
        for (int k = 0; k < p; ++k) {
            if (w.factors[k].kind != LabelKind::T) continue;
            ChainElement boundary = alg_->diff(w.factors[k]);
            for (const auto& [label, coeff] : boundary.coords) {
                BarWord image = w;
                image.factors[k] = label;
                add_term(image, (prefix[k] + 1) % 2 == 0 ? 1 : -1, coeff, col);
            }
        }

        // differential of the module part
        {
            ChainElement boundary = coker_->diff(w.module_label);
            for (const auto& [label, coeff] : boundary.coords) {
                BarWord image = w;
                image.module_label = label;
                add_term(image, prefix[p] % 2 == 0 ? 1 : -1, coeff, col);
            }
        }

        // products of adjacent factors
        for (int k = 0; k + 1 < p; ++k) {
            ChainElement product = alg_->multiply(w.factors[k], w.factors[k + 1]);
            for (const auto& [label, coeff] : product.coords) {
                BarWord image;
                image.factors.assign(w.factors.begin(), w.factors.end());
                image.factors.erase(image.factors.begin() + k + 1);
                image.factors[k] = label;
                image.module_label = w.module_label;
                add_term(image, (prefix[k] + w.factors[k].degree()) % 2 == 0 ? 1 : -1, coeff, col);
            }
        }

        // action of the last factor on the module part
        if (p > 0) {
            ChainElement acted = coker_->act(w.factors[p - 1], w.module_label);
            for (const auto& [label, coeff] : acted.coords) {
                BarWord image;
                image.factors.assign(w.factors.begin(), w.factors.end() - 1);
                image.module_label = label;
                add_term(image, prefix[p - 1] % 2 == 0 ? 1 : -1, coeff, col);
            }
        }
    }

    std::vector<std::string> row_labels, col_labels;
    for (const auto& word : target) row_labels.push_back(word.display_label());
    for (const auto& word : domain) col_labels.push_back(word.display_label());
    m.set_row_labels(std::move(row_labels));
    m.set_col_labels(std::move(col_labels));
    return diff_cache_.emplace(r, std::move(m)).first->second;
}

GradedComplex BarResolution::as_graded_complex(int rmax) const {
    GradedComplex c;
    c.name = "bar-resolution";
    for (int r = 1; r <= rmax; ++r) c.diffs.push_back(differential(r));
    return c;
}

VerificationReport verify_bar(const BarResolution& bar, int rmax, std::uint64_t prime,
                              int points, std::uint64_t seed) {
    if (rmax < 2) throw std::invalid_argument("verify_bar: rmax must be at least 2");
    VerificationReport report;
    const GenericMatrix& g = bar.generic();
    const std::vector<Polynomial>& gens = g.ideal_gens();

    std::mt19937_64 rng(seed);
    std::vector<PrimeFieldAssignment> variety_points;
    variety_points.reserve(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) variety_points.push_back(random_variety_point(g, prime, rng));

    for (int r = 2; r <= rmax; ++r) {
        auto& result = report.add(
            "bar: d" + std::to_string(r - 1) + " o d" + std::to_string(r) + " modulo ideal",
            {{"n", bar.n()}, {"points", points}});
        result.seed = seed;
        PolyMatrix composite = bar.differential(r - 1) * bar.differential(r);
        for (std::size_t row = 0; row < composite.rows(); ++row)
            for (std::size_t col = 0; col < composite.cols(); ++col) {
                const Polynomial& entry = composite.at(row, col);
                const bool nf_zero = entry.is_zero() || normal_form(entry, gens).is_zero();
                bool points_zero = true;
                for (const auto& pt : variety_points)
                    if (specialize(entry, pt) != 0) {
                        points_zero = false;
                        break;
                    }
                if (!nf_zero || !points_zero) {
                    std::ostringstream os;
                    os << "(" << r << "," << row + 1 << "," << col + 1
                       << "): normal form " << (nf_zero ? "zero" : "nonzero")
                       << ", specializations " << (points_zero ? "vanish" : "do not vanish");
                    record_failure(result, os.str());
                }
                if (nf_zero != points_zero) {
                    std::ostringstream os;
                    os << "oracle disagreement at (" << r << "," << row + 1 << "," << col + 1 << ")";
                    record_failure(result, os.str());
                }
            }
    }

    report.append(minimality_check(bar.as_graded_complex(rmax)));

    // The module-resolution block of d_2 composes to zero exactly over the
    // ambient ring, not just modulo the ideal.
    {
        auto& exact = report.add("bar: cokernel block of d2 composes exactly", {{"n", bar.n()}});
        const PolyMatrix& d1 = bar.differential(1);
        const PolyMatrix& d2 = bar.differential(2);
        const std::vector<BarWord>& words = bar.term_basis(2);
        std::vector<std::size_t> block_cols;
        for (std::size_t c = 0; c < words.size(); ++c)
            if (words[c].word_length() == 0) block_cols.push_back(c);
        std::vector<std::size_t> all_rows(d2.rows());
        for (std::size_t r = 0; r < all_rows.size(); ++r) all_rows[r] = r;
        PolyMatrix block = d1 * d2.select(all_rows, block_cols);
        if (!block.is_zero()) record_failure(exact, "nonzero exact composite");
    }

    return report;
}

DerivationPresentation truncate_to_der(const BarResolution& bar) {
    const int n = bar.n();
    DerivationPresentation out;
    const PolyMatrix& d2 = bar.differential(2);
    const std::vector<BarWord>& words = bar.term_basis(2);
    for (std::size_t col = 0; col < words.size(); ++col) {
        const BarWord& w = words[col];
        std::string name;
        if (w.word_length() == 0) {
            const BasisLabel& c = w.module_label;
            name = (c.i == c.j) ? "B[" + std::to_string(c.i) + "]"
                                : "V[" + std::to_string(c.i) + "," + std::to_string(c.j) + "]";
        } else {
            name = w.display_label();
        }
        out.generators.push_back(column_as_derivation(d2, col, n, std::move(name)));
    }
    out.relations = bar.differential(3);
    return out;
}

VerificationReport euler_identity(const GenericMatrix& g) {
    const int n = g.n;
    VerificationReport report;
    auto& result = report.add("euler derivation over the generator set", {{"n", n}});

    std::map<VariableIndex, Polynomial> combo;
    auto add = [&combo](VariableIndex v, const Polynomial& p) {
        auto [it, inserted] = combo.emplace(v, p);
        if (!inserted) {
            it->second += p;
            if (it->second.is_zero()) combo.erase(it);
        }
    };

    // n * sum_k (-1)^{k+1} L[k,k]; the leading sign cancels the one inside
    // L[k,k], leaving the bracket scaled by n.
    for (int k = 1; k <= n + 1; ++k) {
        for (int u = 1; u <= n + 1; ++u) {
            if (u == k) continue;
            add(VariableIndex{1, u}, Polynomial(static_cast<long>(n)) *
                                         Polynomial::variable(VariableIndex{1, u}));
        }
        for (int l = 2; l <= n; ++l)
            add(VariableIndex{l, k}, Polynomial(static_cast<long>(-n)) *
                                         Polynomial::variable(VariableIndex{l, k}));
    }
    // (n+1) * sum_{l=2..n} B[l]
    for (int l = 2; l <= n; ++l)
        for (int s = 1; s <= n + 1; ++s) {
            add(VariableIndex{1, s}, Polynomial(static_cast<long>(-(n + 1))) *
                                         Polynomial::variable(VariableIndex{1, s}));
            add(VariableIndex{l, s}, Polynomial(static_cast<long>(n + 1)) *
                                         Polynomial::variable(VariableIndex{l, s}));
        }

    for (int u = 1; u <= n; ++u)
        for (int v = 1; v <= n + 1; ++v) {
            VariableIndex x{u, v};
            Polynomial expected = Polynomial::variable(x);
            auto it = combo.find(x);
            Polynomial got = (it == combo.end()) ? Polynomial() : it->second;
            if (got != expected)
                record_failure(result, "coefficient of d/d" + x.str() + " is " + got.str());
        }
    return report;
}

std::vector<mpz_class> poincare_coefficients(int n, int degree) {
    if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
    std::vector<mpz_class> out;
    out.reserve(static_cast<std::size_t>(degree) + 1);
    out.push_back(mpz_class(2L * n * (n + 1)));
    if (degree >= 1) out.push_back(mpz_class(static_cast<long>(n) * (n + 1) * (n + 2)));
    for (int i = 2; i <= degree; ++i) out.push_back(out[i - 1] + n * out[i - 2]);
    return out;
}

std::vector<mpz_class> coker_poincare_coefficients(int n, int degree) {
    if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
    std::vector<mpz_class> out;
    out.reserve(static_cast<std::size_t>(degree) + 1);
    out.push_back(mpz_class(n + 1));
    if (degree >= 1) out.push_back(mpz_class(static_cast<long>(n) * (n + 1)));
    for (int i = 2; i <= degree; ++i) out.push_back(out[i - 1] + n * out[i - 2]);
    return out;
}

std::vector<std::string> nonlinear_entries(const PolyMatrix& m) {
    std::vector<std::string> out;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Polynomial& entry = m.at(r, c);
            if (entry.is_zero()) continue;
            bool linear = entry.term_count() == 1;
            if (linear) {
                auto [mono, coeff] = entry.leading();
                linear = mono.degree() == 1 && (coeff == 1 || coeff == -1);
            }
            if (!linear) {
                std::ostringstream os;
                os << "(" << r + 1 << "," << c + 1 << "): " << entry.str();
                out.push_back(os.str());
            }
        }
    return out;
}

VerificationReport linearity_check(const BarResolution& bar, int max_degree) {
    if (bar.n() != 2)
        throw std::invalid_argument("linearity check is not applicable: requires n = 2");
    VerificationReport report;
    auto& result = report.add("linearity of all differentials", {{"n", 2}, {"degree", max_degree}});
    for (int r = 1; r <= max_degree; ++r)
        for (const auto& witness : nonlinear_entries(bar.differential(r)))
            record_failure(result, "d" + std::to_string(r) + witness);
    return report;
}

}  // namespace derres
