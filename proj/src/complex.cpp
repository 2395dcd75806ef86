#include "derres/complex.hpp"

#include <random>
#include <sstream>

namespace derres {

std::string BasisLabel::str() const {
    switch (kind) {
        case LabelKind::Unit: return "1";
        case LabelKind::E: return "e[" + std::to_string(i) + "]";
        case LabelKind::T: return "T[" + std::to_string(i) + "]";
        case LabelKind::A: return "a[" + std::to_string(i) + "]";
        case LabelKind::B: return "b[" + std::to_string(i) + "," + std::to_string(j) + "]";
        case LabelKind::C: return "c[" + std::to_string(i) + "," + std::to_string(j) + "]";
    }
    return "?";
}

int BasisLabel::degree() const {
    switch (kind) {
        case LabelKind::Unit: return 0;
        case LabelKind::E: return 1;
        case LabelKind::T: return 2;
        case LabelKind::A: return 0;
        case LabelKind::B: return 1;
        case LabelKind::C: return 2;
    }
    return 0;
}

bool ChainElement::is_zero() const {
    for (const auto& [label, coeff] : coords)
        if (!coeff.is_zero()) return false;
    return true;
}

void ChainElement::add(const BasisLabel& label, const Polynomial& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = coords.emplace(label, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) coords.erase(it);
    }
}

void ChainElement::axpy(const Polynomial& scale, const ChainElement& other) {
    if (scale.is_zero()) return;
    for (const auto& [label, coeff] : other.coords) add(label, scale * coeff);
}

std::string ChainElement::str() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [label, coeff] : coords) {
        if (coeff.is_zero()) continue;
        if (coeff.term_count() == 1) {
            auto [m, c] = coeff.leading();
            const bool neg = c < 0;
            mpz_class mag = neg ? mpz_class(-c) : c;
            if (first) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            if (!m.is_one()) {
                if (mag != 1) out += mag.get_str() + "*";
                out += m.str() + "*";
            } else {
                out += mag.get_str() + "*";
            }
            out += label.str();
        } else {
            if (!first) out += " + ";
            out += "(" + coeff.str() + ")*" + label.str();
        }
        first = false;
    }
    return out;
}

const PolyMatrix& GradedComplex::diff(int degree) const {
    if (degree < 1 || degree > top()) throw std::invalid_argument("differential degree out of range");
    return diffs[static_cast<std::size_t>(degree) - 1];
}

std::size_t GradedComplex::rank_of_term(int degree) const {
    if (degree < 0 || degree > top()) throw std::invalid_argument("term degree out of range");
    if (degree == 0) return diffs.empty() ? 0 : diffs[0].rows();
    return diffs[static_cast<std::size_t>(degree) - 1].cols();
}

VerificationReport compose_check(const GradedComplex& c,
                                 const std::vector<Polynomial>* modulo_gens) {
    VerificationReport report;
    for (int i = 1; i + 1 <= c.top(); ++i) {
        auto& result = report.add(
            c.name + ": d" + std::to_string(i) + " o d" + std::to_string(i + 1) +
                (modulo_gens ? " (modulo ideal)" : " (exact)"),
            {{"degree", i}});
        PolyMatrix composite = c.diff(i) * c.diff(i + 1);
        for (std::size_t r = 0; r < composite.rows(); ++r)
            for (std::size_t col = 0; col < composite.cols(); ++col) {
                const Polynomial& entry = composite.at(r, col);
                if (entry.is_zero()) continue;
                if (modulo_gens && normal_form(entry, *modulo_gens).is_zero()) continue;
                std::ostringstream os;
                os << "(" << i << "," << r + 1 << "," << col + 1 << "): " << entry.str();
                record_failure(result, os.str());
            }
    }
    return report;
}

VerificationReport minimality_check(const GradedComplex& c) {
    VerificationReport report;
    auto& result = report.add(c.name + ": minimality");
    for (int i = 1; i <= c.top(); ++i) {
        const PolyMatrix& d = c.diff(i);
        for (std::size_t r = 0; r < d.rows(); ++r)
            for (std::size_t col = 0; col < d.cols(); ++col)
                if (d.at(r, col).constant_term() != 0) {
                    std::ostringstream os;
                    os << "d" << i << "(" << r + 1 << "," << col + 1
                       << ") has constant term: " << d.at(r, col).str();
                    record_failure(result, os.str());
                }
    }
    return report;
}

bool RankProbe::all_trials_hit(std::size_t bound) const {
    for (std::size_t r : trial_ranks)
        if (r != bound) return false;
    return !trial_ranks.empty();
}

RankProbe rank_probe(const PolyMatrix& m, std::uint64_t prime, int trials, std::uint64_t seed) {
    if (prime <= (1ull << 30)) throw std::invalid_argument("rank_probe: prime must exceed 2^30");
    if (trials < 1) throw std::invalid_argument("rank_probe: trials must be at least 1");

    // Collect the variables that actually appear, then specialize randomly.
    std::vector<VariableIndex> vars;
    {
        std::map<VariableIndex, bool> seen;
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                for (const auto& [mono, coeff] : m.at(r, c).terms())
                    for (const auto& [v, e] : mono.exponents()) seen[v] = true;
        for (const auto& [v, flag] : seen) vars.push_back(v);
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> dist(0, prime - 1);
    RankProbe probe;
    probe.prime = prime;
    probe.seed = seed;
    for (int t = 0; t < trials; ++t) {
        PrimeFieldAssignment a;
        a.prime = prime;
        for (const auto& v : vars) a.values[v] = dist(rng);
        std::size_t r = rank_at_point(m, a);
        probe.trial_ranks.push_back(r);
        probe.max_rank = std::max(probe.max_rank, r);
    }
    return probe;
}

VerificationReport be_condition_one(const GradedComplex& c, const std::vector<std::size_t>& ranks) {
    if (ranks.size() != static_cast<std::size_t>(c.top()))
        throw std::invalid_argument("be_condition_one: need one rank per differential");
    VerificationReport report;
    auto& result = report.add(c.name + ": rank additivity");
    for (int i = 1; i <= c.top(); ++i) {
        std::size_t f = c.rank_of_term(i);
        std::size_t r_i = ranks[static_cast<std::size_t>(i) - 1];
        std::size_t r_next = (i == c.top()) ? 0 : ranks[static_cast<std::size_t>(i)];
        if (f != r_i + r_next) {
            std::ostringstream os;
            os << "degree " << i << ": f=" << f << " but r_i+r_{i+1}=" << r_i + r_next;
            record_failure(result, os.str());
        }
    }
    return report;
}

}  // namespace derres
