#include "derres/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace derres {

std::string VariableIndex::str() const {
    return "x[" + std::to_string(row) + "," + std::to_string(col) + "]";
}

Monomial::Monomial(VariableIndex v, int exp) {
    if (exp < 0) throw std::invalid_argument("negative exponent");
    if (exp > 0) exps_.emplace_back(v, exp);
}

Monomial::Monomial(Exponents exps) : exps_(std::move(exps)) {
    std::sort(exps_.begin(), exps_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    Exponents merged;
    for (const auto& [v, e] : exps_) {
        if (e < 0) throw std::invalid_argument("negative exponent");
        if (e == 0) continue;
        if (!merged.empty() && merged.back().first == v)
            merged.back().second += e;
        else
            merged.emplace_back(v, e);
    }
    exps_ = std::move(merged);
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& [v, e] : exps_) d += e;
    return d;
}

int Monomial::exponent_of(VariableIndex v) const {
    for (const auto& [w, e] : exps_)
        if (w == v) return e;
    return 0;
}

Monomial Monomial::times(const Monomial& other) const {
    Exponents out;
    out.reserve(exps_.size() + other.exps_.size());
    auto ia = exps_.begin(), ib = other.exps_.begin();
    while (ia != exps_.end() && ib != other.exps_.end()) {
        if (ia->first == ib->first) {
            out.emplace_back(ia->first, ia->second + ib->second);
            ++ia, ++ib;
        } else if (ia->first < ib->first) {
            out.push_back(*ia++);
        } else {
            out.push_back(*ib++);
        }
    }
    out.insert(out.end(), ia, exps_.end());
    out.insert(out.end(), ib, other.exps_.end());
    Monomial m;
    m.exps_ = std::move(out);
    return m;
}

bool Monomial::divides(const Monomial& other) const {
    auto ia = exps_.begin();
    auto ib = other.exps_.begin();
    while (ia != exps_.end()) {
        while (ib != other.exps_.end() && ib->first < ia->first) ++ib;
        if (ib == other.exps_.end() || !(ib->first == ia->first) || ib->second < ia->second)
            return false;
        ++ia;
    }
    return true;
}

Monomial Monomial::divided_into(const Monomial& other) const {
    if (!divides(other)) throw std::domain_error("monomial does not divide");
    Exponents out;
    auto ia = exps_.begin();
    for (const auto& [v, e] : other.exps_) {
        int sub = 0;
        if (ia != exps_.end() && ia->first == v) {
            sub = ia->second;
            ++ia;
        }
        if (e - sub > 0) out.emplace_back(v, e - sub);
    }
    Monomial m;
    m.exps_ = std::move(out);
    return m;
}

std::string Monomial::str() const {
    if (exps_.empty()) return "1";
    std::string out;
    for (const auto& [v, e] : exps_) {
        if (!out.empty()) out += "*";
        out += v.str();
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

int TermOrder::compare(const Monomial& a, const Monomial& b) {
    // First differing exponent on the earliest (most significant) variable wins.
    auto ia = a.exponents().begin(), ae = a.exponents().end();
    auto ib = b.exponents().begin(), be = b.exponents().end();
    while (ia != ae && ib != be) {
        if (ia->first == ib->first) {
            if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
            ++ia, ++ib;
        } else if (ia->first < ib->first) {
            return 1;
        } else {
            return -1;
        }
    }
    if (ia != ae) return 1;
    if (ib != be) return -1;
    return 0;
}

Polynomial::Polynomial(long value) {
    if (value != 0) terms_.emplace(Monomial(), mpz_class(value));
}

Polynomial::Polynomial(const mpz_class& value) {
    if (value != 0) terms_.emplace(Monomial(), value);
}

Polynomial::Polynomial(const Monomial& m, const mpz_class& coeff) {
    if (coeff != 0) terms_.emplace(m, coeff);
}

Polynomial Polynomial::variable(VariableIndex v) {
    return Polynomial(Monomial(v), 1);
}

std::optional<int> Polynomial::degree() const {
    if (terms_.empty()) return std::nullopt;
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    return true;
}

mpz_class Polynomial::constant_term() const {
    auto it = terms_.find(Monomial());
    return it == terms_.end() ? mpz_class(0) : it->second;
}

std::pair<Monomial, mpz_class> Polynomial::leading() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    auto it = terms_.rbegin();
    return {it->first, it->second};
}

void Polynomial::add_term(const Monomial& m, const mpz_class& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    Polynomial out;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : rhs.terms_) out.add_term(ma.times(mb), ca * cb);
    terms_ = std::move(out.terms_);
    return *this;
}

Polynomial& Polynomial::operator*=(const mpz_class& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= scalar;
    return *this;
}

Polynomial Polynomial::derivative(VariableIndex v) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        int e = m.exponent_of(v);
        if (e == 0) continue;
        out.add_term(Monomial(v, e).divided_into(m).times(Monomial(v, e - 1)), c * e);
    }
    return out;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const mpz_class& c = it->second;
        const bool neg = c < 0;
        mpz_class mag = neg ? mpz_class(-c) : c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        if (it->first.is_one()) {
            out += mag.get_str();
        } else {
            if (mag != 1) out += mag.get_str() + "*";
            out += it->first.str();
        }
    }
    return out;
}

Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    Polynomial out = lhs;
    return out *= rhs;
}
Polynomial operator*(const mpz_class& scalar, Polynomial p) { return p *= scalar; }

namespace {

// Recursive-descent parser for the canonical syntax:
//   poly   := [sign] term { sign term }
//   term   := factor { '*' factor }
//   factor := integer | var
//   var    := 'x[' int ',' int ']' [ '^' int ]
class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Polynomial parse() {
        Polynomial out;
        skip_ws();
        if (read_sign_opt() < 0)
            out -= term();
        else
            out += term();
        skip_ws();
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c != '+' && c != '-') fail("expected '+' or '-'");
            ++pos_;
            skip_ws();
            if (c == '-')
                out -= term();
            else
                out += term();
            skip_ws();
        }
        return out;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("polynomial parse error at offset " +
                                    std::to_string(pos_) + ": " + what);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    int read_sign_opt() {
        if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
            int s = text_[pos_] == '-' ? -1 : 1;
            ++pos_;
            skip_ws();
            return s;
        }
        return 1;
    }

    mpz_class integer() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected integer");
        return mpz_class(std::string(text_.substr(start, pos_ - start)));
    }

    int small_int() {
        mpz_class v = integer();
        if (!v.fits_sint_p()) fail("index too large");
        return static_cast<int>(v.get_si());
    }

    Polynomial factor() {
        skip_ws();
        if (pos_ >= text_.size()) fail("expected factor");
        if (std::isdigit(static_cast<unsigned char>(text_[pos_]))) return Polynomial(integer());
        if (text_[pos_] != 'x') fail("expected 'x' or integer");
        ++pos_;
        expect('[');
        int row = small_int();
        expect(',');
        int col = small_int();
        expect(']');
        int exp = 1;
        if (pos_ < text_.size() && text_[pos_] == '^') {
            ++pos_;
            exp = small_int();
        }
        return Polynomial(Monomial(VariableIndex{row, col}, exp), 1);
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    Polynomial term() {
        Polynomial out = factor();
        skip_ws();
        while (pos_ < text_.size() && text_[pos_] == '*') {
            ++pos_;
            out *= factor();
            skip_ws();
        }
        return out;
    }
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text) { return Parser(text).parse(); }

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& gens) {
    if (gens.empty()) throw std::invalid_argument("normal_form: empty generator list");
    for (const auto& g : gens)
        if (g.is_zero()) throw std::invalid_argument("normal_form: zero generator");

    std::vector<std::pair<Monomial, mpz_class>> leads;
    leads.reserve(gens.size());
    for (const auto& g : gens) leads.push_back(g.leading());

    Polynomial work = p;
    Polynomial remainder;
    while (!work.is_zero()) {
        auto [lm, lc] = work.leading();
        bool reduced = false;
        for (std::size_t k = 0; k < gens.size(); ++k) {
            const auto& [gm, gc] = leads[k];
            if (!gm.divides(lm)) continue;
            if (!mpz_divisible_p(lc.get_mpz_t(), gc.get_mpz_t())) continue;
            Polynomial q(gm.divided_into(lm), lc / gc);
            work -= q * gens[k];
            reduced = true;
            break;
        }
        if (!reduced) {
            remainder.add_term(lm, lc);
            work.add_term(lm, -lc);
        }
    }
    return remainder;
}

Polynomial divide_exact(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw std::domain_error("divide_exact: zero divisor");
    auto [dm, dc] = den.leading();
    Polynomial work = num;
    Polynomial quotient;
    while (!work.is_zero()) {
        auto [lm, lc] = work.leading();
        if (!dm.divides(lm) || !mpz_divisible_p(lc.get_mpz_t(), dc.get_mpz_t()))
            throw std::domain_error("divide_exact: inexact division");
        Polynomial q(dm.divided_into(lm), lc / dc);
        quotient += q;
        work -= q * den;
    }
    return quotient;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t prime) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % prime);
}

namespace {

std::uint64_t powmod(std::uint64_t base, int exp, std::uint64_t prime) {
    std::uint64_t out = 1 % prime;
    while (exp > 0) {
        if (exp & 1) out = mulmod(out, base, prime);
        base = mulmod(base, base, prime);
        exp >>= 1;
    }
    return out;
}

}  // namespace

std::uint64_t specialize(const Polynomial& p, const PrimeFieldAssignment& assignment) {
    const std::uint64_t prime = assignment.prime;
    if (prime < 2) throw std::invalid_argument("specialize: invalid prime");
    std::uint64_t acc = 0;
    for (const auto& [m, c] : p.terms()) {
        std::uint64_t val = mpz_fdiv_ui(c.get_mpz_t(), prime);
        for (const auto& [v, e] : m.exponents()) {
            auto it = assignment.values.find(v);
            if (it == assignment.values.end())
                throw std::invalid_argument("specialize: missing assignment for " + v.str());
            val = mulmod(val, powmod(it->second % prime, e, prime), prime);
        }
        acc = (acc + val) % prime;
    }
    return acc;
}

}  // namespace derres
