#include "derres/determinantal.hpp"

#include <sstream>

namespace derres {

GenericMatrix build_generic(int n) {
    if (n < 2) throw std::invalid_argument("build_generic: n must be at least 2");
    GenericMatrix g;
    g.n = n;
    g.X = PolyMatrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n) + 1);
    std::vector<std::string> row_labels, col_labels;
    for (int i = 1; i <= n; ++i) {
        row_labels.push_back("row[" + std::to_string(i) + "]");
        for (int j = 1; j <= n + 1; ++j)
            g.X.at(i - 1, j - 1) = Polynomial::variable(VariableIndex{i, j});
    }
    for (int j = 1; j <= n + 1; ++j) col_labels.push_back("col[" + std::to_string(j) + "]");
    g.X.set_row_labels(std::move(row_labels));
    g.X.set_col_labels(std::move(col_labels));

    g.minors.reserve(static_cast<std::size_t>(n) + 1);
    for (int r = 1; r <= n + 1; ++r)
        g.minors.push_back(determinant(g.X.submatrix_deleting({}, {r})));
    return g;
}

JacobianTranspose jacobian_transpose(const GenericMatrix& g) {
    const int n = g.n;
    PolyMatrix m(static_cast<std::size_t>(n) + 1, static_cast<std::size_t>(n) * (n + 1));
    std::vector<std::string> row_labels, col_labels;
    for (int i = 1; i <= n + 1; ++i) row_labels.push_back("F[" + std::to_string(i) + "]");
    for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n + 1; ++k) col_labels.push_back(VariableIndex{j, k}.str());
    for (int i = 1; i <= n + 1; ++i) {
        std::size_t col = 0;
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n + 1; ++k)
                m.at(i - 1, col++) = g.minor(i).derivative(VariableIndex{j, k});
    }
    m.set_row_labels(std::move(row_labels));
    m.set_col_labels(std::move(col_labels));
    return JacobianTranspose{std::move(m)};
}

Polynomial signed_subminor(const GenericMatrix& g, const std::vector<int>& delete_cols,
                           const std::vector<int>& delete_rows) {
    PolyMatrix sub = g.X.submatrix_deleting(delete_rows, delete_cols);
    if (sub.rows() != sub.cols() || sub.rows() == 0)
        throw std::invalid_argument("signed_subminor: deletion does not leave a nonempty square matrix");
    return determinant(sub);
}

namespace {

std::string tuple_witness(const std::string& identity, std::initializer_list<int> indices,
                          const Polynomial& lhs, const Polynomial& rhs) {
    std::ostringstream os;
    os << identity << " at (";
    bool first = true;
    for (int v : indices) {
        if (!first) os << ",";
        os << v;
        first = false;
    }
    os << "): lhs = " << lhs.str() << ", rhs = " << rhs.str();
    return os.str();
}

}  // namespace

VerificationReport check_identities(const GenericMatrix& g) {
    const int n = g.n;
    VerificationReport report;

    auto& id1 = report.add("syzygy identity (1)", {{"n", n}});
    for (int i = 1; i <= n; ++i)
        for (int s = 1; s <= n; ++s)
            for (int r = 1; r <= n + 1; ++r) {
                Polynomial lhs;
                for (int u = 1; u <= n + 1; ++u)
                    lhs += Polynomial::variable(VariableIndex{i, u}) *
                           g.minor(r).derivative(VariableIndex{s, u});
                Polynomial rhs = (i == s) ? g.minor(r) : Polynomial();
                if (lhs != rhs) record_failure(id1, tuple_witness("(1)", {i, s, r}, lhs, rhs));
            }

    auto& id2 = report.add("syzygy identity (2)", {{"n", n}});
    for (int i = 1; i <= n + 1; ++i)
        for (int j = 1; j <= n + 1; ++j) {
            if (i == j) continue;
            Polynomial lhs;
            for (int k = 1; k <= n; ++k)
                lhs += Polynomial::variable(VariableIndex{k, i}) *
                       g.minor(i).derivative(VariableIndex{k, j});
            Polynomial rhs = ((i + j + 1) % 2 == 0) ? g.minor(j) : -g.minor(j);
            if (lhs != rhs) record_failure(id2, tuple_witness("(2)", {i, j}, lhs, rhs));
        }

    auto& id3 = report.add("syzygy identity (3)", {{"n", n}});
    for (int i = 1; i <= n + 1; ++i)
        for (int j = 1; j <= n; ++j)
            for (int l = 1; l <= n; ++l) {
                Polynomial lhs;
                for (int r = 1; r <= n + 1; ++r) {
                    if (r == i) continue;
                    Polynomial term = g.minor(r).derivative(VariableIndex{j, i}) *
                                      Polynomial::variable(VariableIndex{l, r});
                    if (r % 2 == 0)
                        lhs += term;
                    else
                        lhs -= term;
                }
                Polynomial rhs;
                if (j == l) rhs = ((i + 1) % 2 == 0) ? g.minor(i) : -g.minor(i);
                if (lhs != rhs) record_failure(id3, tuple_witness("(3)", {i, j, l}, lhs, rhs));
            }

    auto& id4 = report.add("syzygy identity (4)", {{"n", n}});
    for (int i = 1; i <= n + 1; ++i)
        for (int k = 1; k <= n + 1; ++k)
            for (int t = 1; t <= n + 1; ++t) {
                if (i == k || i == t || k == t) continue;
                Polynomial lhs;
                for (int l = 1; l <= n; ++l)
                    lhs += g.minor(i).derivative(VariableIndex{l, k}) *
                           Polynomial::variable(VariableIndex{l, t});
                if (!lhs.is_zero())
                    record_failure(id4, tuple_witness("(4)", {i, k, t}, lhs, Polynomial()));
            }

    auto& swap = report.add("partial swap identity", {{"n", n}});
    for (int i = 1; i <= n + 1; ++i)
        for (int j = 1; j <= n + 1; ++j) {
            if (i == j) continue;
            for (int k = 1; k <= n; ++k) {
                Polynomial lhs = g.minor(i).derivative(VariableIndex{k, j});
                Polynomial rhs = g.minor(j).derivative(VariableIndex{k, i});
                if ((i + j + 1) % 2 != 0) rhs = -rhs;
                if (lhs != rhs) record_failure(swap, tuple_witness("swap", {i, j, k}, lhs, rhs));
            }
        }

    return report;
}

PrimeFieldAssignment random_point(const GenericMatrix& g, std::uint64_t prime,
                                  std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(0, prime - 1);
    PrimeFieldAssignment a;
    a.prime = prime;
    for (int i = 1; i <= g.n; ++i)
        for (int j = 1; j <= g.n + 1; ++j) a.values[VariableIndex{i, j}] = dist(rng);
    return a;
}

PrimeFieldAssignment random_variety_point(const GenericMatrix& g, std::uint64_t prime,
                                          std::mt19937_64& rng) {
    const int n = g.n;
    std::uniform_int_distribution<std::uint64_t> dist(0, prime - 1);
    // X = U * V with U of size n x (n-1) and V of size (n-1) x (n+1), so the
    // specialized matrix has rank at most n-1 and every maximal minor vanishes.
    std::vector<std::vector<std::uint64_t>> u(n, std::vector<std::uint64_t>(n - 1));
    std::vector<std::vector<std::uint64_t>> v(n - 1, std::vector<std::uint64_t>(n + 1));
    for (auto& row : u)
        for (auto& x : row) x = dist(rng);
    for (auto& row : v)
        for (auto& x : row) x = dist(rng);

    PrimeFieldAssignment a;
    a.prime = prime;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n + 1; ++j) {
            std::uint64_t acc = 0;
            for (int k = 0; k < n - 1; ++k)
                acc = (acc + mulmod(u[i - 1][k], v[k][j - 1], prime)) % prime;
            a.values[VariableIndex{i, j}] = acc;
        }
    return a;
}

}  // namespace derres
