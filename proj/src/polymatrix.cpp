#include "derres/polymatrix.hpp"

#include <algorithm>
#include <set>

namespace derres {

void PolyMatrix::set_row_labels(std::vector<std::string> labels) {
    if (labels.size() != rows_) throw std::invalid_argument("row label count mismatch");
    row_labels_ = std::move(labels);
}

void PolyMatrix::set_col_labels(std::vector<std::string> labels) {
    if (labels.size() != cols_) throw std::invalid_argument("col label count mismatch");
    col_labels_ = std::move(labels);
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
    out.row_labels_ = col_labels_;
    out.col_labels_ = row_labels_;
    return out;
}

PolyMatrix PolyMatrix::submatrix_deleting(const std::vector<int>& delete_rows,
                                          const std::vector<int>& delete_cols) const {
    std::set<int> dr(delete_rows.begin(), delete_rows.end());
    std::set<int> dc(delete_cols.begin(), delete_cols.end());
    if (dr.size() != delete_rows.size() || dc.size() != delete_cols.size())
        throw std::invalid_argument("duplicate deletion index");
    for (int r : dr)
        if (r < 1 || r > static_cast<int>(rows_)) throw std::invalid_argument("row index out of range");
    for (int c : dc)
        if (c < 1 || c > static_cast<int>(cols_)) throw std::invalid_argument("col index out of range");
    std::vector<std::size_t> keep_rows, keep_cols;
    for (std::size_t r = 1; r <= rows_; ++r)
        if (!dr.count(static_cast<int>(r))) keep_rows.push_back(r - 1);
    for (std::size_t c = 1; c <= cols_; ++c)
        if (!dc.count(static_cast<int>(c))) keep_cols.push_back(c - 1);
    return select(keep_rows, keep_cols);
}

PolyMatrix PolyMatrix::select(const std::vector<std::size_t>& keep_rows,
                              const std::vector<std::size_t>& keep_cols) const {
    PolyMatrix out(keep_rows.size(), keep_cols.size());
    for (std::size_t r = 0; r < keep_rows.size(); ++r)
        for (std::size_t c = 0; c < keep_cols.size(); ++c)
            out.at(r, c) = at(keep_rows[r], keep_cols[c]);
    if (!row_labels_.empty()) {
        std::vector<std::string> rl;
        for (auto r : keep_rows) rl.push_back(row_labels_[r]);
        out.row_labels_ = std::move(rl);
    }
    if (!col_labels_.empty()) {
        std::vector<std::string> cl;
        for (auto c : keep_cols) cl.push_back(col_labels_[c]);
        out.col_labels_ = std::move(cl);
    }
    return out;
}

bool PolyMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Polynomial& p) { return p.is_zero(); });
}

PolyMatrix operator*(const PolyMatrix& lhs, const PolyMatrix& rhs) {
    if (lhs.cols() != rhs.rows()) throw std::invalid_argument("matrix dimension mismatch");
    PolyMatrix out(lhs.rows(), rhs.cols());
    for (std::size_t r = 0; r < lhs.rows(); ++r)
        for (std::size_t k = 0; k < lhs.cols(); ++k) {
            const Polynomial& a = lhs.at(r, k);
            if (a.is_zero()) continue;
            for (std::size_t c = 0; c < rhs.cols(); ++c) {
                const Polynomial& b = rhs.at(k, c);
                if (!b.is_zero()) out.at(r, c) += a * b;
            }
        }
    out.row_labels_ = lhs.row_labels_;
    out.col_labels_ = rhs.col_labels_;
    return out;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

namespace {

Polynomial laplace(const PolyMatrix& m, std::vector<std::size_t> cols) {
    // Expansion along the first remaining row.
    const std::size_t row = m.rows() - cols.size();
    if (cols.size() == 1) return m.at(row, cols[0]);
    Polynomial out;
    for (std::size_t k = 0; k < cols.size(); ++k) {
        const Polynomial& pivot = m.at(row, cols[k]);
        if (pivot.is_zero()) continue;
        std::vector<std::size_t> rest;
        rest.reserve(cols.size() - 1);
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (j != k) rest.push_back(cols[j]);
        Polynomial sub = pivot * laplace(m, std::move(rest));
        if (k % 2 == 0)
            out += sub;
        else
            out -= sub;
    }
    return out;
}

}  // namespace

Polynomial determinant_laplace(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    if (m.rows() == 0) return Polynomial(1L);
    std::vector<std::size_t> cols(m.cols());
    for (std::size_t c = 0; c < cols.size(); ++c) cols[c] = c;
    return laplace(m, std::move(cols));
}

Polynomial determinant_bareiss(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Polynomial(1L);
    std::vector<std::vector<Polynomial>> a(n, std::vector<Polynomial>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) a[r][c] = m.at(r, c);

    int sign = 1;
    Polynomial prev(1L);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t swap_row = k;
            for (std::size_t r = k + 1; r < n; ++r)
                if (!a[r][k].is_zero()) {
                    swap_row = r;
                    break;
                }
            if (swap_row == k) return Polynomial();
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = divide_exact(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

Polynomial determinant(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    return m.rows() >= 4 ? determinant_bareiss(m) : determinant_laplace(m);
}

std::size_t rank_at_point(const PolyMatrix& m, const PrimeFieldAssignment& assignment) {
    const std::uint64_t p = assignment.prime;
    std::vector<std::vector<std::uint64_t>> a(m.rows(), std::vector<std::uint64_t>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = specialize(m.at(r, c), assignment);

    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && a[pivot][col] == 0) ++pivot;
        if (pivot == m.rows()) continue;
        std::swap(a[rank], a[pivot]);
        // inverse of the pivot via Fermat
        std::uint64_t inv = 1, base = a[rank][col];
        for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
            if (e & 1) inv = mulmod(inv, base, p);
            base = mulmod(base, base, p);
        }
        for (std::size_t r = rank + 1; r < m.rows(); ++r) {
            if (a[r][col] == 0) continue;
            std::uint64_t f = mulmod(a[r][col], inv, p);
            for (std::size_t c = col; c < m.cols(); ++c) {
                std::uint64_t sub = mulmod(f, a[rank][c], p);
                a[r][c] = (a[r][c] + p - sub) % p;
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace derres
