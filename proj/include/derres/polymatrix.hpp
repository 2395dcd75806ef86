// Dense matrices of polynomials with optional row/column labels, plus exact
// determinants (Laplace expansion and fraction-free Bareiss elimination).

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "derres/poly.hpp"

namespace derres {

class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Polynomial& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    Polynomial& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

    const std::vector<std::string>& row_labels() const { return row_labels_; }
    const std::vector<std::string>& col_labels() const { return col_labels_; }
    void set_row_labels(std::vector<std::string> labels);
    void set_col_labels(std::vector<std::string> labels);

    PolyMatrix transpose() const;

    // Deletes the 1-based rows/columns listed (duplicates rejected).
    PolyMatrix submatrix_deleting(const std::vector<int>& delete_rows,
                                  const std::vector<int>& delete_cols) const;

    // Keeps exactly the 0-based rows/columns listed, in the given order.
    PolyMatrix select(const std::vector<std::size_t>& keep_rows,
                      const std::vector<std::size_t>& keep_cols) const;

    bool is_zero() const;

    friend PolyMatrix operator*(const PolyMatrix& lhs, const PolyMatrix& rhs);
    friend bool operator==(const PolyMatrix&, const PolyMatrix&);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Polynomial> entries_;
    std::vector<std::string> row_labels_;
    std::vector<std::string> col_labels_;
};

// Default dispatch: Laplace below 4x4, Bareiss from 4x4 up (Laplace is
// exponential; Bareiss keeps intermediate swell polynomial).  Both throw
// std::invalid_argument on non-square input.
Polynomial determinant(const PolyMatrix& m);
Polynomial determinant_laplace(const PolyMatrix& m);
Polynomial determinant_bareiss(const PolyMatrix& m);

// Specializes every entry at the assignment and computes the rank by Gaussian
// elimination over the prime field.
std::size_t rank_at_point(const PolyMatrix& m, const PrimeFieldAssignment& assignment);

}  // namespace derres
