#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace fga {

using Int = boost::multiprecision::cpp_int;

/// Dense integer matrix with arbitrary-precision entries, row-major.
/// All arithmetic is exact; there is no overflow at any intermediate step.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols);
    IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);

    static IntegerMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Int& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    const std::vector<Int>& entries() const { return entries_; }

    std::vector<Int> row(std::size_t i) const;
    void append_row(const std::vector<Int>& row);

    bool is_zero() const;

    // Elementary row/column operations (the moves of the normal-form driver).
    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& c);  // row dst += c * row src
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& c);  // col dst += c * col src
    void negate_row(std::size_t i);
    void negate_col(std::size_t i);

    IntegerMatrix transposed() const;

    friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
    friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> entries_;
};

/// Row vector times matrix; v.size() must equal m.rows().
std::vector<Int> mul_row_vector(const std::vector<Int>& v, const IntegerMatrix& m);

/// Vertical concatenation; column counts must agree.
IntegerMatrix vstack(const IntegerMatrix& top, const IntegerMatrix& bottom);

/// Exact determinant of a square matrix (fraction-free elimination).
Int determinant(IntegerMatrix a);

/// Smith normal form d = u * a * v with u, v unimodular, d diagonal,
/// nonnegative, and d[i] | d[i+1]. Inverse transforms are accumulated
/// alongside so coordinate changes stay exact in both directions.
struct SmithDecomposition {
    IntegerMatrix u, d, v;
    IntegerMatrix u_inv, v_inv;
    std::size_t rank = 0;

    /// Diagonal entry i, or 0 past the end of the diagonal.
    Int diagonal(std::size_t i) const;
};

SmithDecomposition smith_normal_form(const IntegerMatrix& a);

}  // namespace fga
