#include "fga/integer_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace fga {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw std::invalid_argument("IntegerMatrix: entry count does not match rows*cols");
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

std::vector<Int> IntegerMatrix::row(std::size_t i) const {
    return std::vector<Int>(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                            entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

void IntegerMatrix::append_row(const std::vector<Int>& row) {
    if (row.size() != cols_)
        throw std::invalid_argument("IntegerMatrix: appended row has wrong length");
    entries_.insert(entries_.end(), row.begin(), row.end());
    ++rows_;
}

bool IntegerMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Int& e) { return e == 0; });
}

void IntegerMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntegerMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

void IntegerMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& c) {
    if (c == 0) return;
    for (std::size_t k = 0; k < cols_; ++k) at(dst, k) += c * at(src, k);
}

void IntegerMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& c) {
    if (c == 0) return;
    for (std::size_t k = 0; k < rows_; ++k) at(k, dst) += c * at(k, src);
}

void IntegerMatrix::negate_row(std::size_t i) {
    for (std::size_t k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
}

void IntegerMatrix::negate_col(std::size_t i) {
    for (std::size_t k = 0; k < rows_; ++k) at(k, i) = -at(k, i);
}

IntegerMatrix IntegerMatrix::transposed() const {
    IntegerMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("IntegerMatrix: dimension mismatch in product");
    IntegerMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

std::string IntegerMatrix::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) out << ' ';
            out << at(i, j);
        }
        out << '\n';
    }
    return out.str();
}

std::vector<Int> mul_row_vector(const std::vector<Int>& v, const IntegerMatrix& m) {
    if (v.size() != m.rows())
        throw std::invalid_argument("mul_row_vector: dimension mismatch");
    std::vector<Int> out(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m.at(i, j);
    }
    return out;
}

IntegerMatrix vstack(const IntegerMatrix& top, const IntegerMatrix& bottom) {
    if (top.cols() != bottom.cols())
        throw std::invalid_argument("vstack: column counts differ");
    IntegerMatrix out(0, top.cols());
    for (std::size_t i = 0; i < top.rows(); ++i) out.append_row(top.row(i));
    for (std::size_t i = 0; i < bottom.rows(); ++i) out.append_row(bottom.row(i));
    return out;
}

Int determinant(IntegerMatrix a) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("determinant: matrix is not square");
    const std::size_t n = a.rows();
    if (n == 0) return 1;

    // Bareiss fraction-free elimination; every division is exact.
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a.at(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

Int SmithDecomposition::diagonal(std::size_t i) const {
    if (i < std::min(d.rows(), d.cols())) return d.at(i, i);
    return 0;
}

namespace {

// Pivot = smallest nonzero absolute value in d[t.., t..], ties broken by
// lowest (row, col). Returns false when the submatrix is entirely zero.
bool select_pivot(const IntegerMatrix& d, std::size_t t, std::size_t& pr, std::size_t& pc) {
    bool found = false;
    Int best;
    for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
            if (d.at(i, j) == 0) continue;
            Int a = abs(d.at(i, j));
            if (!found || a < best) {
                found = true;
                best = a;
                pr = i;
                pc = j;
            }
        }
    return found;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntegerMatrix& a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();

    SmithDecomposition s;
    s.d = a;
    s.u = IntegerMatrix::identity(m);
    s.u_inv = IntegerMatrix::identity(m);
    s.v = IntegerMatrix::identity(n);
    s.v_inv = IntegerMatrix::identity(n);

    // Each elementary move on d is mirrored on (u, u_inv) or (v, v_inv) so
    // that d = u * a * v holds at every step and the inverses stay exact.
    auto row_swap = [&](std::size_t i, std::size_t j) {
        s.d.swap_rows(i, j);
        s.u.swap_rows(i, j);
        s.u_inv.swap_cols(i, j);
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        s.d.swap_cols(i, j);
        s.v.swap_cols(i, j);
        s.v_inv.swap_rows(i, j);
    };
    auto row_add = [&](std::size_t dst, std::size_t src, const Int& c) {
        s.d.add_row_multiple(dst, src, c);
        s.u.add_row_multiple(dst, src, c);
        s.u_inv.add_col_multiple(src, dst, -c);
    };
    auto col_add = [&](std::size_t dst, std::size_t src, const Int& c) {
        s.d.add_col_multiple(dst, src, c);
        s.v.add_col_multiple(dst, src, c);
        s.v_inv.add_row_multiple(src, dst, -c);
    };
    auto row_negate = [&](std::size_t i) {
        s.d.negate_row(i);
        s.u.negate_row(i);
        s.u_inv.negate_col(i);
    };

    const std::size_t steps = std::min(m, n);
    std::size_t t = 0;
    for (; t < steps; ++t) {
        std::size_t pr = t, pc = t;
        if (!select_pivot(s.d, t, pr, pc)) break;

        for (;;) {
            row_swap(t, pr);
            col_swap(t, pc);

            // Euclidean reduction of column and row t against the pivot.
            bool residue = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (s.d.at(i, t) == 0) continue;
                Int q = s.d.at(i, t) / s.d.at(t, t);
                row_add(i, t, -q);
                if (s.d.at(i, t) != 0) residue = true;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (s.d.at(t, j) == 0) continue;
                Int q = s.d.at(t, j) / s.d.at(t, t);
                col_add(j, t, -q);
                if (s.d.at(t, j) != 0) residue = true;
            }
            if (residue) {
                select_pivot(s.d, t, pr, pc);
                continue;
            }

            // Row and column are clear; the pivot must also divide the rest
            // of the submatrix for the divisibility chain to hold.
            bool divides_all = true;
            for (std::size_t i = t + 1; i < m && divides_all; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (s.d.at(i, j) % s.d.at(t, t) != 0) {
                        row_add(t, i, 1);
                        divides_all = false;
                        break;
                    }
            if (divides_all) break;
            select_pivot(s.d, t, pr, pc);
        }

        if (s.d.at(t, t) < 0) row_negate(t);
    }
    s.rank = t;
    return s;
}

}  // namespace fga
