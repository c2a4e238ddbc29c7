#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <vector>

#include "eulergraph/error.hpp"

namespace eulergraph {

using Int = boost::multiprecision::cpp_int;

// Dense matrix over arbitrary-precision integers, row major.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static IntMatrix identity(size_t n) {
        IntMatrix m(n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Int& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const Int& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (size_t r = 0; r < rows_; ++r)
            for (size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        if (cols_ != o.rows_) throw DomainError("matrix dimension mismatch");
        IntMatrix p(rows_, o.cols_);
        for (size_t r = 0; r < rows_; ++r)
            for (size_t k = 0; k < cols_; ++k) {
                const Int& v = at(r, k);
                if (v == 0) continue;
                for (size_t c = 0; c < o.cols_; ++c) p.at(r, c) += v * o.at(k, c);
            }
        return p;
    }

    std::vector<Int> apply(const std::vector<Int>& x) const {
        if (x.size() != cols_) throw DomainError("vector dimension mismatch");
        std::vector<Int> y(rows_);
        for (size_t r = 0; r < rows_; ++r)
            for (size_t c = 0; c < cols_; ++c)
                if (at(r, c) != 0) y[r] += at(r, c) * x[c];
        return y;
    }

    bool is_zero() const {
        for (const Int& v : a_) if (v != 0) return false;
        return true;
    }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    void swap_rows(size_t i, size_t j) {
        for (size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
    }
    void swap_cols(size_t i, size_t j) {
        for (size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
    }
    // row i -= q * row j
    void row_axpy(size_t i, size_t j, const Int& q) {
        if (q == 0) return;
        for (size_t c = 0; c < cols_; ++c) at(i, c) -= q * at(j, c);
    }
    // col i -= q * col j
    void col_axpy(size_t i, size_t j, const Int& q) {
        if (q == 0) return;
        for (size_t r = 0; r < rows_; ++r) at(r, i) -= q * at(r, j);
    }
    void negate_row(size_t i) {
        for (size_t c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
    }

private:
    size_t rows_, cols_;
    std::vector<Int> a_;
};

// Exact determinant via fraction-free Gaussian elimination.
Int determinant(const IntMatrix& m);

}  // namespace eulergraph
