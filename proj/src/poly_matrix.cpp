#include "holreg/poly_matrix.hpp"

#include <stdexcept>

namespace holreg {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, int nvars)
    : rows_(rows), cols_(cols), nvars_(nvars), entries_(rows * cols, MultiPoly::zero(nvars)) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("empty matrix");
}

PolyMatrix PolyMatrix::identity(std::size_t n, int nvars) {
    PolyMatrix m(n, n, nvars);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = MultiPoly::constant(nvars, GaussRational(1));
    return m;
}

MultiPoly& PolyMatrix::at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index");
    return entries_[i * cols_ + j];
}

const MultiPoly& PolyMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index");
    return entries_[i * cols_ + j];
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
    PolyMatrix r(rows_, o.cols_, nvars_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

std::vector<MultiPoly> PolyMatrix::apply(const std::vector<MultiPoly>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
    std::vector<MultiPoly> r(rows_, MultiPoly::zero(nvars_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix r(cols_, rows_, nvars_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

std::vector<std::vector<GaussRational>> PolyMatrix::evaluate(
    const std::vector<GaussRational>& point) const {
    std::vector<std::vector<GaussRational>> out(rows_, std::vector<GaussRational>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i][j] = at(i, j).evaluate(point);
    return out;
}

namespace {

MultiPoly cofactor_det(const PolyMatrix& m, std::vector<std::size_t> rows,
                       std::vector<std::size_t> cols) {
    const std::size_t n = rows.size();
    if (n == 1) return m.at(rows[0], cols[0]);
    MultiPoly acc(m.nvars());
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t j = 0; j < n; ++j) {
        const MultiPoly& pivot = m.at(rows[0], cols[j]);
        if (pivot.is_zero()) continue;
        std::vector<std::size_t> sub_cols;
        sub_cols.reserve(n - 1);
        for (std::size_t k = 0; k < n; ++k)
            if (k != j) sub_cols.push_back(cols[k]);
        MultiPoly minor = cofactor_det(m, sub_rows, sub_cols);
        if (j % 2 == 0)
            acc += pivot * minor;
        else
            acc -= pivot * minor;
    }
    return acc;
}

MultiPoly bareiss_det(const PolyMatrix& input) {
    const std::size_t n = input.rows();
    PolyMatrix m = input;
    int sign = 1;
    MultiPoly prev = MultiPoly::constant(m.nvars(), GaussRational(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k).is_zero()) {
            std::size_t swap_row = k;
            for (std::size_t r = k + 1; r < n; ++r)
                if (!m.at(r, k).is_zero()) {
                    swap_row = r;
                    break;
                }
            if (swap_row == k) return MultiPoly::zero(m.nvars());
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap_row, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // Fraction-free step: division by the previous pivot is exact.
                MultiPoly num = m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = poly_divide_exact(num, prev);
            }
            m.at(i, k) = MultiPoly::zero(m.nvars());
        }
        prev = m.at(k, k);
    }
    MultiPoly d = m.at(n - 1, n - 1);
    return sign == 1 ? d : -d;
}

}  // namespace

MultiPoly poly_det(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = m.rows();
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    if (n <= 4) return cofactor_det(m, idx, idx);
    return bareiss_det(m);
}

AdjugateResult poly_adjugate(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("adjugate of non-square matrix");
    const std::size_t n = m.rows();
    PolyMatrix adj(n, n, m.nvars());
    if (n == 1) {
        adj.at(0, 0) = MultiPoly::constant(m.nvars(), GaussRational(1));
        return {std::move(adj), m.at(0, 0)};
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::size_t> rows, cols;
            for (std::size_t r = 0; r < n; ++r)
                if (r != i) rows.push_back(r);
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) cols.push_back(c);
            PolyMatrix minor(n - 1, n - 1, m.nvars());
            for (std::size_t r = 0; r < n - 1; ++r)
                for (std::size_t c = 0; c < n - 1; ++c) minor.at(r, c) = m.at(rows[r], cols[c]);
            MultiPoly md = poly_det(minor);
            adj.at(j, i) = ((i + j) % 2 == 0) ? md : -md;
        }
    }
    return {std::move(adj), poly_det(m)};
}

}  // namespace holreg
