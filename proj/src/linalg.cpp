#include "holreg/linalg.hpp"

#include <stdexcept>

namespace holreg {

QiMatrix QiMatrix::identity(std::size_t n) {
    QiMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = GaussRational(1);
    return m;
}

QiMatrix QiMatrix::from_rows(const std::vector<std::vector<GaussRational>>& rows) {
    if (rows.empty()) return QiMatrix();
    QiMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged rows");
        for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

std::vector<GaussRational> QiMatrix::row(std::size_t i) const {
    std::vector<GaussRational> r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

void QiMatrix::append_row(const std::vector<GaussRational>& r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw std::invalid_argument("row length mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
}

QiMatrix QiMatrix::operator*(const QiMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
    QiMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const GaussRational& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

std::vector<GaussRational> QiMatrix::apply(const std::vector<GaussRational>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
    std::vector<GaussRational> r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

QiMatrix QiMatrix::transpose() const {
    QiMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

RrefResult rref(const QiMatrix& m) {
    RrefResult res{m, {}};
    QiMatrix& a = res.mat;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < a.rows() && a.at(sel, col).is_zero()) ++sel;
        if (sel == a.rows()) continue;
        if (sel != pivot_row)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(sel, j), a.at(pivot_row, j));
        GaussRational inv = a.at(pivot_row, col).inverse();
        for (std::size_t j = col; j < a.cols(); ++j) a.at(pivot_row, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == pivot_row || a.at(i, col).is_zero()) continue;
            GaussRational f = a.at(i, col);
            for (std::size_t j = col; j < a.cols(); ++j)
                a.at(i, j) -= f * a.at(pivot_row, j);
        }
        res.pivot_cols.push_back(col);
        ++pivot_row;
    }
    return res;
}

std::size_t rank(const QiMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return rref(m).pivot_cols.size();
}

QiMatrix kernel_basis(const QiMatrix& m) {
    RrefResult r = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<GaussRational>> rows;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<GaussRational> v(n);
        v[free_col] = GaussRational(1);
        for (std::size_t pr = 0; pr < r.pivot_cols.size(); ++pr)
            v[r.pivot_cols[pr]] = -r.mat.at(pr, free_col);
        rows.push_back(std::move(v));
    }
    if (rows.empty()) return QiMatrix(0, 0);
    // Canonicalize: the kernel is presented by its own RREF basis.
    return rref(QiMatrix::from_rows(rows)).mat;
}

GaussRational det(const QiMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    QiMatrix a = m;
    const std::size_t n = a.rows();
    GaussRational d(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && a.at(sel, col).is_zero()) ++sel;
        if (sel == n) return GaussRational(0);
        if (sel != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(sel, j), a.at(col, j));
            d = -d;
        }
        d *= a.at(col, col);
        GaussRational inv = a.at(col, col).inverse();
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a.at(i, col).is_zero()) continue;
            GaussRational f = a.at(i, col) * inv;
            for (std::size_t j = col; j < n; ++j) a.at(i, j) -= f * a.at(col, j);
        }
    }
    return d;
}

std::optional<QiMatrix> inverse(const QiMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = m.rows();
    QiMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = GaussRational(1);
    }
    RrefResult r = rref(aug);
    for (std::size_t i = 0; i < n; ++i)
        if (i >= r.pivot_cols.size() || r.pivot_cols[i] != i) return std::nullopt;
    QiMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.mat.at(i, n + j);
    return inv;
}

std::optional<QiMatrix> solve_system(const QiMatrix& a, const QiMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("right-hand side height mismatch");
    const std::size_t n = a.cols(), k = b.cols();
    QiMatrix aug(a.rows(), n + k);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < k; ++j) aug.at(i, n + j) = b.at(i, j);
    }
    RrefResult r = rref(aug);
    std::size_t a_rank = 0;
    for (std::size_t c : r.pivot_cols) {
        if (c >= n) return std::nullopt;  // inconsistent
        ++a_rank;
    }
    if (a_rank != n) return std::nullopt;  // underdetermined
    QiMatrix x(n, k);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j) x.at(i, j) = r.mat.at(i, n + j);
    return x;
}

std::optional<std::vector<GaussRational>> solve_vector(const QiMatrix& a,
                                                       const std::vector<GaussRational>& b) {
    QiMatrix bm(b.size(), 1);
    for (std::size_t i = 0; i < b.size(); ++i) bm.at(i, 0) = b[i];
    auto x = solve_system(a, bm);
    if (!x) return std::nullopt;
    std::vector<GaussRational> out(a.cols());
    for (std::size_t i = 0; i < a.cols(); ++i) out[i] = x->at(i, 0);
    return out;
}

}  // namespace holreg
