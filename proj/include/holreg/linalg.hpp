#pragma once

#include <optional>
#include <vector>

#include "holreg/rational.hpp"

namespace holreg {

/// Dense matrix over Q(i). Row-major; sized at construction.
class QiMatrix {
public:
    QiMatrix() : rows_(0), cols_(0) {}
    QiMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static QiMatrix identity(std::size_t n);
    static QiMatrix from_rows(const std::vector<std::vector<GaussRational>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    GaussRational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const GaussRational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<GaussRational> row(std::size_t i) const;
    void append_row(const std::vector<GaussRational>& r);

    QiMatrix operator*(const QiMatrix& o) const;
    std::vector<GaussRational> apply(const std::vector<GaussRational>& v) const;
    QiMatrix transpose() const;

    friend bool operator==(const QiMatrix& a, const QiMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<GaussRational> data_;
};

struct RrefResult {
    QiMatrix mat;
    std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form, exact. Pivot order is deterministic (first
/// nonzero entry scanning columns left to right), so the output is canonical
/// for the row span.
RrefResult rref(const QiMatrix& m);

std::size_t rank(const QiMatrix& m);

/// Canonical basis of {x : m x = 0}, one kernel vector per row, itself in
/// reduced row echelon form.
QiMatrix kernel_basis(const QiMatrix& m);

GaussRational det(const QiMatrix& m);

std::optional<QiMatrix> inverse(const QiMatrix& m);

/// Solves A X = B for X when A has full column rank and the system is
/// consistent; nullopt otherwise. Free variables never appear in our uses,
/// and are rejected rather than silently zeroed.
std::optional<QiMatrix> solve_system(const QiMatrix& a, const QiMatrix& b);

std::optional<std::vector<GaussRational>> solve_vector(const QiMatrix& a,
                                                       const std::vector<GaussRational>& b);

}  // namespace holreg
