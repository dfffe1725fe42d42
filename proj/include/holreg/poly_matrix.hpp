#pragma once

#include <vector>

#include "holreg/multipoly.hpp"

namespace holreg {

/// Dense matrix with MultiPoly entries, all in one ring.
class PolyMatrix {
public:
    PolyMatrix(std::size_t rows, std::size_t cols, int nvars);

    static PolyMatrix identity(std::size_t n, int nvars);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    int nvars() const { return nvars_; }

    MultiPoly& at(std::size_t i, std::size_t j);
    const MultiPoly& at(std::size_t i, std::size_t j) const;

    PolyMatrix operator*(const PolyMatrix& o) const;
    std::vector<MultiPoly> apply(const std::vector<MultiPoly>& v) const;
    PolyMatrix transpose() const;

    /// Entrywise evaluation at a rational point.
    std::vector<std::vector<GaussRational>> evaluate(const std::vector<GaussRational>& point) const;

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    std::size_t rows_, cols_;
    int nvars_;
    std::vector<MultiPoly> entries_;
};

/// Determinant of a square PolyMatrix: cofactor expansion for small sizes,
/// fraction-free Bareiss elimination (with row pivoting) beyond.
MultiPoly poly_det(const PolyMatrix& m);

struct AdjugateResult {
    PolyMatrix adjugate;
    MultiPoly det;
};

/// Classical adjugate together with the determinant:
/// adjugate * m == det * identity, exactly.
AdjugateResult poly_adjugate(const PolyMatrix& m);

}  // namespace holreg
