#pragma once

#include <string>
#include <vector>

#include "sl2cas/unipoly.hpp"

namespace sl2cas {

/// Dense matrix over Q[z], row-major.
class PolyMatrix {
public:
    PolyMatrix() : rows_(0), cols_(0) {}
    PolyMatrix(int rows, int cols);
    PolyMatrix(int rows, int cols, std::vector<UniPoly> entries);

    static PolyMatrix identity(int n);
    static PolyMatrix diagonal(const std::vector<UniPoly>& d);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    UniPoly& at(int i, int j);
    const UniPoly& at(int i, int j) const;

    PolyMatrix operator-() const;
    PolyMatrix& operator+=(const PolyMatrix& o);
    PolyMatrix& operator-=(const PolyMatrix& o);
    friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
    friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator*(const UniPoly& s, PolyMatrix a);

    bool operator==(const PolyMatrix& o) const;
    bool operator!=(const PolyMatrix& o) const { return !(*this == o); }

    bool is_zero() const;
    PolyMatrix transpose() const;
    PolyMatrix shift(int k) const;  // entrywise z -> z + k
    PolyMatrix submatrix(const std::vector<int>& rowIdx, const std::vector<int>& colIdx) const;
    PolyMatrix columns(int first, int count) const;

    // Semilinear application: result(z) = M(z) * v(z + shift).
    std::vector<UniPoly> apply_shifted(const std::vector<UniPoly>& v, int shift) const;

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    void add_row_multiple(int dst, int src, const UniPoly& f);  // row dst += f * row src
    void add_col_multiple(int dst, int src, const UniPoly& f);  // col dst += f * col src
    void scale_row(int i, const Rational& s);
    void scale_col(int j, const Rational& s);

    // Fraction-free (Bareiss) determinant.
    UniPoly det() const;

    std::string to_string() const;

private:
    int rows_, cols_;
    std::vector<UniPoly> e_;
};

// Exact inverse of a matrix with constant nonzero determinant; domain error
// otherwise.
PolyMatrix inverse_unimodular(const PolyMatrix& m);

PolyMatrix hstack(const PolyMatrix& a, const PolyMatrix& b);

}  // namespace sl2cas
