#include "sl2cas/polymatrix.hpp"

#include <stdexcept>
#include <utility>

namespace sl2cas {

PolyMatrix::PolyMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(rows * cols) {
    if (rows < 0 || cols < 0) throw std::domain_error("negative matrix dimension");
}

PolyMatrix::PolyMatrix(int rows, int cols, std::vector<UniPoly> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (static_cast<int>(e_.size()) != rows * cols)
        throw std::invalid_argument("matrix entry grid does not match dimensions");
}

PolyMatrix PolyMatrix::identity(int n) {
    PolyMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = UniPoly(Rational(1));
    return m;
}

PolyMatrix PolyMatrix::diagonal(const std::vector<UniPoly>& d) {
    PolyMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (int i = 0; i < m.rows_; ++i) m.at(i, i) = d[i];
    return m;
}

UniPoly& PolyMatrix::at(int i, int j) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw std::out_of_range("matrix index");
    return e_[static_cast<std::size_t>(i) * cols_ + j];
}

const UniPoly& PolyMatrix::at(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw std::out_of_range("matrix index");
    return e_[static_cast<std::size_t>(i) * cols_ + j];
}

PolyMatrix PolyMatrix::operator-() const {
    PolyMatrix r(*this);
    for (auto& p : r.e_) p = -p;
    return r;
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::domain_error("matrix shape mismatch");
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::domain_error("matrix shape mismatch");
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_) throw std::domain_error("matrix shape mismatch in product");
    PolyMatrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const UniPoly& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

PolyMatrix operator*(const UniPoly& s, PolyMatrix a) {
    for (auto& p : a.e_) p = s * p;
    return a;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

bool PolyMatrix::is_zero() const {
    for (const auto& p : e_)
        if (!p.is_zero()) return false;
    return true;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

PolyMatrix PolyMatrix::shift(int k) const {
    PolyMatrix r(*this);
    for (auto& p : r.e_) p = p.shift(k);
    return r;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<int>& rowIdx,
                                 const std::vector<int>& colIdx) const {
    PolyMatrix r(static_cast<int>(rowIdx.size()), static_cast<int>(colIdx.size()));
    for (std::size_t i = 0; i < rowIdx.size(); ++i)
        for (std::size_t j = 0; j < colIdx.size(); ++j)
            r.at(static_cast<int>(i), static_cast<int>(j)) = at(rowIdx[i], colIdx[j]);
    return r;
}

PolyMatrix PolyMatrix::columns(int first, int count) const {
    PolyMatrix r(rows_, count);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < count; ++j) r.at(i, j) = at(i, first + j);
    return r;
}

std::vector<UniPoly> PolyMatrix::apply_shifted(const std::vector<UniPoly>& v, int shift) const {
    if (static_cast<int>(v.size()) != cols_) throw std::domain_error("vector length mismatch");
    std::vector<UniPoly> out(rows_);
    for (int j = 0; j < cols_; ++j) {
        const UniPoly vj = v[j].shift(shift);
        if (vj.is_zero()) continue;
        for (int i = 0; i < rows_; ++i) out[i] += at(i, j) * vj;
    }
    return out;
}

void PolyMatrix::swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void PolyMatrix::swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void PolyMatrix::add_row_multiple(int dst, int src, const UniPoly& f) {
    if (f.is_zero()) return;
    for (int c = 0; c < cols_; ++c) at(dst, c) += f * at(src, c);
}

void PolyMatrix::add_col_multiple(int dst, int src, const UniPoly& f) {
    if (f.is_zero()) return;
    for (int r = 0; r < rows_; ++r) at(r, dst) += f * at(r, src);
}

void PolyMatrix::scale_row(int i, const Rational& s) {
    for (int c = 0; c < cols_; ++c) at(i, c) *= s;
}

void PolyMatrix::scale_col(int j, const Rational& s) {
    for (int r = 0; r < rows_; ++r) at(r, j) *= s;
}

UniPoly PolyMatrix::det() const {
    if (rows_ != cols_) throw std::domain_error("determinant of a non-square matrix");
    const int n = rows_;
    if (n == 0) return UniPoly(Rational(1));
    // Bareiss fraction-free elimination; every division below is exact.
    PolyMatrix w(*this);
    UniPoly prev(Rational(1));
    Rational sign(1);
    for (int k = 0; k + 1 < n; ++k) {
        if (w.at(k, k).is_zero()) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (!w.at(i, k).is_zero()) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return {};
            w.swap_rows(k, pivot);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
        prev = w.at(k, k);
    }
    return w.at(n - 1, n - 1) * sign;
}

PolyMatrix inverse_unimodular(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::domain_error("inverse of a non-square matrix");
    const int n = m.rows();
    const UniPoly d = m.det();
    if (!d.is_constant() || d.is_zero())
        throw std::domain_error("matrix is not unimodular (det = " + d.to_string() + ")");
    const Rational inv = Rational(1) / d.coeff(0);
    PolyMatrix adj(n, n);
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<int> ri, ci;
            for (int k = 0; k < n; ++k) {
                if (k != i) ri.push_back(k);
                if (k != j) ci.push_back(k);
            }
            UniPoly c = m.submatrix(ri, ci).det();
            if ((i + j) % 2 == 1) c = -c;
            adj.at(j, i) = c * inv;
        }
    return adj;
}

PolyMatrix hstack(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows() != b.rows()) throw std::domain_error("hstack row mismatch");
    PolyMatrix r(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
    }
    return r;
}

std::string PolyMatrix::to_string() const {
    std::string s = "[";
    for (int i = 0; i < rows_; ++i) {
        s += (i ? "; [" : "[");
        for (int j = 0; j < cols_; ++j) {
            if (j) s += ", ";
            s += at(i, j).to_string();
        }
        s += "]";
    }
    return s + "]";
}

}  // namespace sl2cas
