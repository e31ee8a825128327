#include "ultrafun/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace uf {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("Matrix::from_rows: ragged rows");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows) throw std::invalid_argument("Matrix::from_columns: ragged columns");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
}

Vector Matrix::row(std::size_t r) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("Matrix product: shape mismatch");
    Matrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = (*this)(r, k);
            if (a == 0) continue;
            for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, c) += a * rhs(k, c);
        }
    return out;
}

Vector Matrix::operator*(const Vector& v) const {
    if (cols_ != v.size()) throw std::invalid_argument("Matrix-vector product: shape mismatch");
    Vector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("Matrix sum: shape mismatch");
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const { return *this + (-rhs); }

Matrix Matrix::operator-() const { return scaled(Scalar(-1)); }

Matrix Matrix::scaled(const Scalar& s) const {
    Matrix out = *this;
    for (auto& x : out.data_) x *= s;
    return out;
}

Matrix Matrix::hstack(const Matrix& rhs) const {
    if (rows_ != rhs.rows_) throw std::invalid_argument("hstack: row mismatch");
    Matrix out(rows_, cols_ + rhs.cols_);
    out.set_block(0, 0, *this);
    out.set_block(0, cols_, rhs);
    return out;
}

Matrix Matrix::vstack(const Matrix& rhs) const {
    if (cols_ != rhs.cols_) throw std::invalid_argument("vstack: column mismatch");
    Matrix out(rows_ + rhs.rows_, cols_);
    out.set_block(0, 0, *this);
    out.set_block(rows_, 0, rhs);
    return out;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("Matrix::block");
    Matrix out(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
    return out;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw std::out_of_range("Matrix::set_block");
    for (std::size_t r = 0; r < b.rows_; ++r)
        for (std::size_t c = 0; c < b.cols_; ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

Rref rref(Matrix m) {
    Rref out;
    std::size_t lead_row = 0;
    for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
        std::size_t p = lead_row;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != lead_row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(lead_row, j));
        Scalar inv = Scalar(1) / m(lead_row, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(lead_row, j) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead_row || m(r, c) == 0) continue;
            Scalar f = m(r, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(r, j) -= f * m(lead_row, j);
        }
        out.pivots.push_back(c);
        ++lead_row;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t Matrix::rank() const { return rref(*this).pivots.size(); }

std::vector<Vector> Matrix::kernel() const {
    Rref r = rref(*this);
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : r.pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        Vector v(cols_);
        v[free] = 1;
        for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.reduced(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vector> Matrix::solve(const Vector& b) const {
    if (b.size() != rows_) throw std::invalid_argument("Matrix::solve: shape mismatch");
    Matrix aug(rows_, cols_ + 1);
    aug.set_block(0, 0, *this);
    for (std::size_t r = 0; r < rows_; ++r) aug(r, cols_) = b[r];
    Rref r = rref(std::move(aug));
    if (!r.pivots.empty() && r.pivots.back() == cols_) return std::nullopt;
    Vector x(cols_);
    for (std::size_t i = 0; i < r.pivots.size(); ++i) x[r.pivots[i]] = r.reduced(i, cols_);
    return x;
}

std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("Matrix::inverse: not square");
    if (rows_ == 0) return Matrix(0, 0);
    Rref r = rref(hstack(identity(rows_)));
    if (r.pivots.size() < rows_ || r.pivots[rows_ - 1] != rows_ - 1) return std::nullopt;
    return r.reduced.block(0, cols_, rows_, cols_);
}

Scalar Matrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("Matrix::determinant: not square");
    Matrix m = *this;
    Scalar det = 1;
    for (std::size_t c = 0; c < cols_; ++c) {
        std::size_t p = c;
        while (p < rows_ && m(p, c) == 0) ++p;
        if (p == rows_) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t r = c + 1; r < rows_; ++r) {
            if (m(r, c) == 0) continue;
            Scalar f = m(r, c) / m(c, c);
            for (std::size_t j = c; j < cols_; ++j) m(r, j) -= f * m(c, j);
        }
    }
    return det;
}

std::string Matrix::to_string() const {
    std::string out = "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        if (r) out += "; ";
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) out += " ";
            out += uf::to_string((*this)(r, c));
        }
    }
    return out + "]";
}

Subspace Subspace::span(const std::vector<Vector>& vectors, std::size_t ambient) {
    return row_space(Matrix::from_rows(vectors, ambient));
}

Subspace Subspace::row_space(const Matrix& m) {
    Subspace s(m.cols());
    Rref r = rref(m);
    s.pivots_ = r.pivots;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) s.basis_.push_back(r.reduced.row(i));
    return s;
}

Subspace Subspace::column_space(const Matrix& m) { return row_space(m.transposed()); }

Subspace Subspace::whole(std::size_t ambient) { return row_space(Matrix::identity(ambient)); }

Vector Subspace::reduce(const Vector& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("Subspace::reduce: dimension mismatch");
    Vector r = v;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        Scalar f = r[pivots_[i]];
        if (f == 0) continue;
        for (std::size_t j = 0; j < ambient_; ++j) r[j] -= f * basis_[i][j];
    }
    return r;
}

bool Subspace::contains(const Vector& v) const { return uf::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
    for (const auto& b : other.basis_)
        if (!contains(b)) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw std::invalid_argument("Subspace::sum: ambient mismatch");
    std::vector<Vector> all = basis_;
    all.insert(all.end(), other.basis_.begin(), other.basis_.end());
    return span(all, ambient_);
}

Subspace Subspace::intersection(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw std::invalid_argument("Subspace::intersection: ambient mismatch");
    // Solve sum a_i u_i = sum b_j w_j; the intersection is spanned by the corresponding sum a_i u_i.
    const std::size_t p = basis_.size(), q = other.basis_.size();
    if (p == 0 || q == 0) return Subspace(ambient_);
    Matrix m(ambient_, p + q);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t r = 0; r < ambient_; ++r) m(r, i) = basis_[i][r];
    for (std::size_t j = 0; j < q; ++j)
        for (std::size_t r = 0; r < ambient_; ++r) m(r, p + j) = -other.basis_[j][r];
    std::vector<Vector> gens;
    for (const auto& k : m.kernel()) {
        Vector v(ambient_);
        for (std::size_t i = 0; i < p; ++i)
            for (std::size_t r = 0; r < ambient_; ++r) v[r] += k[i] * basis_[i][r];
        gens.push_back(std::move(v));
    }
    return span(gens, ambient_);
}

}  // namespace uf
