#pragma once

#include "ultrafun/scalar.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace uf {

/// Dense row-major matrix over exact rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
    static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;

    Matrix transposed() const;
    Matrix operator*(const Matrix& rhs) const;
    Vector operator*(const Vector& v) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix operator-() const;
    Matrix scaled(const Scalar& s) const;

    /// [this | rhs]
    Matrix hstack(const Matrix& rhs) const;
    /// [this ; rhs]
    Matrix vstack(const Matrix& rhs) const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

    bool is_zero() const;
    bool operator==(const Matrix& rhs) const = default;

    std::size_t rank() const;
    /// Basis of {x | A x = 0}, returned as vectors of length cols().
    std::vector<Vector> kernel() const;
    /// Some x with A x = b, or nullopt when the system is inconsistent.
    std::optional<Vector> solve(const Vector& b) const;
    /// Inverse of a square nonsingular matrix; nullopt when singular.
    std::optional<Matrix> inverse() const;
    Scalar determinant() const;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// Reduced row echelon form; pivots[i] is the pivot column of row i.
struct Rref {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

Rref rref(Matrix m);

/// Linear subspace of Q^n stored as its canonical (reduced row echelon) basis.
/// Two subspaces are equal iff their canonical bases are identical.
class Subspace {
public:
    explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}

    static Subspace span(const std::vector<Vector>& vectors, std::size_t ambient);
    static Subspace row_space(const Matrix& m);
    static Subspace column_space(const Matrix& m);
    static Subspace whole(std::size_t ambient);

    std::size_t ambient() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return basis_.size(); }
    const std::vector<Vector>& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;
    /// v minus its components along the canonical basis (zero iff v is in the subspace).
    Vector reduce(const Vector& v) const;

    Subspace sum(const Subspace& other) const;
    Subspace intersection(const Subspace& other) const;

    bool operator==(const Subspace& other) const = default;

private:
    std::size_t ambient_ = 0;
    std::vector<Vector> basis_;
    std::vector<std::size_t> pivots_;
};

}  // namespace uf
