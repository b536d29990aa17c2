#ifndef HOMWB_MATRIX_HPP
#define HOMWB_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "homwb/field.hpp"

namespace homwb {

/// Dense exact matrix over a fixed field, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(Field f, std::size_t rows, std::size_t cols)
        : f_(f), rows_(rows), cols_(cols), a_(rows * cols, f.zero()) {}

    static Matrix identity(Field f, std::size_t n);
    static Matrix zero(Field f, std::size_t rows, std::size_t cols) { return Matrix(f, rows, cols); }
    /// Build from integer entries, row-major.
    static Matrix from_ints(Field f, std::size_t rows, std::size_t cols, const std::vector<long>& entries);

    const Field& field() const { return f_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool is_zero() const;
    bool is_identity() const;

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix scaled(const Scalar& c) const;
    Matrix transposed() const;
    Matrix negated() const;

    Matrix col(std::size_t j) const;
    Matrix row(std::size_t i) const;
    Matrix block(std::size_t i0, std::size_t j0, std::size_t r, std::size_t c) const;
    void set_block(std::size_t i0, std::size_t j0, const Matrix& m);

    /// [this | o] side by side.
    Matrix hstack(const Matrix& o) const;
    /// this over o.
    Matrix vstack(const Matrix& o) const;
    Matrix kron(const Matrix& o) const;

    /// Column vector of length rows*cols listing entries column-major,
    /// so vec(A X B) = (B^T (x) A) vec(X).
    Matrix vec() const;
    static Matrix unvec(const Matrix& v, std::size_t rows, std::size_t cols);

    /// Reduced row-echelon form (first-nonzero pivoting) and pivot columns.
    std::pair<Matrix, std::vector<std::size_t>> rref() const;
    std::size_t rank() const;
    /// Columns span the right null space; linearly independent.
    Matrix kernel_basis() const;
    /// Particular solution of this * x = b, if one exists.
    std::optional<Matrix> solve(const Matrix& b) const;
    std::optional<Matrix> inverse() const;

    bool operator==(const Matrix& o) const = default;

private:
    Field f_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> a_;
};

/// (rank, kernel basis).
std::pair<std::size_t, Matrix> rank_kernel(const Matrix& m);

/// Canonical representative (RREF with zero rows dropped) of the row space.
Matrix row_space_canonical(const Matrix& m);

/// Does the column span of `basis` contain every column of `v`?
bool span_contains(const Matrix& basis, const Matrix& v);

/// Basis (as columns) of the column span.
Matrix column_space_basis(const Matrix& m);

/// Matrices as column vectors side by side.
Matrix from_columns(Field f, std::size_t dim, const std::vector<Matrix>& cols);

/// For a subspace (columns) of K^n: projection onto a coordinate complement
/// and its section, with projection * section = id.
struct Complement {
    Matrix projection;  // q x n
    Matrix section;     // n x q
};
Complement complement_projection(const Matrix& subspace_cols, std::size_t n);

std::string to_string(const Matrix& m);

}  // namespace homwb

#endif
