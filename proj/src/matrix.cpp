#include "homwb/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace homwb {

Matrix Matrix::identity(Field f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
}

Matrix Matrix::from_ints(Field f, std::size_t rows, std::size_t cols, const std::vector<long>& entries) {
    if (entries.size() != rows * cols) throw std::invalid_argument("entry count mismatch");
    Matrix m(f, rows, cols);
    for (std::size_t k = 0; k < entries.size(); ++k) m.a_[k] = f.from_int(entries[k]);
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (x.num != 0) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            if (i == j ? !f_.is_one(at(i, j)) : !f_.is_zero(at(i, j))) return false;
        }
    return true;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("dimension mismatch in +");
    Matrix r = *this;
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = f_.add(a_[k], o.a_[k]);
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + o.negated(); }

Matrix Matrix::negated() const {
    Matrix r = *this;
    for (auto& x : r.a_) x = f_.neg(x);
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("dimension mismatch in *");
    Matrix r(f_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& x = at(i, k);
            if (f_.is_zero(x)) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Scalar& y = o.at(k, j);
                if (f_.is_zero(y)) continue;
                r.at(i, j) = f_.add(r.at(i, j), f_.mul(x, y));
            }
        }
    return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix r = *this;
    for (auto& x : r.a_) x = f_.mul(x, c);
    return r;
}

Matrix Matrix::transposed() const {
    Matrix r(f_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Matrix Matrix::col(std::size_t j) const { return block(0, j, rows_, 1); }
Matrix Matrix::row(std::size_t i) const { return block(i, 0, 1, cols_); }

Matrix Matrix::block(std::size_t i0, std::size_t j0, std::size_t r, std::size_t c) const {
    if (i0 + r > rows_ || j0 + c > cols_) throw std::out_of_range("block out of range");
    Matrix m(f_, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = at(i0 + i, j0 + j);
    return m;
}

void Matrix::set_block(std::size_t i0, std::size_t j0, const Matrix& m) {
    if (i0 + m.rows_ > rows_ || j0 + m.cols_ > cols_) throw std::out_of_range("block out of range");
    for (std::size_t i = 0; i < m.rows_; ++i)
        for (std::size_t j = 0; j < m.cols_; ++j) at(i0 + i, j0 + j) = m.at(i, j);
}

Matrix Matrix::hstack(const Matrix& o) const {
    if (rows_ != o.rows_) throw std::invalid_argument("hstack row mismatch");
    Matrix r(f_, rows_, cols_ + o.cols_);
    r.set_block(0, 0, *this);
    r.set_block(0, cols_, o);
    return r;
}

Matrix Matrix::vstack(const Matrix& o) const {
    if (cols_ != o.cols_) throw std::invalid_argument("vstack col mismatch");
    Matrix r(f_, rows_ + o.rows_, cols_);
    r.set_block(0, 0, *this);
    r.set_block(rows_, 0, o);
    return r;
}

Matrix Matrix::kron(const Matrix& o) const {
    Matrix r(f_, rows_ * o.rows_, cols_ * o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            if (f_.is_zero(at(i, j))) continue;
            r.set_block(i * o.rows_, j * o.cols_, o.scaled(at(i, j)));
        }
    return r;
}

Matrix Matrix::vec() const {
    Matrix v(f_, rows_ * cols_, 1);
    for (std::size_t j = 0; j < cols_; ++j)
        for (std::size_t i = 0; i < rows_; ++i) v.at(j * rows_ + i, 0) = at(i, j);
    return v;
}

Matrix Matrix::unvec(const Matrix& v, std::size_t rows, std::size_t cols) {
    if (v.rows() != rows * cols || v.cols() != 1) throw std::invalid_argument("unvec shape mismatch");
    Matrix m(v.field(), rows, cols);
    for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = v.at(j * rows + i, 0);
    return m;
}

std::pair<Matrix, std::vector<std::size_t>> Matrix::rref() const {
    Matrix m = *this;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t piv = rows_;
        for (std::size_t i = r; i < rows_; ++i)
            if (!f_.is_zero(m.at(i, c))) {
                piv = i;
                break;
            }
        if (piv == rows_) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(r, j));
        Scalar inv = f_.inv(m.at(r, c));
        for (std::size_t j = c; j < cols_; ++j) m.at(r, j) = f_.mul(m.at(r, j), inv);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || f_.is_zero(m.at(i, c))) continue;
            Scalar factor = m.at(i, c);
            for (std::size_t j = c; j < cols_; ++j)
                m.at(i, j) = f_.sub(m.at(i, j), f_.mul(factor, m.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return {m, pivots};
}

std::size_t Matrix::rank() const { return rref().second.size(); }

Matrix Matrix::kernel_basis() const {
    auto [m, pivots] = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix k(f_, cols_, free_cols.size());
    for (std::size_t t = 0; t < free_cols.size(); ++t) {
        std::size_t fc = free_cols[t];
        k.at(fc, t) = f_.one();
        for (std::size_t r = 0; r < pivots.size(); ++r) k.at(pivots[r], t) = f_.neg(m.at(r, fc));
    }
    return k;
}

std::optional<Matrix> Matrix::solve(const Matrix& b) const {
    if (b.rows() != rows_) throw std::invalid_argument("solve: rhs row mismatch");
    auto [m, pivots] = hstack(b).rref();
    for (auto c : pivots)
        if (c >= cols_) return std::nullopt;
    Matrix x(f_, cols_, b.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t j = 0; j < b.cols(); ++j) x.at(pivots[r], j) = m.at(r, cols_ + j);
    return x;
}

std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    auto [m, pivots] = hstack(identity(f_, rows_)).rref();
    if (pivots.size() != rows_) return std::nullopt;
    for (std::size_t r = 0; r < rows_; ++r)
        if (pivots[r] != r) return std::nullopt;
    return m.block(0, cols_, rows_, cols_);
}

std::pair<std::size_t, Matrix> rank_kernel(const Matrix& m) {
    return {m.rank(), m.kernel_basis()};
}

Matrix row_space_canonical(const Matrix& m) {
    auto [r, pivots] = m.rref();
    return r.block(0, 0, pivots.size(), m.cols());
}

bool span_contains(const Matrix& basis, const Matrix& v) {
    return basis.hstack(v).rank() == basis.rank();
}

Matrix column_space_basis(const Matrix& m) {
    auto [r, pivots] = m.rref();
    Matrix b(m.field(), m.rows(), pivots.size());
    for (std::size_t t = 0; t < pivots.size(); ++t) b.set_block(0, t, m.col(pivots[t]));
    return b;
}

Matrix from_columns(Field f, std::size_t dim, const std::vector<Matrix>& cols) {
    Matrix m(f, dim, cols.size());
    for (std::size_t t = 0; t < cols.size(); ++t) m.set_block(0, t, cols[t]);
    return m;
}

Complement complement_projection(const Matrix& subspace_cols, std::size_t n) {
    const Field& f = subspace_cols.field();
    Matrix rr = row_space_canonical(subspace_cols.transposed());
    std::vector<bool> is_pivot(n, false);
    for (std::size_t r = 0; r < rr.rows(); ++r) {
        std::size_t piv = 0;
        while (piv < n && f.is_zero(rr.at(r, piv))) ++piv;
        is_pivot[piv] = true;
    }
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < n; ++i)
        if (!is_pivot[i]) rest.push_back(i);
    const std::size_t q = rest.size();
    Matrix proj(f, q, n);
    for (std::size_t j = 0; j < n; ++j) {
        Matrix e = Matrix::zero(f, 1, n);
        e.at(0, j) = f.one();
        for (std::size_t r = 0; r < rr.rows(); ++r) {
            std::size_t piv = 0;
            while (piv < n && f.is_zero(rr.at(r, piv))) ++piv;
            Scalar c = e.at(0, piv);
            if (f.is_zero(c)) continue;
            for (std::size_t t = piv; t < n; ++t) e.at(0, t) = f.sub(e.at(0, t), f.mul(c, rr.at(r, t)));
        }
        for (std::size_t b = 0; b < q; ++b) proj.at(b, j) = e.at(0, rest[b]);
    }
    Matrix section(f, n, q);
    for (std::size_t b = 0; b < q; ++b) section.at(rest[b], b) = f.one();
    return {std::move(proj), std::move(section)};
}

std::string to_string(const Matrix& m) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ' ';
            os << m.field().to_string(m.at(i, j));
        }
        if (i + 1 < m.rows()) os << "; ";
    }
    return os.str();
}

}  // namespace homwb
