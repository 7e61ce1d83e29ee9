#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace symquiv {

// Dense row-major matrix over an exact field K. Every matrix carries a unit
// element of its field so that empty and zero matrices can still mint
// constants (needed for F_p, where elements know their modulus).
template <class K>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0), unit_(K().one_like()) {}
    Matrix(int rows, int cols, K unit = K().one_like())
        : rows_(rows), cols_(cols), unit_(unit), a_(size_t(rows) * cols, unit.zero_like()) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative shape");
    }

    static Matrix identity(int n, K unit = K().one_like()) {
        Matrix m(n, n, unit);
        for (int i = 0; i < n; ++i) m(i, i) = unit;
        return m;
    }

    static Matrix from_rows(std::initializer_list<std::initializer_list<K>> rows) {
        int r = int(rows.size());
        int c = r == 0 ? 0 : int(rows.begin()->size());
        Matrix m(r, c);
        int i = 0;
        for (auto& row : rows) {
            if (int(row.size()) != c) throw std::invalid_argument("Matrix: ragged rows");
            int j = 0;
            for (auto& x : row) m(i, j++) = x;
            ++i;
        }
        if (r > 0) m.unit_ = m(0, 0).one_like();
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const K& unit() const { return unit_; }
    K zero() const { return unit_.zero_like(); }

    K& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const K& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    bool is_zero() const {
        for (const K& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_, unit_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix operator-() const {
        Matrix r = *this;
        for (K& x : r.a_) x = -x;
        return r;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.check_same_shape(b);
        Matrix r = a;
        for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.check_same_shape(b);
        Matrix r = a;
        for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= b.a_[i];
        return r;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
        Matrix r(a.rows_, b.cols_, a.unit_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const K& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }
    friend Matrix operator*(const K& c, const Matrix& m) {
        Matrix r = m;
        for (K& x : r.a_) x = c * x;
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix block(int i0, int j0, int r, int c) const {
        Matrix m(r, c, unit_);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) m(i, j) = (*this)(i0 + i, j0 + j);
        return m;
    }
    void set_block(int i0, int j0, const Matrix& b) {
        for (int i = 0; i < b.rows_; ++i)
            for (int j = 0; j < b.cols_; ++j) (*this)(i0 + i, j0 + j) = b(i, j);
    }
    Matrix col(int j) const { return block(0, j, rows_, 1); }

    std::string str() const {
        std::string s = "[";
        for (int i = 0; i < rows_; ++i) {
            s += i ? "; " : "";
            for (int j = 0; j < cols_; ++j) s += (j ? " " : "") + to_string((*this)(i, j));
        }
        return s + "]";
    }

private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("Matrix: shape mismatch");
    }

    int rows_, cols_;
    K unit_;
    std::vector<K> a_;
};

template <class K>
Matrix<K> hstack(const Matrix<K>& a, const Matrix<K>& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
    Matrix<K> m(a.rows(), a.cols() + b.cols(), a.unit());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    return m;
}

template <class K>
Matrix<K> vstack(const Matrix<K>& a, const Matrix<K>& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
    Matrix<K> m(a.rows() + b.rows(), a.cols(), a.unit());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), 0, b);
    return m;
}

template <class K>
Matrix<K> block_diag(const Matrix<K>& a, const Matrix<K>& b) {
    Matrix<K> m(a.rows() + b.rows(), a.cols() + b.cols(), a.unit());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), a.cols(), b);
    return m;
}

// In-place reduced row echelon form. Returns the pivot column indices.
template <class K>
std::vector<int> rref(Matrix<K>& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!m(i, c).is_zero()) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        K inv = m(r, c).inverse();
        for (int j = c; j < m.cols(); ++j) m(r, j) = inv * m(r, j);
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            K f = m(i, c);
            for (int j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class K>
int rank(Matrix<K> m) {
    return int(rref(m).size());
}

// Basis of ker(m) as a list of column vectors.
template <class K>
std::vector<Matrix<K>> kernel_basis(const Matrix<K>& m) {
    Matrix<K> e = m;
    std::vector<int> pivots = rref(e);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<Matrix<K>> basis;
    for (int c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        Matrix<K> v(m.cols(), 1, m.unit());
        v(c, 0) = m.unit();
        for (size_t r = 0; r < pivots.size(); ++r)
            if (pivots[r] < c) v(pivots[r], 0) = -e(int(r), c);
        basis.push_back(v);
    }
    return basis;
}

template <class K>
K det(const Matrix<K>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: non-square matrix");
    int n = m.rows();
    Matrix<K> a = m;
    K d = m.unit();
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (!a(i, c).is_zero()) { p = i; break; }
        if (p < 0) return m.zero();
        if (p != c) {
            for (int j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
            d = -d;
        }
        d = d * a(c, c);
        K inv = a(c, c).inverse();
        for (int i = c + 1; i < n; ++i) {
            if (a(i, c).is_zero()) continue;
            K f = a(i, c) * inv;
            for (int j = c; j < n; ++j) a(i, j) -= f * a(c, j);
        }
    }
    return d;
}

// One solution X of A X = B, or nullopt when the system is inconsistent.
template <class K>
std::optional<Matrix<K>> solve(const Matrix<K>& a, const Matrix<K>& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
    Matrix<K> aug = hstack(a, b);
    std::vector<int> pivots = rref(aug);
    for (int c : pivots)
        if (c >= a.cols()) return std::nullopt;
    Matrix<K> x(a.cols(), b.cols(), a.unit());
    for (size_t r = 0; r < pivots.size(); ++r)
        for (int j = 0; j < b.cols(); ++j) x(pivots[r], j) = aug(int(r), a.cols() + j);
    return x;
}

template <class K>
std::optional<Matrix<K>> inverse(const Matrix<K>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: non-square matrix");
    Matrix<K> aug = hstack(m, Matrix<K>::identity(m.rows(), m.unit()));
    std::vector<int> pivots = rref(aug);
    int left = 0;
    for (int c : pivots)
        if (c < m.cols()) ++left;
    if (left != m.rows()) return std::nullopt;
    return aug.block(0, m.cols(), m.rows(), m.cols());
}

// Columns of m at its pivot positions: a basis of the column space.
template <class K>
Matrix<K> column_space_basis(const Matrix<K>& m) {
    Matrix<K> e = m;
    std::vector<int> pivots = rref(e);
    Matrix<K> b(m.rows(), int(pivots.size()), m.unit());
    for (size_t k = 0; k < pivots.size(); ++k)
        for (int i = 0; i < m.rows(); ++i) b(i, int(k)) = m(i, pivots[k]);
    return b;
}

// Does v lie in the column span of basis?
template <class K>
bool in_column_span(const Matrix<K>& basis, const Matrix<K>& v) {
    return solve(basis, v).has_value();
}

}  // namespace symquiv
