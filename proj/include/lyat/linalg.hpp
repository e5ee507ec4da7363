#ifndef LYAT_LINALG_HPP
#define LYAT_LINALG_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lyat/field.hpp"

namespace lyat {

template <class F>
using Vec = std::vector<typename F::Element>;

template <class F>
Vec<F> zero_vec(const F& f, size_t n) { return Vec<F>(n, f.zero()); }

template <class F>
bool is_zero_vec(const Vec<F>& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

template <class F>
void add_scaled(Vec<F>& dst, const typename F::Element& c, const Vec<F>& src) {
    for (size_t i = 0; i < dst.size(); ++i) dst[i] += c * src[i];
}

template <class F>
Vec<F> vec_sub(const Vec<F>& a, const Vec<F>& b) {
    Vec<F> r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

/// Dense row-major matrix over a field descriptor F. Immutable by
/// convention after construction; all algorithms are pure functions.
template <class F>
class Matrix {
public:
    using Element = typename F::Element;

    Matrix(const F& f, size_t rows, size_t cols)
        : field_(f), rows_(rows), cols_(cols), a_(rows * cols, f.zero()) {}

    static Matrix identity(const F& f, size_t n) {
        Matrix m(f, n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = f.one();
        return m;
    }

    static Matrix from_rows(const F& f, const std::vector<Vec<F>>& rows) {
        size_t rc = rows.size();
        size_t cc = rc ? rows[0].size() : 0;
        Matrix m(f, rc, cc);
        for (size_t i = 0; i < rc; ++i) {
            if (rows[i].size() != cc) throw std::invalid_argument("Matrix: ragged rows");
            for (size_t j = 0; j < cc; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    static Matrix from_cols(const F& f, const std::vector<Vec<F>>& cols) {
        size_t cc = cols.size();
        size_t rc = cc ? cols[0].size() : 0;
        Matrix m(f, rc, cc);
        for (size_t j = 0; j < cc; ++j)
            for (size_t i = 0; i < rc; ++i) m(i, j) = cols[j][i];
        return m;
    }

    const F& field() const { return field_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Element& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Element& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    Vec<F> row(size_t i) const {
        return Vec<F>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
    }
    Vec<F> col(size_t j) const {
        Vec<F> v = zero_vec(field_, rows_);
        for (size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    bool is_identity() const {
        if (rows_ != cols_) return false;
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) {
                if (i == j && !(*this)(i, j).is_one()) return false;
                if (i != j && !(*this)(i, j).is_zero()) return false;
            }
        return true;
    }

    Matrix transpose() const {
        Matrix t(field_, cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        x.expect_shape(y);
        Matrix r = x;
        for (size_t k = 0; k < r.a_.size(); ++k) r.a_[k] += y.a_[k];
        return r;
    }
    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        x.expect_shape(y);
        Matrix r = x;
        for (size_t k = 0; k < r.a_.size(); ++k) r.a_[k] -= y.a_[k];
        return r;
    }
    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols_ != y.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
        Matrix r(x.field_, x.rows_, y.cols_);
        for (size_t i = 0; i < x.rows_; ++i)
            for (size_t k = 0; k < x.cols_; ++k) {
                const Element& xik = x(i, k);
                if (xik.is_zero()) continue;
                for (size_t j = 0; j < y.cols_; ++j) r(i, j) += xik * y(k, j);
            }
        return r;
    }
    Matrix scaled(const Element& c) const {
        Matrix r = *this;
        for (auto& x : r.a_) x *= c;
        return r;
    }
    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }
    friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

    Vec<F> apply(const Vec<F>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("Matrix: shape mismatch in apply");
        Vec<F> r = zero_vec(field_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) {
                if ((*this)(i, j).is_zero() || v[j].is_zero()) continue;
                r[i] += (*this)(i, j) * v[j];
            }
        return r;
    }

private:
    void expect_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("Matrix: shape mismatch");
    }

    F field_;
    size_t rows_, cols_;
    std::vector<Element> a_;
};

namespace detail {

// Scales a Rational row to integer entries (lcm of denominators); keeps the
// fraction-free forward elimination exact in Z.
inline void make_row_integral(std::vector<Rational>& row) {
    mpz_class l(1);
    for (const auto& x : row) {
        mpz_class den = x.raw().get_den();
        l = l / mpz_class(gcd(l, den)) * den;
    }
    if (l == 1) return;
    Rational c{mpq_class(l)};
    for (auto& x : row) x *= c;
}

inline void make_row_integral(std::vector<Fp>&) {}

} // namespace detail

template <class F>
struct RrefResult {
    Matrix<F> rref;
    size_t rank;
    std::vector<size_t> pivot_cols;
};

/// Reduced row echelon form. Deterministic pivoting: columns left to right,
/// first nonzero row top-down. The forward pass is fraction-free (one-step
/// Bareiss); pivots are normalized to 1 in the final pass.
template <class F>
RrefResult<F> rref(const Matrix<F>& m) {
    const F& f = m.field();
    size_t nr = m.rows(), nc = m.cols();
    std::vector<Vec<F>> rows(nr);
    for (size_t i = 0; i < nr; ++i) {
        rows[i] = m.row(i);
        detail::make_row_integral(rows[i]);
    }

    std::vector<size_t> pivot_cols;
    typename F::Element prev_pivot = f.one();
    size_t r = 0;
    for (size_t c = 0; c < nc && r < nr; ++c) {
        size_t pr = nr;
        for (size_t i = r; i < nr; ++i)
            if (!rows[i][c].is_zero()) { pr = i; break; }
        if (pr == nr) continue;
        std::swap(rows[r], rows[pr]);
        const auto pivot = rows[r][c];
        for (size_t i = r + 1; i < nr; ++i) {
            const auto head = rows[i][c];
            for (size_t j = c; j < nc; ++j)
                rows[i][j] = (pivot * rows[i][j] - head * rows[r][j]) / prev_pivot;
        }
        prev_pivot = pivot;
        pivot_cols.push_back(c);
        ++r;
    }

    size_t rank = pivot_cols.size();
    for (size_t k = rank; k-- > 0;) {
        size_t c = pivot_cols[k];
        const auto inv = rows[k][c].inverse();
        for (size_t j = c; j < nc; ++j) rows[k][j] *= inv;
        for (size_t i = 0; i < k; ++i) {
            const auto head = rows[i][c];
            if (head.is_zero()) continue;
            for (size_t j = c; j < nc; ++j) rows[i][j] -= head * rows[k][j];
        }
    }

    Matrix<F> out(f, nr, nc);
    for (size_t i = 0; i < nr; ++i)
        for (size_t j = 0; j < nc; ++j) out(i, j) = rows[i][j];
    return {std::move(out), rank, std::move(pivot_cols)};
}

/// Linearly independent spanning vectors in RREF form; the canonical
/// representation of a subspace of K^ambient_dim.
template <class F>
class SubspaceBasis {
public:
    SubspaceBasis(const F& f, size_t ambient_dim)
        : field_(f), ambient_(ambient_dim) {}

    /// Canonicalizes arbitrary spanning vectors (RREF, zero rows dropped).
    static SubspaceBasis from_vectors(const F& f, size_t ambient_dim,
                                      const std::vector<Vec<F>>& vs) {
        SubspaceBasis b(f, ambient_dim);
        if (vs.empty()) return b;
        auto rr = rref(Matrix<F>::from_rows(f, vs));
        for (size_t i = 0; i < rr.rank; ++i) b.rows_.push_back(rr.rref.row(i));
        b.pivots_ = rr.pivot_cols;
        return b;
    }

    const F& field() const { return field_; }
    size_t ambient_dim() const { return ambient_; }
    size_t dim() const { return rows_.size(); }
    const std::vector<Vec<F>>& vectors() const { return rows_; }
    const std::vector<size_t>& pivot_cols() const { return pivots_; }

    /// Remainder of v after reduction against the basis rows.
    Vec<F> reduce(Vec<F> v) const {
        for (size_t k = 0; k < rows_.size(); ++k) {
            const auto& c = v[pivots_[k]];
            if (c.is_zero()) continue;
            auto coeff = c;  // pivot entries are 1
            for (size_t j = 0; j < ambient_; ++j) v[j] -= coeff * rows_[k][j];
        }
        return v;
    }

    bool contains(const Vec<F>& v) const { return is_zero_vec<F>(reduce(v)); }

    bool contains_all(const SubspaceBasis& other) const {
        for (const auto& v : other.rows_)
            if (!contains(v)) return false;
        return true;
    }

    friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b) {
        return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
    }
    friend bool operator!=(const SubspaceBasis& a, const SubspaceBasis& b) { return !(a == b); }

private:
    F field_;
    size_t ambient_;
    std::vector<Vec<F>> rows_;
    std::vector<size_t> pivots_;
};

/// Basis of {x : m x = 0}, canonicalized to RREF.
template <class F>
SubspaceBasis<F> kernel_basis(const Matrix<F>& m) {
    const F& f = m.field();
    auto rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : rr.pivot_cols) is_pivot[c] = true;

    std::vector<Vec<F>> out;
    for (size_t j = 0; j < m.cols(); ++j) {
        if (is_pivot[j]) continue;
        Vec<F> v = zero_vec(f, m.cols());
        v[j] = f.one();
        for (size_t k = 0; k < rr.pivot_cols.size(); ++k)
            v[rr.pivot_cols[k]] = -rr.rref(k, j);
        out.push_back(std::move(v));
    }
    return SubspaceBasis<F>::from_vectors(f, m.cols(), out);
}

template <class F>
struct AffineSolution {
    Vec<F> particular;
    SubspaceBasis<F> homogeneous;
};

/// Solution set of a x = b, or nullopt when inconsistent. The particular
/// solution sets all free variables to zero.
template <class F>
std::optional<AffineSolution<F>> solve_affine(const Matrix<F>& a, const Vec<F>& b) {
    if (a.rows() != b.size()) throw std::invalid_argument("solve_affine: shape mismatch");
    const F& f = a.field();
    Matrix<F> aug(f, a.rows(), a.cols() + 1);
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    auto rr = rref(aug);
    for (size_t c : rr.pivot_cols)
        if (c == a.cols()) return std::nullopt;

    Vec<F> x = zero_vec(f, a.cols());
    for (size_t k = 0; k < rr.pivot_cols.size(); ++k)
        x[rr.pivot_cols[k]] = rr.rref(k, a.cols());
    return AffineSolution<F>{std::move(x), kernel_basis(a)};
}

/// Exact inverse, or nullopt when singular.
template <class F>
std::optional<Matrix<F>> invert(const Matrix<F>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("invert: matrix not square");
    const F& f = m.field();
    size_t n = m.rows();
    Matrix<F> aug(f, n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = f.one();
    }
    auto rr = rref(aug);
    if (rr.rank < n || rr.pivot_cols[n - 1] >= n) return std::nullopt;
    Matrix<F> inv(f, n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv(i, j) = rr.rref(i, n + j);
    return inv;
}

template <class F>
size_t rank(const Matrix<F>& m) { return rref(m).rank; }

} // namespace lyat

#endif
