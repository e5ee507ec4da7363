#ifndef LYAT_COCHAIN_HPP
#define LYAT_COCHAIN_HPP

#include <vector>

#include "lyat/representation.hpp"

namespace lyat {

/// Order-r tensor on base indices {0..n-1}^r with values in K^m.
template <class F>
struct VTensor {
    VTensor(const F& f, size_t n_, size_t m_, size_t order_)
        : n(n_), m(m_), order(order_),
          data(pow_n(n_, order_) * m_, f.zero()) {}

    static size_t pow_n(size_t n, size_t e) {
        size_t r = 1;
        while (e--) r *= n;
        return r;
    }

    size_t n, m, order;
    std::vector<typename F::Element> data;

    size_t flat(const std::vector<size_t>& idx) const {
        size_t r = 0;
        for (size_t t = 0; t < order; ++t) r = r * n + idx[t];
        return r;
    }
    typename F::Element& at(const std::vector<size_t>& idx, size_t v) {
        return data[flat(idx) * m + v];
    }
    const typename F::Element& at(const std::vector<size_t>& idx, size_t v) const {
        return data[flat(idx) * m + v];
    }
    Vec<F> value(const F& f, const std::vector<size_t>& idx) const {
        Vec<F> out = zero_vec(f, m);
        size_t base = flat(idx) * m;
        for (size_t v = 0; v < m; ++v) out[v] = data[base + v];
        return out;
    }
    void set_value(const std::vector<size_t>& idx, const Vec<F>& val) {
        size_t base = flat(idx) * m;
        for (size_t v = 0; v < m; ++v) data[base + v] = val[v];
    }

    /// Value at a tuple where one slot holds a coordinate vector instead of
    /// a basis index: contracts that slot.
    Vec<F> value_subst(const F& f, std::vector<size_t> idx, size_t slot,
                       const Vec<F>& vec) const {
        Vec<F> out = zero_vec(f, m);
        for (size_t k = 0; k < n; ++k) {
            if (vec[k].is_zero()) continue;
            idx[slot] = k;
            size_t base = flat(idx) * m;
            for (size_t v = 0; v < m; ++v) out[v] += vec[k] * data[base + v];
        }
        return out;
    }

    bool is_zero() const {
        for (const auto& x : data)
            if (!x.is_zero()) return false;
        return true;
    }

    friend bool operator==(const VTensor& a, const VTensor& b) {
        return a.n == b.n && a.m == b.m && a.order == b.order && a.data == b.data;
    }
    friend bool operator!=(const VTensor& a, const VTensor& b) { return !(a == b); }
};

/// (2p,2p+1)-cochain: even part of arity 2p, odd part of arity 2p+1, both
/// vanishing when the two entries of a paired slot coincide.
template <class F>
struct CochainPair {
    CochainPair(const F& f, size_t n, size_t m, size_t level_)
        : level(level_), even(f, n, m, 2 * level_), odd(f, n, m, 2 * level_ + 1) {}

    size_t level;
    VTensor<F> even;
    VTensor<F> odd;

    bool is_zero() const { return even.is_zero() && odd.is_zero(); }

    friend bool operator==(const CochainPair& a, const CochainPair& b) {
        return a.level == b.level && a.even == b.even && a.odd == b.odd;
    }
    friend bool operator!=(const CochainPair& a, const CochainPair& b) { return !(a == b); }

    CochainPair operator-(const CochainPair& o) const {
        CochainPair r = *this;
        for (size_t t = 0; t < r.even.data.size(); ++t) r.even.data[t] -= o.even.data[t];
        for (size_t t = 0; t < r.odd.data.size(); ++t) r.odd.data[t] -= o.odd.data[t];
        return r;
    }
    CochainPair operator+(const CochainPair& o) const {
        CochainPair r = *this;
        for (size_t t = 0; t < r.even.data.size(); ++t) r.even.data[t] += o.even.data[t];
        for (size_t t = 0; t < r.odd.data.size(); ++t) r.odd.data[t] += o.odd.data[t];
        return r;
    }
    CochainPair scaled(const typename F::Element& c) const {
        CochainPair r = *this;
        for (auto& x : r.even.data) x *= c;
        for (auto& x : r.odd.data) x *= c;
        return r;
    }

    /// Verifies the paired-slot conditions (skew within each slot pair,
    /// zero on equal paired indices) on all tuples.
    bool slot_conditions_hold() const {
        return tensor_slot_ok(even) && tensor_slot_ok(odd);
    }

private:
    static bool tensor_slot_ok(const VTensor<F>& t) {
        size_t pairs = t.order / 2;
        size_t total = VTensor<F>::pow_n(t.n, t.order);
        std::vector<size_t> idx(t.order, 0);
        for (size_t flat = 0; flat < total; ++flat) {
            size_t rem = flat;
            for (size_t s = t.order; s-- > 0;) { idx[s] = rem % t.n; rem /= t.n; }
            for (size_t pp = 0; pp < pairs; ++pp) {
                size_t a = idx[2 * pp], b = idx[2 * pp + 1];
                if (a == b) {
                    for (size_t v = 0; v < t.m; ++v)
                        if (!t.data[flat * t.m + v].is_zero()) return false;
                } else if (a > b) {
                    std::vector<size_t> sw = idx;
                    std::swap(sw[2 * pp], sw[2 * pp + 1]);
                    size_t g = t.flat(sw);
                    for (size_t v = 0; v < t.m; ++v)
                        if (t.data[flat * t.m + v] != -t.data[g * t.m + v]) return false;
                }
            }
        }
        return true;
    }
};

/// Coordinate bookkeeping for cochain spaces at a fixed (n, m):
/// C^1 uses (a, v) -> a*m + v; C^2 enumerates {(i,j): i<j} x V lexicographically,
/// C^3 enumerates {(i,j,k): i<j, any k} x V. C^(2,3) is C^2 followed by C^3.
struct CochainCoords {
    size_t n = 0, m = 0;

    size_t npairs() const { return n * (n - 1) / 2; }
    size_t pair_rank(size_t i, size_t j) const {
        // requires i < j
        return i * n - i * (i + 1) / 2 + (j - i - 1);
    }
    size_t c1_dim() const { return n * m; }
    size_t c2_dim() const { return npairs() * m; }
    size_t c3_dim() const { return npairs() * n * m; }
    size_t c23_dim() const { return c2_dim() + c3_dim(); }
    size_t c4_dim() const { return npairs() * npairs() * m; }
    size_t c5_dim() const { return npairs() * npairs() * n * m; }
    size_t c45_dim() const { return c4_dim() + c5_dim(); }

    size_t c1_index(size_t a, size_t v) const { return a * m + v; }
    size_t c2_index(size_t i, size_t j, size_t v) const { return pair_rank(i, j) * m + v; }
    size_t c3_index(size_t i, size_t j, size_t k, size_t v) const {
        return (pair_rank(i, j) * n + k) * m + v;
    }
    size_t c4_index(size_t i1, size_t j1, size_t i2, size_t j2, size_t v) const {
        return (pair_rank(i1, j1) * npairs() + pair_rank(i2, j2)) * m + v;
    }
    size_t c5_index(size_t i1, size_t j1, size_t i2, size_t j2, size_t k, size_t v) const {
        return ((pair_rank(i1, j1) * npairs() + pair_rank(i2, j2)) * n + k) * m + v;
    }
};

/// Flattens a level-1 pair to C^(2,3) coordinates.
template <class F>
Vec<F> c23_coords(const F& f, const CochainPair<F>& c) {
    CochainCoords cc{c.even.n, c.even.m};
    Vec<F> out = zero_vec(f, cc.c23_dim());
    for (size_t i = 0; i < cc.n; ++i)
        for (size_t j = i + 1; j < cc.n; ++j)
            for (size_t v = 0; v < cc.m; ++v) {
                out[cc.c2_index(i, j, v)] = c.even.at({i, j}, v);
                for (size_t k = 0; k < cc.n; ++k)
                    out[cc.c2_dim() + cc.c3_index(i, j, k, v)] = c.odd.at({i, j, k}, v);
            }
    return out;
}

/// Rebuilds a level-1 pair from C^(2,3) coordinates (skew completion).
template <class F>
CochainPair<F> c23_from_coords(const F& f, size_t n, size_t m, const Vec<F>& coords) {
    CochainCoords cc{n, m};
    CochainPair<F> c(f, n, m, 1);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t v = 0; v < m; ++v) {
                const auto& fv = coords[cc.c2_index(i, j, v)];
                c.even.at({i, j}, v) = fv;
                c.even.at({j, i}, v) = -fv;
                for (size_t k = 0; k < n; ++k) {
                    const auto& gv = coords[cc.c2_dim() + cc.c3_index(i, j, k, v)];
                    c.odd.at({i, j, k}, v) = gv;
                    c.odd.at({j, i, k}, v) = -gv;
                }
            }
    return c;
}

} // namespace lyat

#endif
