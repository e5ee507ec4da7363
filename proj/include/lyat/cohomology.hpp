#ifndef LYAT_COHOMOLOGY_HPP
#define LYAT_COHOMOLOGY_HPP

#include <functional>
#include <optional>

#include "lyat/cochain.hpp"

namespace lyat {

/// delta on C^1: (delta_I f)(a,b) = rho(a)f(b) - rho(b)f(a) - f([a,b]),
/// (delta_II f)(a,b,c) = theta(b,c)f(a) - theta(a,c)f(b) + D(a,b)f(c) - f({a,b,c}).
template <class F>
CochainPair<F> delta_zero(const Representation<F>& r, const Matrix<F>& lam) {
    const auto& L = r.algebra;
    const F& f = L.field;
    const size_t n = L.dim, m = r.vdim;
    if (lam.rows() != m || lam.cols() != n)
        throw std::invalid_argument("delta_zero: lambda must be vdim x dim");
    CochainPair<F> out(f, n, m, 1);
    auto lam_of = [&](const Vec<F>& x) { return lam.apply(x); };
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) {
            Vec<F> val = r.rho[a].apply(lam.col(b));
            Vec<F> t = r.rho[b].apply(lam.col(a));
            Vec<F> u = lam_of(L.bin(a, b));
            for (size_t v = 0; v < m; ++v) val[v] -= t[v] + u[v];
            out.even.set_value({a, b}, val);
            for (size_t c = 0; c < n; ++c) {
                Vec<F> w = r.Th(b, c).apply(lam.col(a));
                Vec<F> w2 = r.Th(a, c).apply(lam.col(b));
                Vec<F> w3 = r.D(a, b).apply(lam.col(c));
                Vec<F> w4 = lam_of(L.ter(a, b, c));
                for (size_t v = 0; v < m; ++v) w[v] = w[v] - w2[v] + w3[v] - w4[v];
                out.odd.set_value({a, b, c}, w);
            }
        }
    return out;
}

namespace detail {

// (delta_I f)(x_0..x_{2p+1}) for input (f,g) at level p; evaluated at one
// basis tuple. Indices are 0-based; the paper's x_r is x[r-1].
template <class F>
Vec<F> delta_I_at(const Representation<F>& r, const CochainPair<F>& c,
                  const std::vector<size_t>& x) {
    const auto& L = r.algebra;
    const F& f = L.field;
    const size_t m = r.vdim;
    const size_t p = c.level;
    const size_t N = 2 * p + 2;
    Vec<F> out = zero_vec(f, m);
    const bool neg_p = (p % 2) == 1;
    auto acc = [&](bool neg, const Vec<F>& v) {
        for (size_t t = 0; t < m; ++t) out[t] += neg ? -v[t] : v[t];
    };

    // rho / bracket-substitution block
    std::vector<size_t> head(x.begin(), x.end() - 2);      // x_0..x_{2p-1}
    std::vector<size_t> g1 = head; g1.push_back(x[N - 1]); // drop x_{2p}
    std::vector<size_t> g2 = head; g2.push_back(x[N - 2]); // drop x_{2p+1}
    acc(neg_p, r.rho[x[N - 2]].apply(c.odd.value(f, g1)));
    acc(!neg_p, r.rho[x[N - 1]].apply(c.odd.value(f, g2)));
    {
        std::vector<size_t> gb = head; gb.push_back(0);
        acc(!neg_p, c.odd.value_subst(f, gb, 2 * p, L.bin(x[N - 2], x[N - 1])));
    }

    for (size_t k = 1; k <= p; ++k) {
        bool neg_k = (k % 2) == 0;  // sign (-1)^{k+1}
        std::vector<size_t> rest;
        rest.reserve(N - 2);
        for (size_t t = 0; t < N; ++t)
            if (t != 2 * k - 2 && t != 2 * k - 1) rest.push_back(x[t]);
        acc(neg_k, r.D(x[2 * k - 2], x[2 * k - 1]).apply(c.even.value(f, rest)));
        // substitution terms: j runs over original slots 2k..N-1
        for (size_t j = 2 * k; j < N; ++j) {
            std::vector<size_t> sub = rest;
            size_t pos = j - 2;  // position of slot j in `rest`
            sub[pos] = 0;
            Vec<F> val = c.even.value_subst(f, sub, pos,
                                            L.ter(x[2 * k - 2], x[2 * k - 1], x[j]));
            acc(!neg_k, val);  // sign (-1)^k
        }
    }
    return out;
}

// (delta_II g)(x_0..x_{2p+2}).
template <class F>
Vec<F> delta_II_at(const Representation<F>& r, const CochainPair<F>& c,
                   const std::vector<size_t>& x) {
    const auto& L = r.algebra;
    const F& f = L.field;
    const size_t m = r.vdim;
    const size_t p = c.level;
    const size_t N = 2 * p + 3;
    Vec<F> out = zero_vec(f, m);
    const bool neg_p = (p % 2) == 1;
    auto acc = [&](bool neg, const Vec<F>& v) {
        for (size_t t = 0; t < m; ++t) out[t] += neg ? -v[t] : v[t];
    };

    std::vector<size_t> g1(x.begin(), x.end() - 2);        // x_0..x_{2p}
    std::vector<size_t> g2(x.begin(), x.end() - 3);        // x_0..x_{2p-1}
    g2.push_back(x[N - 2]);
    acc(neg_p, r.Th(x[N - 2], x[N - 1]).apply(c.odd.value(f, g1)));
    acc(!neg_p, r.Th(x[N - 3], x[N - 1]).apply(c.odd.value(f, g2)));

    for (size_t k = 1; k <= p + 1; ++k) {
        bool neg_k = (k % 2) == 0;
        std::vector<size_t> rest;
        rest.reserve(N - 2);
        for (size_t t = 0; t < N; ++t)
            if (t != 2 * k - 2 && t != 2 * k - 1) rest.push_back(x[t]);
        acc(neg_k, r.D(x[2 * k - 2], x[2 * k - 1]).apply(c.odd.value(f, rest)));
        for (size_t j = 2 * k; j < N; ++j) {
            std::vector<size_t> sub = rest;
            size_t pos = j - 2;
            sub[pos] = 0;
            Vec<F> val = c.odd.value_subst(f, sub, pos,
                                           L.ter(x[2 * k - 2], x[2 * k - 1], x[j]));
            acc(!neg_k, val);
        }
    }
    return out;
}

template <class F>
void unflatten(size_t flat, size_t n, std::vector<size_t>& idx) {
    for (size_t s = idx.size(); s-- > 0;) { idx[s] = flat % n; flat /= n; }
}

} // namespace detail

/// General coboundary delta: C^(2p,2p+1) -> C^(2p+2,2p+3), evaluated on all
/// basis tuples.
template <class F>
CochainPair<F> delta_pair(const Representation<F>& r, const CochainPair<F>& c) {
    const auto& L = r.algebra;
    const F& f = L.field;
    const size_t n = L.dim, m = r.vdim;
    CochainPair<F> out(f, n, m, c.level + 1);
    {
        std::vector<size_t> idx(2 * c.level + 2);
        size_t total = VTensor<F>::pow_n(n, idx.size());
        for (size_t t = 0; t < total; ++t) {
            detail::unflatten<F>(t, n, idx);
            out.even.set_value(idx, detail::delta_I_at(r, c, idx));
        }
    }
    {
        std::vector<size_t> idx(2 * c.level + 3);
        size_t total = VTensor<F>::pow_n(n, idx.size());
        for (size_t t = 0; t < total; ++t) {
            detail::unflatten<F>(t, n, idx);
            out.odd.set_value(idx, detail::delta_II_at(r, c, idx));
        }
    }
    return out;
}

template <class F>
struct DeltaStarResult {
    VTensor<F> first;   // arity 3
    VTensor<F> second;  // arity 4
    bool is_zero() const { return first.is_zero() && second.is_zero(); }
};

/// delta* on C^(2,3); outputs are stored as unconstrained tensors.
template <class F>
DeltaStarResult<F> delta_star(const Representation<F>& r, const CochainPair<F>& c) {
    if (c.level != 1) throw std::invalid_argument("delta_star: level-1 cochain required");
    const auto& L = r.algebra;
    const F& f = L.field;
    const size_t n = L.dim, m = r.vdim;
    DeltaStarResult<F> out{VTensor<F>(f, n, m, 3), VTensor<F>(f, n, m, 4)};

    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            for (size_t cx = 0; cx < n; ++cx) {
                Vec<F> val = zero_vec(f, m);
                auto add = [&](const Vec<F>& v, bool neg) {
                    for (size_t t = 0; t < m; ++t) val[t] += neg ? -v[t] : v[t];
                };
                add(r.rho[a].apply(c.even.value(f, {b, cx})), true);
                add(r.rho[b].apply(c.even.value(f, {cx, a})), true);
                add(r.rho[cx].apply(c.even.value(f, {a, b})), true);
                add(c.even.value_subst(f, {0, cx}, 0, L.bin(a, b)), false);
                add(c.even.value_subst(f, {0, a}, 0, L.bin(b, cx)), false);
                add(c.even.value_subst(f, {0, b}, 0, L.bin(cx, a)), false);
                add(c.odd.value(f, {a, b, cx}), false);
                add(c.odd.value(f, {b, cx, a}), false);
                add(c.odd.value(f, {cx, a, b}), false);
                out.first.set_value({a, b, cx}, val);

                for (size_t d = 0; d < n; ++d) {
                    Vec<F> w = zero_vec(f, m);
                    auto addw = [&](const Vec<F>& v) {
                        for (size_t t = 0; t < m; ++t) w[t] += v[t];
                    };
                    addw(r.Th(a, d).apply(c.even.value(f, {b, cx})));
                    addw(r.Th(b, d).apply(c.even.value(f, {cx, a})));
                    addw(r.Th(cx, d).apply(c.even.value(f, {a, b})));
                    addw(c.odd.value_subst(f, {0, cx, d}, 0, L.bin(a, b)));
                    addw(c.odd.value_subst(f, {0, a, d}, 0, L.bin(b, cx)));
                    addw(c.odd.value_subst(f, {0, b, d}, 0, L.bin(cx, a)));
                    out.second.set_value({a, b, cx, d}, w);
                }
            }
    return out;
}

/// (f,g) is a (2,3)-cocycle iff delta(f,g) = 0 and delta*(f,g) = 0.
template <class F>
bool is_cocycle23(const Representation<F>& r, const CochainPair<F>& c) {
    if (c.level != 1) throw std::invalid_argument("is_cocycle23: level-1 cochain required");
    return delta_pair(r, c).is_zero() && delta_star(r, c).is_zero();
}

/// Matrix of delta on C^1 in the fixed coordinate conventions:
/// columns indexed by C^1 coords, rows by C^(2,3) coords.
template <class F>
Matrix<F> delta_zero_matrix(const Representation<F>& r) {
    const F& f = r.algebra.field;
    const size_t n = r.algebra.dim, m = r.vdim;
    CochainCoords cc{n, m};
    Matrix<F> out(f, cc.c23_dim(), cc.c1_dim());
    for (size_t a = 0; a < n; ++a)
        for (size_t v = 0; v < m; ++v) {
            Matrix<F> lam(f, m, n);
            lam(v, a) = f.one();
            auto img = c23_coords(f, delta_zero(r, lam));
            size_t col = cc.c1_index(a, v);
            for (size_t row = 0; row < img.size(); ++row) out(row, col) = img[row];
        }
    return out;
}

/// H^1(L,V) = ker(delta on C^1) as a subspace of C^1 coordinates.
template <class F>
SubspaceBasis<F> h1_basis(const Representation<F>& r) {
    return kernel_basis(delta_zero_matrix(r));
}

/// Matrix of (delta, delta*) on C^(2,3) coordinates. Rows: canonical C^(4,5)
/// coordinates of delta (sound because delta lands in C^(4,5)) followed by
/// all tuples of both delta* outputs (stored unconstrained).
template <class F>
Matrix<F> cocycle23_matrix(const Representation<F>& r) {
    const F& f = r.algebra.field;
    const size_t n = r.algebra.dim, m = r.vdim;
    CochainCoords cc{n, m};
    const size_t star_rows = (VTensor<F>::pow_n(n, 3) + VTensor<F>::pow_n(n, 4)) * m;
    Matrix<F> out(f, cc.c45_dim() + star_rows, cc.c23_dim());
    for (size_t col = 0; col < cc.c23_dim(); ++col) {
        Vec<F> unit = zero_vec(f, cc.c23_dim());
        unit[col] = f.one();
        auto c = c23_from_coords(f, n, m, unit);
        auto d = delta_pair(r, c);
        auto ds = delta_star(r, c);
        size_t row = 0;
        for (size_t i1 = 0; i1 < n; ++i1)
            for (size_t j1 = i1 + 1; j1 < n; ++j1)
                for (size_t i2 = 0; i2 < n; ++i2)
                    for (size_t j2 = i2 + 1; j2 < n; ++j2)
                        for (size_t v = 0; v < m; ++v)
                            out(row++, col) = d.even.at({i1, j1, i2, j2}, v);
        for (size_t i1 = 0; i1 < n; ++i1)
            for (size_t j1 = i1 + 1; j1 < n; ++j1)
                for (size_t i2 = 0; i2 < n; ++i2)
                    for (size_t j2 = i2 + 1; j2 < n; ++j2)
                        for (size_t k = 0; k < n; ++k)
                            for (size_t v = 0; v < m; ++v)
                                out(row++, col) = d.odd.at({i1, j1, i2, j2, k}, v);
        for (const auto& x : ds.first.data) out(row++, col) = x;
        for (const auto& x : ds.second.data) out(row++, col) = x;
    }
    return out;
}

template <class F>
struct H23Result {
    size_t z_dim, b_dim, h_dim;
    SubspaceBasis<F> z_basis;  // in C^(2,3) coordinates
    SubspaceBasis<F> b_basis;
    bool b_inside_z;

    /// Canonical representative of the class of a cocycle (reduction mod B).
    Vec<F> representative(const Vec<F>& cocycle_coords) const {
        return b_basis.reduce(cocycle_coords);
    }
};

template <class F>
H23Result<F> h23(const Representation<F>& r) {
    const F& f = r.algebra.field;
    auto zmat = cocycle23_matrix(r);
    auto z = kernel_basis(zmat);
    auto d0 = delta_zero_matrix(r);
    std::vector<Vec<F>> b_cols;
    for (size_t j = 0; j < d0.cols(); ++j) b_cols.push_back(d0.col(j));
    auto b = SubspaceBasis<F>::from_vectors(f, d0.rows(), b_cols);
    H23Result<F> out{z.dim(), b.dim(), z.dim() - b.dim(), z, b, z.contains_all(b)};
    return out;
}

/// lambda with delta(lambda) = c, or nullopt when the class is nontrivial.
template <class F>
std::optional<Matrix<F>> solve_coboundary(const Representation<F>& r,
                                          const CochainPair<F>& c) {
    if (c.level != 1) throw std::invalid_argument("solve_coboundary: level-1 cochain required");
    const F& f = r.algebra.field;
    const size_t n = r.algebra.dim, m = r.vdim;
    auto d0 = delta_zero_matrix(r);
    auto sol = solve_affine(d0, c23_coords(f, c));
    if (!sol) return std::nullopt;
    CochainCoords cc{n, m};
    Matrix<F> lam(f, m, n);
    for (size_t a = 0; a < n; ++a)
        for (size_t v = 0; v < m; ++v) lam(v, a) = sol->particular[cc.c1_index(a, v)];
    return lam;
}

template <class F>
struct H45Result {
    size_t z_dim, b_dim, h_dim;
    bool b_inside_z;
};

/// H^(4,5): Z = ker(delta at level 2), B = im(delta at level 1).
/// Guarded by dimension since the level-2 kernel grows as n^7.
template <class F>
H45Result<F> h45(const Representation<F>& r, size_t dim_guard = 5) {
    const F& f = r.algebra.field;
    const size_t n = r.algebra.dim, m = r.vdim;
    if (n > dim_guard) throw std::invalid_argument("h45: dimension guard exceeded");
    CochainCoords cc{n, m};
    const size_t np = cc.npairs();

    // canonical coordinates of C^(4,5): pairs x pairs (x k) x V
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

    auto c45_unit = [&](size_t idx) {
        CochainPair<F> c(f, n, m, 2);
        size_t c4 = np * np * m;
        if (idx < c4) {
            size_t v = idx % m; idx /= m;
            size_t p2 = idx % np; idx /= np;
            size_t p1 = idx;
            auto [i1, j1] = pairs[p1];
            auto [i2, j2] = pairs[p2];
            auto set4 = [&](size_t a, size_t b, size_t cx, size_t d, bool neg) {
                c.even.at({a, b, cx, d}, v) = neg ? -f.one() : f.one();
            };
            set4(i1, j1, i2, j2, false);
            set4(j1, i1, i2, j2, true);
            set4(i1, j1, j2, i2, true);
            set4(j1, i1, j2, i2, false);
        } else {
            idx -= c4;
            size_t v = idx % m; idx /= m;
            size_t k = idx % n; idx /= n;
            size_t p2 = idx % np; idx /= np;
            size_t p1 = idx;
            auto [i1, j1] = pairs[p1];
            auto [i2, j2] = pairs[p2];
            auto set5 = [&](size_t a, size_t b, size_t cx, size_t d, bool neg) {
                c.odd.at({a, b, cx, d, k}, v) = neg ? -f.one() : f.one();
            };
            set5(i1, j1, i2, j2, false);
            set5(j1, i1, i2, j2, true);
            set5(i1, j1, j2, i2, true);
            set5(j1, i1, j2, i2, false);
        }
        return c;
    };

    auto out_coords = [&](const CochainPair<F>& d) {
        // canonical C^(6,7) coordinates
        Vec<F> v;
        for (size_t p1 = 0; p1 < np; ++p1)
            for (size_t p2 = 0; p2 < np; ++p2)
                for (size_t p3 = 0; p3 < np; ++p3)
                    for (size_t t = 0; t < m; ++t)
                        v.push_back(d.even.at({pairs[p1].first, pairs[p1].second,
                                               pairs[p2].first, pairs[p2].second,
                                               pairs[p3].first, pairs[p3].second}, t));
        for (size_t p1 = 0; p1 < np; ++p1)
            for (size_t p2 = 0; p2 < np; ++p2)
                for (size_t p3 = 0; p3 < np; ++p3)
                    for (size_t k = 0; k < n; ++k)
                        for (size_t t = 0; t < m; ++t)
                            v.push_back(d.odd.at({pairs[p1].first, pairs[p1].second,
                                                  pairs[p2].first, pairs[p2].second,
                                                  pairs[p3].first, pairs[p3].second, k}, t));
        return v;
    };

    const size_t dim45 = cc.c45_dim();
    const size_t rows67 = np * np * np * m * (1 + n);
    Matrix<F> zmap(f, rows67, dim45);
    for (size_t col = 0; col < dim45; ++col) {
        auto d = delta_pair(r, c45_unit(col));
        auto coords = out_coords(d);
        for (size_t row = 0; row < rows67; ++row) zmap(row, col) = coords[row];
    }
    auto z = kernel_basis(zmap);

    // B^(4,5) = image of delta on C^(2,3)
    Matrix<F> bmap(f, dim45, cc.c23_dim());
    std::vector<Vec<F>> b_cols;
    for (size_t col = 0; col < cc.c23_dim(); ++col) {
        Vec<F> unit = zero_vec(f, cc.c23_dim());
        unit[col] = f.one();
        auto d = delta_pair(r, c23_from_coords(f, n, m, unit));
        Vec<F> v;
        for (size_t p1 = 0; p1 < np; ++p1)
            for (size_t p2 = 0; p2 < np; ++p2)
                for (size_t t = 0; t < m; ++t)
                    v.push_back(d.even.at({pairs[p1].first, pairs[p1].second,
                                           pairs[p2].first, pairs[p2].second}, t));
        for (size_t p1 = 0; p1 < np; ++p1)
            for (size_t p2 = 0; p2 < np; ++p2)
                for (size_t k = 0; k < n; ++k)
                    for (size_t t = 0; t < m; ++t)
                        v.push_back(d.odd.at({pairs[p1].first, pairs[p1].second,
                                              pairs[p2].first, pairs[p2].second, k}, t));
        b_cols.push_back(std::move(v));
    }
    auto b = SubspaceBasis<F>::from_vectors(f, dim45, b_cols);
    return {z.dim(), b.dim(), z.dim() - b.dim(), z.contains_all(b)};
}

} // namespace lyat

#endif
