#ifndef LYAT_ALGEBRA_HPP
#define LYAT_ALGEBRA_HPP

#include <optional>
#include <string>
#include <vector>

#include "lyat/linalg.hpp"

namespace lyat {

/// Finite-dimensional Lie-Yamaguti algebra given by structure constants:
/// binary[i][j] holds the coordinates of [e_i, e_j], ternary[i][j][k] those
/// of {e_i, e_j, e_k}. Validated instances satisfy LY1-LY6 (check_axioms);
/// the storage itself can hold arbitrary tensors so that failed candidates
/// are still representable and reportable.
template <class F>
struct LYAlgebra {
    LYAlgebra(const F& f, size_t n)
        : field(f), dim(n),
          binary(n * n, zero_vec(f, n)),
          ternary(n * n * n, zero_vec(f, n)) {
        basis_names.reserve(n);
        for (size_t i = 0; i < n; ++i) basis_names.push_back("e" + std::to_string(i + 1));
    }

    F field;
    size_t dim;
    std::vector<std::string> basis_names;
    std::vector<Vec<F>> binary;   // n*n entries
    std::vector<Vec<F>> ternary;  // n*n*n entries

    const Vec<F>& bin(size_t i, size_t j) const { return binary[i * dim + j]; }
    Vec<F>& bin(size_t i, size_t j) { return binary[i * dim + j]; }
    const Vec<F>& ter(size_t i, size_t j, size_t k) const {
        return ternary[(i * dim + j) * dim + k];
    }
    Vec<F>& ter(size_t i, size_t j, size_t k) { return ternary[(i * dim + j) * dim + k]; }

    /// Sets [e_i, e_j] = v together with its skew image; conflicting
    /// duplicate entries are a hard error.
    void set_binary(size_t i, size_t j, const Vec<F>& v) {
        if (i == j) throw std::invalid_argument("set_binary: [e_i,e_i] must be zero");
        if (!is_zero_vec<F>(bin(i, j)) && bin(i, j) != v)
            throw std::invalid_argument("set_binary: conflicting duplicate entry");
        bin(i, j) = v;
        Vec<F> neg = v;
        for (auto& x : neg) x = -x;
        if (!is_zero_vec<F>(bin(j, i)) && bin(j, i) != neg)
            throw std::invalid_argument("set_binary: conflicting skew entry");
        bin(j, i) = neg;
    }

    void set_ternary(size_t i, size_t j, size_t k, const Vec<F>& v) {
        if (i == j) throw std::invalid_argument("set_ternary: {e_i,e_i,e_k} must be zero");
        if (!is_zero_vec<F>(ter(i, j, k)) && ter(i, j, k) != v)
            throw std::invalid_argument("set_ternary: conflicting duplicate entry");
        ter(i, j, k) = v;
        Vec<F> neg = v;
        for (auto& x : neg) x = -x;
        if (!is_zero_vec<F>(ter(j, i, k)) && ter(j, i, k) != neg)
            throw std::invalid_argument("set_ternary: conflicting skew entry");
        ter(j, i, k) = neg;
    }

    bool is_abelian() const {
        for (const auto& v : binary)
            if (!is_zero_vec<F>(v)) return false;
        for (const auto& v : ternary)
            if (!is_zero_vec<F>(v)) return false;
        return true;
    }

    /// [x, y], extended bilinearly from the structure constants.
    Vec<F> bracket(const Vec<F>& x, const Vec<F>& y) const {
        expect_len(x); expect_len(y);
        Vec<F> r = zero_vec(field, dim);
        for (size_t i = 0; i < dim; ++i) {
            if (x[i].is_zero()) continue;
            for (size_t j = 0; j < dim; ++j) {
                if (y[j].is_zero()) continue;
                add_scaled<F>(r, x[i] * y[j], bin(i, j));
            }
        }
        return r;
    }

    /// {x, y, z}, extended trilinearly.
    Vec<F> triple(const Vec<F>& x, const Vec<F>& y, const Vec<F>& z) const {
        expect_len(x); expect_len(y); expect_len(z);
        Vec<F> r = zero_vec(field, dim);
        for (size_t i = 0; i < dim; ++i) {
            if (x[i].is_zero()) continue;
            for (size_t j = 0; j < dim; ++j) {
                if (y[j].is_zero()) continue;
                auto c = x[i] * y[j];
                for (size_t k = 0; k < dim; ++k) {
                    if (z[k].is_zero()) continue;
                    add_scaled<F>(r, c * z[k], ter(i, j, k));
                }
            }
        }
        return r;
    }

    // Mixed-argument helpers: one vector, remaining basis indices.
    Vec<F> bracket_ve(const Vec<F>& x, size_t j) const {
        Vec<F> r = zero_vec(field, dim);
        for (size_t i = 0; i < dim; ++i)
            if (!x[i].is_zero()) add_scaled<F>(r, x[i], bin(i, j));
        return r;
    }
    Vec<F> bracket_ev(size_t i, const Vec<F>& y) const {
        Vec<F> r = zero_vec(field, dim);
        for (size_t j = 0; j < dim; ++j)
            if (!y[j].is_zero()) add_scaled<F>(r, y[j], bin(i, j));
        return r;
    }
    Vec<F> triple_vee(const Vec<F>& x, size_t j, size_t k) const {
        Vec<F> r = zero_vec(field, dim);
        for (size_t i = 0; i < dim; ++i)
            if (!x[i].is_zero()) add_scaled<F>(r, x[i], ter(i, j, k));
        return r;
    }
    Vec<F> triple_eve(size_t i, const Vec<F>& y, size_t k) const {
        Vec<F> r = zero_vec(field, dim);
        for (size_t j = 0; j < dim; ++j)
            if (!y[j].is_zero()) add_scaled<F>(r, y[j], ter(i, j, k));
        return r;
    }
    Vec<F> triple_eev(size_t i, size_t j, const Vec<F>& z) const {
        Vec<F> r = zero_vec(field, dim);
        for (size_t k = 0; k < dim; ++k)
            if (!z[k].is_zero()) add_scaled<F>(r, z[k], ter(i, j, k));
        return r;
    }

    Vec<F> basis_vec(size_t i) const {
        Vec<F> v = zero_vec(field, dim);
        v[i] = field.one();
        return v;
    }

private:
    void expect_len(const Vec<F>& v) const {
        if (v.size() != dim) throw std::invalid_argument("LYAlgebra: dimension mismatch");
    }
};

/// [x,y] when z is absent, {x,y,z} when present.
template <class F>
Vec<F> bracket_eval(const LYAlgebra<F>& L, const Vec<F>& x, const Vec<F>& y,
                    const std::optional<Vec<F>>& z = std::nullopt) {
    return z ? L.triple(x, y, *z) : L.bracket(x, y);
}

struct AxiomStatus {
    bool pass = true;
    std::vector<size_t> witness;           // basis index tuple of first failure
    std::vector<std::string> residual;     // residual vector, serialized
};

struct AxiomReport {
    AxiomStatus ly1, ly2, ly3, ly4, ly5, ly6;
    bool all_pass() const {
        return ly1.pass && ly2.pass && ly3.pass && ly4.pass && ly5.pass && ly6.pass;
    }
};

namespace detail {
template <class F>
void record_failure(AxiomStatus& st, std::initializer_list<size_t> tuple, const Vec<F>& res) {
    if (!st.pass) return;
    st.pass = false;
    st.witness.assign(tuple);
    for (const auto& x : res) st.residual.push_back(F::to_string(x));
}
} // namespace detail

/// Evaluates LY1-LY6 on all basis tuples (multilinearity makes basis checks
/// sufficient). LY1/LY2 are checked on the stored tensors.
template <class F>
AxiomReport check_axioms(const LYAlgebra<F>& L) {
    AxiomReport rep;
    const size_t n = L.dim;

    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Vec<F> s = L.bin(i, j);
            for (size_t k = 0; k < n; ++k) s[k] += L.bin(j, i)[k];
            if (!is_zero_vec<F>(s)) detail::record_failure<F>(rep.ly1, {i, j}, s);
            if (i == j && !is_zero_vec<F>(L.bin(i, j)))
                detail::record_failure<F>(rep.ly1, {i, j}, L.bin(i, j));
        }

    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                Vec<F> s = L.ter(i, j, k);
                for (size_t t = 0; t < n; ++t) s[t] += L.ter(j, i, k)[t];
                if (!is_zero_vec<F>(s)) detail::record_failure<F>(rep.ly2, {i, j, k}, s);
                if (i == j && !is_zero_vec<F>(L.ter(i, j, k)))
                    detail::record_failure<F>(rep.ly2, {i, j, k}, L.ter(i, j, k));
            }

    // LY3: sum over cyclic permutations of (a,b,c) of [[a,b],c] + {a,b,c}.
    for (size_t a = 0; a < n && rep.ly3.pass; ++a)
        for (size_t b = 0; b < n && rep.ly3.pass; ++b)
            for (size_t c = 0; c < n; ++c) {
                Vec<F> s = L.bracket_ve(L.bin(a, b), c);
                add_scaled<F>(s, L.field.one(), L.ter(a, b, c));
                add_scaled<F>(s, L.field.one(), L.bracket_ve(L.bin(b, c), a));
                add_scaled<F>(s, L.field.one(), L.ter(b, c, a));
                add_scaled<F>(s, L.field.one(), L.bracket_ve(L.bin(c, a), b));
                add_scaled<F>(s, L.field.one(), L.ter(c, a, b));
                if (!is_zero_vec<F>(s)) { detail::record_failure<F>(rep.ly3, {a, b, c}, s); break; }
            }

    // LY4: {[a,b],c,x} + {[b,c],a,x} + {[c,a],b,x} = 0.
    for (size_t a = 0; a < n && rep.ly4.pass; ++a)
        for (size_t b = 0; b < n && rep.ly4.pass; ++b)
            for (size_t c = 0; c < n && rep.ly4.pass; ++c)
                for (size_t x = 0; x < n; ++x) {
                    Vec<F> s = L.triple_vee(L.bin(a, b), c, x);
                    add_scaled<F>(s, L.field.one(), L.triple_vee(L.bin(b, c), a, x));
                    add_scaled<F>(s, L.field.one(), L.triple_vee(L.bin(c, a), b, x));
                    if (!is_zero_vec<F>(s)) { detail::record_failure<F>(rep.ly4, {a, b, c, x}, s); break; }
                }

    // LY5: {a,b,[x,y]} = [{a,b,x},y] + [x,{a,b,y}].
    for (size_t a = 0; a < n && rep.ly5.pass; ++a)
        for (size_t b = 0; b < n && rep.ly5.pass; ++b)
            for (size_t x = 0; x < n && rep.ly5.pass; ++x)
                for (size_t y = 0; y < n; ++y) {
                    Vec<F> s = L.triple_eev(a, b, L.bin(x, y));
                    Vec<F> t1 = L.bracket_ve(L.ter(a, b, x), y);
                    Vec<F> t2 = L.bracket_ev(x, L.ter(a, b, y));
                    for (size_t t = 0; t < n; ++t) s[t] -= t1[t] + t2[t];
                    if (!is_zero_vec<F>(s)) { detail::record_failure<F>(rep.ly5, {a, b, x, y}, s); break; }
                }

    // LY6: {a,b,{x,y,z}} = {{a,b,x},y,z} + {x,{a,b,y},z} + {x,y,{a,b,z}}.
    for (size_t a = 0; a < n && rep.ly6.pass; ++a)
        for (size_t b = 0; b < n && rep.ly6.pass; ++b)
            for (size_t x = 0; x < n && rep.ly6.pass; ++x)
                for (size_t y = 0; y < n && rep.ly6.pass; ++y)
                    for (size_t z = 0; z < n; ++z) {
                        Vec<F> s = L.triple_eev(a, b, L.ter(x, y, z));
                        Vec<F> t1 = L.triple_vee(L.ter(a, b, x), y, z);
                        Vec<F> t2 = L.triple_eve(x, L.ter(a, b, y), z);
                        Vec<F> t3 = L.triple_eev(x, y, L.ter(a, b, z));
                        for (size_t t = 0; t < n; ++t) s[t] -= t1[t] + t2[t] + t3[t];
                        if (!is_zero_vec<F>(s)) { detail::record_failure<F>(rep.ly6, {a, b, x, y, z}, s); break; }
                    }

    return rep;
}

/// {a in L : [a,x] = 0, {a,x,y} = 0 = {x,y,a}}; the condition {x,a,y} = 0
/// follows from LY2.
template <class F>
SubspaceBasis<F> center(const LYAlgebra<F>& L) {
    const F& f = L.field;
    const size_t n = L.dim;
    size_t rows = n * n + 2 * n * n * n;
    Matrix<F> m(f, rows, n);
    size_t r = 0;
    for (size_t j = 0; j < n; ++j)
        for (size_t k = 0; k < n; ++k, ++r)
            for (size_t i = 0; i < n; ++i) m(r, i) = L.bin(i, j)[k];
    for (size_t j = 0; j < n; ++j)
        for (size_t kk = 0; kk < n; ++kk)
            for (size_t k = 0; k < n; ++k, ++r)
                for (size_t i = 0; i < n; ++i) m(r, i) = L.ter(i, j, kk)[k];
    for (size_t j = 0; j < n; ++j)
        for (size_t kk = 0; kk < n; ++kk)
            for (size_t k = 0; k < n; ++k, ++r)
                for (size_t i = 0; i < n; ++i) m(r, i) = L.ter(j, kk, i)[k];
    return kernel_basis(m);
}

struct IdealReport {
    bool is_ideal = false;
    bool is_abelian_ideal = false;
};

template <class F>
IdealReport ideal_tests(const LYAlgebra<F>& L, const SubspaceBasis<F>& W) {
    if (W.ambient_dim() != L.dim) throw std::invalid_argument("ideal_tests: ambient mismatch");
    IdealReport rep;
    rep.is_ideal = true;
    for (const auto& w : W.vectors()) {
        for (size_t j = 0; j < L.dim && rep.is_ideal; ++j) {
            if (!W.contains(L.bracket_ve(w, j))) rep.is_ideal = false;
            for (size_t k = 0; k < L.dim; ++k) {
                if (!W.contains(L.triple_vee(w, j, k)) ||
                    !W.contains(L.triple_eev(j, k, w))) {
                    rep.is_ideal = false;
                    break;
                }
            }
        }
        if (!rep.is_ideal) break;
    }
    if (!rep.is_ideal) return rep;

    rep.is_abelian_ideal = true;
    const auto& gens = W.vectors();
    for (const auto& w1 : gens)
        for (const auto& w2 : gens) {
            if (!is_zero_vec<F>(L.bracket(w1, w2))) rep.is_abelian_ideal = false;
            for (size_t j = 0; j < L.dim; ++j) {
                auto ej = L.basis_vec(j);
                if (!is_zero_vec<F>(L.triple(w1, w2, ej)) ||
                    !is_zero_vec<F>(L.triple(w1, ej, w2)) ||
                    !is_zero_vec<F>(L.triple(ej, w1, w2)))
                    rep.is_abelian_ideal = false;
            }
        }
    return rep;
}

template <class F>
struct QuotientResult {
    LYAlgebra<F> algebra;
    Matrix<F> projection;  // (n - dim W) x n
    Matrix<F> inclusion;   // n x (n - dim W), complement-coordinate section
};

/// Quotient L/W on the complement coordinates (non-pivot coordinates of W's
/// RREF). projection * inclusion = identity on the complement.
template <class F>
QuotientResult<F> quotient(const LYAlgebra<F>& L, const SubspaceBasis<F>& W) {
    auto idr = ideal_tests(L, W);
    if (!idr.is_ideal) throw std::invalid_argument("quotient: W is not an ideal");
    const F& f = L.field;
    const size_t n = L.dim;
    std::vector<bool> is_pivot(n, false);
    for (size_t c : W.pivot_cols()) is_pivot[c] = true;
    std::vector<size_t> comp;
    for (size_t j = 0; j < n; ++j)
        if (!is_pivot[j]) comp.push_back(j);
    const size_t q = comp.size();

    Matrix<F> proj(f, q, n);
    // projection = complement coordinates after reducing mod W
    for (size_t j = 0; j < n; ++j) {
        Vec<F> v = W.reduce(L.basis_vec(j));
        for (size_t t = 0; t < q; ++t) proj(t, j) = v[comp[t]];
    }
    Matrix<F> incl(f, n, q);
    for (size_t t = 0; t < q; ++t) incl(comp[t], t) = f.one();

    LYAlgebra<F> Q(f, q);
    for (size_t t = 0; t < q; ++t) Q.basis_names[t] = L.basis_names[comp[t]] + "~";
    for (size_t a = 0; a < q; ++a)
        for (size_t b = 0; b < q; ++b) {
            Q.bin(a, b) = proj.apply(L.bin(comp[a], comp[b]));
            for (size_t c = 0; c < q; ++c)
                Q.ter(a, b, c) = proj.apply(L.ter(comp[a], comp[b], comp[c]));
        }
    return {std::move(Q), std::move(proj), std::move(incl)};
}

template <class F>
struct LowerCentralSeries {
    std::vector<SubspaceBasis<F>> terms;
    std::optional<size_t> nilpotency_index;
};

/// L^(0) = L, L^(k+1) = [L^(k),L] + {L^(k),L,L} + {L,L,L^(k)}.
template <class F>
LowerCentralSeries<F> lower_central_series(const LYAlgebra<F>& L) {
    const F& f = L.field;
    const size_t n = L.dim;
    LowerCentralSeries<F> out;
    std::vector<Vec<F>> full;
    for (size_t i = 0; i < n; ++i) full.push_back(L.basis_vec(i));
    out.terms.push_back(SubspaceBasis<F>::from_vectors(f, n, full));

    while (true) {
        const auto& cur = out.terms.back();
        if (cur.dim() == 0) {
            out.nilpotency_index = out.terms.size() - 1;
            break;
        }
        std::vector<Vec<F>> gens;
        for (const auto& w : cur.vectors())
            for (size_t j = 0; j < n; ++j) {
                gens.push_back(L.bracket_ve(w, j));
                for (size_t k = 0; k < n; ++k) {
                    gens.push_back(L.triple_vee(w, j, k));
                    gens.push_back(L.triple_eev(j, k, w));
                }
            }
        auto next = SubspaceBasis<F>::from_vectors(f, n, gens);
        if (next.dim() == cur.dim()) break;  // stabilized nonzero
        out.terms.push_back(std::move(next));
    }
    return out;
}

/// Heisenberg Lie-Yamaguti algebra: dim 2n+1, basis (e_1..e_2n, e),
/// [e_i, e_{n+i}] = e and {e_i, e_{n+i}, e_i} = e.
template <class F>
LYAlgebra<F> heisenberg(const F& f, size_t n) {
    if (n == 0) throw std::invalid_argument("heisenberg: n must be >= 1");
    LYAlgebra<F> L(f, 2 * n + 1);
    L.basis_names[2 * n] = "e";
    Vec<F> e = L.basis_vec(2 * n);
    for (size_t i = 0; i < n; ++i) {
        L.set_binary(i, n + i, e);
        L.set_ternary(i, n + i, i, e);
    }
    return L;
}

/// Generalized Heisenberg family: dim 2n+2, basis (e_1..e_{2n+1}, e),
/// [e_i, e_{n+1+i}] = e = {e_i, e_{n+1+i}, e_i} and
/// {e_{n+1}, e_{2n+1}, e_{n+1}} = e.
template <class F>
LYAlgebra<F> generalized_heisenberg(const F& f, size_t n) {
    if (n == 0) throw std::invalid_argument("generalized_heisenberg: n must be >= 1");
    LYAlgebra<F> L(f, 2 * n + 2);
    L.basis_names[2 * n + 1] = "e";
    Vec<F> e = L.basis_vec(2 * n + 1);
    for (size_t i = 0; i < n; ++i) {
        L.set_binary(i, n + 1 + i, e);
        L.set_ternary(i, n + 1 + i, i, e);
    }
    L.set_ternary(n, 2 * n, n, e);
    return L;
}

/// phi[e_i,e_j] = [phi e_i, phi e_j] and the ternary analogue on all basis
/// tuples. m maps K^dim(L) -> K^dim(L2).
template <class F>
bool is_morphism(const LYAlgebra<F>& L, const LYAlgebra<F>& L2, const Matrix<F>& m) {
    if (m.rows() != L2.dim || m.cols() != L.dim)
        throw std::invalid_argument("is_morphism: shape mismatch");
    const size_t n = L.dim;
    std::vector<Vec<F>> img;
    img.reserve(n);
    for (size_t i = 0; i < n; ++i) img.push_back(m.col(i));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            if (m.apply(L.bin(i, j)) != L2.bracket(img[i], img[j])) return false;
            for (size_t k = 0; k < n; ++k)
                if (m.apply(L.ter(i, j, k)) != L2.triple(img[i], img[j], img[k]))
                    return false;
        }
    return true;
}

template <class F>
bool is_automorphism(const LYAlgebra<F>& L, const Matrix<F>& m) {
    return m.rows() == L.dim && m.cols() == L.dim && invert(m).has_value() &&
           is_morphism(L, L, m);
}

enum class ClassicalKind { lie, leibniz, malcev, reductive };

/// Builds a Lie-Yamaguti algebra from a classical product table.
///   lie:       {a,b,c} = [[a,b],c]
///   leibniz:   [a,b] = a.b - b.a, {a,b,c} = -(a.b).c
///   malcev:    {x,y,z} = <x,<y,z>> - <y,<x,z>> + <<x,y>,z>
///   reductive: on G + H with [G,G] in G, [G,H] in H, the H part carries
///              [a,b] = pi_H[a,b], {a,b,c} = [pi_G[a,b], c]
/// `table[i][j]` are the coordinates of the input product e_i * e_j;
/// g_dim is used only for reductive (G spans the first g_dim coordinates).
template <class F>
LYAlgebra<F> from_classical(const F& f, ClassicalKind kind,
                            const std::vector<std::vector<Vec<F>>>& table,
                            size_t g_dim = 0) {
    const size_t n = table.size();
    auto prod = [&](size_t i, size_t j) -> const Vec<F>& { return table[i][j]; };
    auto prod_vv = [&](const Vec<F>& x, const Vec<F>& y) {
        Vec<F> r = zero_vec(f, n);
        for (size_t i = 0; i < n; ++i) {
            if (x[i].is_zero()) continue;
            for (size_t j = 0; j < n; ++j)
                if (!y[j].is_zero()) add_scaled<F>(r, x[i] * y[j], prod(i, j));
        }
        return r;
    };
    auto require_skew = [&]() {
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                Vec<F> s = prod(i, j);
                for (size_t k = 0; k < n; ++k) s[k] += prod(j, i)[k];
                if (!is_zero_vec<F>(s))
                    throw std::invalid_argument("from_classical: input table not skew");
            }
    };

    LYAlgebra<F> L(f, 0);
    switch (kind) {
    case ClassicalKind::lie: {
        require_skew();
        L = LYAlgebra<F>(f, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                L.bin(i, j) = prod(i, j);
                for (size_t k = 0; k < n; ++k) {
                    auto ek = L.basis_vec(k);
                    L.ter(i, j, k) = prod_vv(prod(i, j), ek);
                }
            }
        break;
    }
    case ClassicalKind::leibniz: {
        L = LYAlgebra<F>(f, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                Vec<F> b = prod(i, j);
                for (size_t k = 0; k < n; ++k) b[k] -= prod(j, i)[k];
                L.bin(i, j) = b;
                for (size_t k = 0; k < n; ++k) {
                    auto ek = L.basis_vec(k);
                    Vec<F> t = prod_vv(prod(i, j), ek);
                    for (auto& x : t) x = -x;
                    L.ter(i, j, k) = t;
                }
            }
        break;
    }
    case ClassicalKind::malcev: {
        require_skew();
        L = LYAlgebra<F>(f, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                L.bin(i, j) = prod(i, j);
                for (size_t k = 0; k < n; ++k) {
                    auto ei = L.basis_vec(i);
                    auto ej = L.basis_vec(j);
                    auto ek = L.basis_vec(k);
                    Vec<F> t = prod_vv(ei, prod(j, k));
                    Vec<F> t2 = prod_vv(ej, prod(i, k));
                    Vec<F> t3 = prod_vv(prod(i, j), ek);
                    for (size_t s = 0; s < n; ++s) t[s] = t[s] - t2[s] + t3[s];
                    L.ter(i, j, k) = t;
                }
            }
        break;
    }
    case ClassicalKind::reductive: {
        require_skew();
        if (g_dim == 0 || g_dim >= n)
            throw std::invalid_argument("from_classical: reductive needs 0 < g_dim < n");
        const size_t h = n - g_dim;
        // verify [G,G] subset G and [G,H] subset H
        for (size_t i = 0; i < g_dim; ++i) {
            for (size_t j = 0; j < g_dim; ++j)
                for (size_t k = g_dim; k < n; ++k)
                    if (!prod(i, j)[k].is_zero())
                        throw std::invalid_argument("from_classical: [G,G] not contained in G");
            for (size_t j = g_dim; j < n; ++j)
                for (size_t k = 0; k < g_dim; ++k)
                    if (!prod(i, j)[k].is_zero())
                        throw std::invalid_argument("from_classical: [G,H] not contained in H");
        }
        auto pi_h = [&](const Vec<F>& v) {
            Vec<F> r = zero_vec(f, h);
            for (size_t k = 0; k < h; ++k) r[k] = v[g_dim + k];
            return r;
        };
        auto pi_g_full = [&](const Vec<F>& v) {
            Vec<F> r = zero_vec(f, n);
            for (size_t k = 0; k < g_dim; ++k) r[k] = v[k];
            return r;
        };
        L = LYAlgebra<F>(f, h);
        for (size_t i = 0; i < h; ++i)
            for (size_t j = 0; j < h; ++j) {
                const auto& pij = prod(g_dim + i, g_dim + j);
                L.bin(i, j) = pi_h(pij);
                Vec<F> g_part = pi_g_full(pij);
                for (size_t k = 0; k < h; ++k) {
                    auto ek = zero_vec(f, n);
                    ek[g_dim + k] = f.one();
                    L.ter(i, j, k) = pi_h(prod_vv(g_part, ek));
                }
            }
        break;
    }
    }

    auto report = check_axioms(L);
    if (!report.all_pass())
        throw std::invalid_argument("from_classical: constructed table fails the Lie-Yamaguti axioms");
    return L;
}

} // namespace lyat

#endif
