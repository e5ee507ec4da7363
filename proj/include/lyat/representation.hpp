#ifndef LYAT_REPRESENTATION_HPP
#define LYAT_REPRESENTATION_HPP

#include <string>
#include <vector>

#include "lyat/algebra.hpp"

namespace lyat {

/// Representation (rho, D, theta; V) of a Lie-Yamaguti algebra on K^m.
/// rho[i] is the matrix of rho(e_i); dmap/theta are stored for all ordered
/// pairs (no symmetry imposed on D; skewness of D is a consequence of R1
/// for valid instances, not a storage constraint).
template <class F>
struct Representation {
    Representation(const LYAlgebra<F>& L, size_t m)
        : algebra(L), vdim(m),
          rho(L.dim, Matrix<F>(L.field, m, m)),
          dmap(L.dim * L.dim, Matrix<F>(L.field, m, m)),
          theta(L.dim * L.dim, Matrix<F>(L.field, m, m)) {}

    LYAlgebra<F> algebra;
    size_t vdim;
    std::vector<Matrix<F>> rho;
    std::vector<Matrix<F>> dmap;
    std::vector<Matrix<F>> theta;

    const Matrix<F>& D(size_t i, size_t j) const { return dmap[i * algebra.dim + j]; }
    Matrix<F>& D(size_t i, size_t j) { return dmap[i * algebra.dim + j]; }
    const Matrix<F>& Th(size_t i, size_t j) const { return theta[i * algebra.dim + j]; }
    Matrix<F>& Th(size_t i, size_t j) { return theta[i * algebra.dim + j]; }

    /// Bilinear extension rho(x) for a coordinate vector x.
    Matrix<F> rho_of(const Vec<F>& x) const {
        Matrix<F> r(algebra.field, vdim, vdim);
        for (size_t i = 0; i < algebra.dim; ++i)
            if (!x[i].is_zero()) r = r + rho[i].scaled(x[i]);
        return r;
    }
    Matrix<F> D_of(const Vec<F>& x, const Vec<F>& y) const {
        Matrix<F> r(algebra.field, vdim, vdim);
        for (size_t i = 0; i < algebra.dim; ++i) {
            if (x[i].is_zero()) continue;
            for (size_t j = 0; j < algebra.dim; ++j)
                if (!y[j].is_zero()) r = r + D(i, j).scaled(x[i] * y[j]);
        }
        return r;
    }
    Matrix<F> theta_of(const Vec<F>& x, const Vec<F>& y) const {
        Matrix<F> r(algebra.field, vdim, vdim);
        for (size_t i = 0; i < algebra.dim; ++i) {
            if (x[i].is_zero()) continue;
            for (size_t j = 0; j < algebra.dim; ++j)
                if (!y[j].is_zero()) r = r + Th(i, j).scaled(x[i] * y[j]);
        }
        return r;
    }
};

struct RepAxiomStatus {
    bool pass = true;
    std::vector<size_t> witness;
};

struct RepReport {
    RepAxiomStatus r1, r2, r3, r4, r5, r6, r7;
    bool all_pass() const {
        return r1.pass && r2.pass && r3.pass && r4.pass && r5.pass && r6.pass && r7.pass;
    }
    // R7 is derivable from R1-R6; reported separately as a cross-check.
    bool core_pass() const {
        return r1.pass && r2.pass && r3.pass && r4.pass && r5.pass && r6.pass;
    }
};

/// Evaluates R1-R6 (and the derived R7) on all basis tuples.
template <class F>
RepReport check_representation(const Representation<F>& r) {
    RepReport rep;
    const auto& L = r.algebra;
    const F& f = L.field;
    const size_t n = L.dim, m = r.vdim;
    auto fail = [](RepAxiomStatus& st, std::initializer_list<size_t> w) {
        if (st.pass) { st.pass = false; st.witness.assign(w); }
    };
    auto comb = [&](const std::vector<Matrix<F>>& fam, const Vec<F>& coeff) {
        Matrix<F> out(f, m, m);
        for (size_t k = 0; k < n; ++k)
            if (!coeff[k].is_zero()) out = out + fam[k].scaled(coeff[k]);
        return out;
    };
    auto comb_pair = [&](bool use_theta, const Vec<F>& coeff, size_t fixed, bool fixed_first) {
        // sum_k coeff[k] * M(fixed, k) or M(k, fixed)
        Matrix<F> out(f, m, m);
        for (size_t k = 0; k < n; ++k) {
            if (coeff[k].is_zero()) continue;
            const Matrix<F>& mk = use_theta
                ? (fixed_first ? r.Th(fixed, k) : r.Th(k, fixed))
                : (fixed_first ? r.D(fixed, k) : r.D(k, fixed));
            out = out + mk.scaled(coeff[k]);
        }
        return out;
    };

    for (size_t a = 0; a < n && rep.r1.pass; ++a)
        for (size_t b = 0; b < n; ++b) {
            Matrix<F> lhs = r.D(a, b) + r.Th(a, b) - r.Th(b, a);
            Matrix<F> rhs = r.rho[a] * r.rho[b] - r.rho[b] * r.rho[a] - comb(r.rho, L.bin(a, b));
            if (lhs != rhs) { fail(rep.r1, {a, b}); break; }
        }

    for (size_t a = 0; a < n && rep.r2.pass; ++a)
        for (size_t b = 0; b < n && rep.r2.pass; ++b)
            for (size_t c = 0; c < n; ++c) {
                Matrix<F> lhs = comb_pair(true, L.bin(b, c), a, true)
                    - r.rho[b] * r.Th(a, c) + r.rho[c] * r.Th(a, b);
                if (!lhs.is_zero()) { fail(rep.r2, {a, b, c}); break; }
            }

    for (size_t a = 0; a < n && rep.r3.pass; ++a)
        for (size_t b = 0; b < n && rep.r3.pass; ++b)
            for (size_t c = 0; c < n; ++c) {
                Matrix<F> lhs = comb_pair(true, L.bin(a, b), c, false)
                    - r.Th(a, c) * r.rho[b] + r.Th(b, c) * r.rho[a];
                if (!lhs.is_zero()) { fail(rep.r3, {a, b, c}); break; }
            }

    for (size_t a = 0; a < n && rep.r4.pass; ++a)
        for (size_t b = 0; b < n && rep.r4.pass; ++b)
            for (size_t c = 0; c < n && rep.r4.pass; ++c)
                for (size_t d = 0; d < n; ++d) {
                    Matrix<F> lhs = r.Th(c, d) * r.Th(a, b) - r.Th(b, d) * r.Th(a, c)
                        - comb_pair(true, L.ter(b, c, d), a, true)
                        + r.D(b, c) * r.Th(a, d);
                    if (!lhs.is_zero()) { fail(rep.r4, {a, b, c, d}); break; }
                }

    for (size_t a = 0; a < n && rep.r5.pass; ++a)
        for (size_t b = 0; b < n && rep.r5.pass; ++b)
            for (size_t c = 0; c < n; ++c) {
                Matrix<F> lhs = r.D(a, b) * r.rho[c] - r.rho[c] * r.D(a, b)
                    - comb(r.rho, L.ter(a, b, c));
                if (!lhs.is_zero()) { fail(rep.r5, {a, b, c}); break; }
            }

    for (size_t a = 0; a < n && rep.r6.pass; ++a)
        for (size_t b = 0; b < n && rep.r6.pass; ++b)
            for (size_t c = 0; c < n && rep.r6.pass; ++c)
                for (size_t d = 0; d < n; ++d) {
                    Matrix<F> lhs = r.D(a, b) * r.Th(c, d) - r.Th(c, d) * r.D(a, b)
                        - comb_pair(true, L.ter(a, b, c), d, false)
                        - comb_pair(true, L.ter(a, b, d), c, true);
                    if (!lhs.is_zero()) { fail(rep.r6, {a, b, c, d}); break; }
                }

    for (size_t a = 0; a < n && rep.r7.pass; ++a)
        for (size_t b = 0; b < n && rep.r7.pass; ++b)
            for (size_t c = 0; c < n; ++c) {
                Matrix<F> lhs = comb_pair(false, L.bin(a, b), c, false)
                    + comb_pair(false, L.bin(b, c), a, false)
                    + comb_pair(false, L.bin(c, a), b, false);
                if (!lhs.is_zero()) { fail(rep.r7, {a, b, c}); break; }
            }

    return rep;
}

/// Adjoint representation: rho(a)b = [a,b], D(a,b)c = {a,b,c},
/// theta(a,b)c = {c,a,b}.
template <class F>
Representation<F> adjoint(const LYAlgebra<F>& L) {
    const size_t n = L.dim;
    Representation<F> r(L, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            for (size_t k = 0; k < n; ++k) r.rho[i](k, j) = L.bin(i, j)[k];
            for (size_t k = 0; k < n; ++k)
                for (size_t t = 0; t < n; ++t) {
                    r.D(i, j)(t, k) = L.ter(i, j, k)[t];
                    r.Th(i, j)(t, k) = L.ter(k, i, j)[t];
                }
        }
    return r;
}

template <class F>
Representation<F> trivial_rep(const LYAlgebra<F>& L, size_t m) {
    return Representation<F>(L, m);
}

/// Semidirect product structure on L + V. Works on unvalidated input; the
/// result passes check_axioms exactly when r is a representation.
template <class F>
LYAlgebra<F> semidirect(const Representation<F>& r) {
    const auto& L = r.algebra;
    const F& f = L.field;
    const size_t n = L.dim, m = r.vdim, N = n + m;
    LYAlgebra<F> T(f, N);
    for (size_t i = 0; i < n; ++i) T.basis_names[i] = L.basis_names[i];
    for (size_t j = 0; j < m; ++j) T.basis_names[n + j] = "v" + std::to_string(j + 1);

    auto emb = [&](const Vec<F>& l_part, const Vec<F>& v_part) {
        Vec<F> out = zero_vec(f, N);
        for (size_t i = 0; i < n; ++i) out[i] = l_part[i];
        for (size_t j = 0; j < m; ++j) out[n + j] = v_part[j];
        return out;
    };
    const Vec<F> zl = zero_vec(f, n), zv = zero_vec(f, m);

    for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j) {
            if (i < n && j < n)
                T.bin(i, j) = emb(L.bin(i, j), zv);
            else if (i < n && j >= n)
                T.bin(i, j) = emb(zl, r.rho[i].col(j - n));
            else if (i >= n && j < n) {
                Vec<F> c = r.rho[j].col(i - n);
                for (auto& x : c) x = -x;
                T.bin(i, j) = emb(zl, c);
            }
            for (size_t k = 0; k < N; ++k) {
                if (i < n && j < n && k < n)
                    T.ter(i, j, k) = emb(L.ter(i, j, k), zv);
                else if (i < n && j < n && k >= n)
                    T.ter(i, j, k) = emb(zl, r.D(i, j).col(k - n));
                else if (i >= n && j < n && k < n)
                    T.ter(i, j, k) = emb(zl, r.Th(j, k).col(i - n));
                else if (i < n && j >= n && k < n) {
                    Vec<F> c = r.Th(i, k).col(j - n);
                    for (auto& x : c) x = -x;
                    T.ter(i, j, k) = emb(zl, c);
                }
            }
        }
    return T;
}

/// Twist by an automorphism psi of the base: rho'(a) = rho(psi a),
/// D'(a,b) = D(psi a, psi b), theta'(a,b) = theta(psi a, psi b).
template <class F>
Representation<F> twist(const Representation<F>& r, const Matrix<F>& psi) {
    if (!is_automorphism(r.algebra, psi))
        throw std::invalid_argument("twist: psi is not an automorphism of the base algebra");
    const size_t n = r.algebra.dim;
    Representation<F> out(r.algebra, r.vdim);
    for (size_t i = 0; i < n; ++i) {
        out.rho[i] = r.rho_of(psi.col(i));
        for (size_t j = 0; j < n; ++j) {
            out.D(i, j) = r.D_of(psi.col(i), psi.col(j));
            out.Th(i, j) = r.theta_of(psi.col(i), psi.col(j));
        }
    }
    return out;
}

/// phi intertwines r and r2 (representations of the same algebra):
/// phi rho(a) = rho'(a) phi etc. on all basis tuples.
template <class F>
bool is_rep_morphism(const Representation<F>& r, const Representation<F>& r2,
                     const Matrix<F>& phi) {
    if (r.vdim != phi.cols() || r2.vdim != phi.rows() || r.algebra.dim != r2.algebra.dim)
        throw std::invalid_argument("is_rep_morphism: shape mismatch");
    const size_t n = r.algebra.dim;
    for (size_t i = 0; i < n; ++i) {
        if (phi * r.rho[i] != r2.rho[i] * phi) return false;
        for (size_t j = 0; j < n; ++j) {
            if (phi * r.D(i, j) != r2.D(i, j) * phi) return false;
            if (phi * r.Th(i, j) != r2.Th(i, j) * phi) return false;
        }
    }
    return true;
}

} // namespace lyat

#endif
