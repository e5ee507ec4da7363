#ifndef LYAT_EXTENSION_HPP
#define LYAT_EXTENSION_HPP

#include "lyat/cohomology.hpp"

namespace lyat {

/// Abelian extension 0 -> V -> total -> base -> 0 with a fixed section.
/// incl: K^m -> K^N embeds V, proj: K^N -> K^n is the quotient map,
/// sect: K^n -> K^N is the section (proj*sect = id, proj*incl = 0), and
/// vproj: K^N -> K^m extracts V-coordinates (vproj*incl = id, vproj*sect = 0).
/// rep is the induced representation, cocycle the induced (alpha, beta),
/// both written in V-coordinates.
template <class F>
struct AbelianExtension {
    LYAlgebra<F> base;
    size_t vdim;
    Representation<F> rep;
    CochainPair<F> cocycle;  // level 1
    LYAlgebra<F> total;
    Matrix<F> incl;   // N x m
    Matrix<F> proj;   // n x N
    Matrix<F> sect;   // N x n
    Matrix<F> vproj;  // m x N

    size_t total_dim() const { return total.dim; }

    Vec<F> alpha_at(size_t i, size_t j) const {
        return cocycle.even.value(base.field, {i, j});
    }
    Vec<F> beta_at(size_t i, size_t j, size_t k) const {
        return cocycle.odd.value(base.field, {i, j, k});
    }
};

namespace detail {

template <class F>
LYAlgebra<F> assemble_total(const LYAlgebra<F>& L, const Representation<F>& r,
                            const CochainPair<F>& c) {
    const size_t n = L.dim, m = r.vdim;
    LYAlgebra<F> T = semidirect(r);
    // add the cocycle on the base-base tuples
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            for (size_t v = 0; v < m; ++v) T.bin(i, j)[n + v] += c.even.at({i, j}, v);
            for (size_t k = 0; k < n; ++k)
                for (size_t v = 0; v < m; ++v)
                    T.ter(i, j, k)[n + v] += c.odd.at({i, j, k}, v);
        }
    return T;
}

} // namespace detail

/// Builds the extension without the cocycle precondition; the total passes
/// check_axioms exactly when c is a (2,3)-cocycle.
template <class F>
AbelianExtension<F> build_extension_raw(const LYAlgebra<F>& L, const Representation<F>& r,
                                        const CochainPair<F>& c) {
    if (c.level != 1) throw std::invalid_argument("build_extension: level-1 cocycle required");
    if (c.even.n != L.dim || c.even.m != r.vdim)
        throw std::invalid_argument("build_extension: cochain shape mismatch");
    const F& f = L.field;
    const size_t n = L.dim, m = r.vdim, N = n + m;

    Matrix<F> incl(f, N, m), proj(f, n, N), sect(f, N, n), vproj(f, m, N);
    for (size_t v = 0; v < m; ++v) incl(n + v, v) = f.one();
    for (size_t a = 0; a < n; ++a) { proj(a, a) = f.one(); sect(a, a) = f.one(); }
    for (size_t v = 0; v < m; ++v) vproj(v, n + v) = f.one();

    return AbelianExtension<F>{L, m, r, c, detail::assemble_total(L, r, c),
                               std::move(incl), std::move(proj), std::move(sect),
                               std::move(vproj)};
}

template <class F>
AbelianExtension<F> build_extension(const LYAlgebra<F>& L, const Representation<F>& r,
                                    const CochainPair<F>& c) {
    if (!is_cocycle23(r, c))
        throw std::invalid_argument("build_extension: (alpha, beta) is not a (2,3)-cocycle");
    return build_extension_raw(L, r, c);
}

/// Extracts base, induced representation and induced cocycle from a total
/// algebra with a chosen abelian ideal V. The section is the
/// complement-coordinate embedding (non-pivot columns of V's RREF).
template <class F>
AbelianExtension<F> from_total(const LYAlgebra<F>& total, const SubspaceBasis<F>& V) {
    const F& f = total.field;
    const size_t N = total.dim, m = V.dim(), n = N - m;
    auto idr = ideal_tests(total, V);
    if (!idr.is_abelian_ideal)
        throw std::invalid_argument("from_total: V is not an abelian ideal");

    auto q = quotient(total, V);
    Matrix<F> incl = Matrix<F>::from_cols(f, V.vectors());
    Matrix<F> vproj(f, m, N);
    for (size_t t = 0; t < m; ++t) vproj(t, V.pivot_cols()[t]) = f.one();

    const Matrix<F>& proj = q.projection;
    const Matrix<F>& sect = q.inclusion;

    Representation<F> rep(q.algebra, m);
    for (size_t a = 0; a < n; ++a) {
        Vec<F> sa = sect.col(a);
        for (size_t v = 0; v < m; ++v) {
            Vec<F> iv = incl.col(v);
            auto rcol = vproj.apply(total.bracket(sa, iv));
            for (size_t t = 0; t < m; ++t) rep.rho[a](t, v) = rcol[t];
        }
        for (size_t b = 0; b < n; ++b) {
            Vec<F> sb = sect.col(b);
            for (size_t v = 0; v < m; ++v) {
                Vec<F> iv = incl.col(v);
                auto dcol = vproj.apply(total.triple(sa, sb, iv));
                auto tcol = vproj.apply(total.triple(iv, sa, sb));
                for (size_t t = 0; t < m; ++t) {
                    rep.D(a, b)(t, v) = dcol[t];
                    rep.Th(a, b)(t, v) = tcol[t];
                }
            }
        }
    }

    CochainPair<F> c(f, n, m, 1);
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) {
            Vec<F> sa = sect.col(a), sb = sect.col(b);
            Vec<F> br = total.bracket(sa, sb);
            Vec<F> sab = sect.apply(q.algebra.bin(a, b));
            c.even.set_value({a, b}, vproj.apply(vec_sub<F>(br, sab)));
            for (size_t k = 0; k < n; ++k) {
                Vec<F> sk = sect.col(k);
                Vec<F> tr = total.triple(sa, sb, sk);
                Vec<F> st = sect.apply(q.algebra.ter(a, b, k));
                c.odd.set_value({a, b, k}, vproj.apply(vec_sub<F>(tr, st)));
            }
        }

    if (!check_representation(rep).all_pass())
        throw std::logic_error("from_total: induced representation failed validation");
    if (!is_cocycle23(rep, c))
        throw std::logic_error("from_total: induced cochain is not a cocycle");

    return AbelianExtension<F>{q.algebra, m, std::move(rep), std::move(c),
                               total, std::move(incl), proj, sect, std::move(vproj)};
}

/// 0 -> Z(L) -> L -> L/Z(L) -> 0. For index-2 nilpotent L the induced
/// representation is trivial (asserted).
template <class F>
AbelianExtension<F> central_extension(const LYAlgebra<F>& L) {
    auto Z = center(L);
    if (Z.dim() == 0) throw std::invalid_argument("central_extension: center is trivial");
    auto e = from_total(L, Z);
    auto lcs = lower_central_series(L);
    if (lcs.nilpotency_index && *lcs.nilpotency_index == 2) {
        for (const auto& mtx : e.rep.rho)
            if (!mtx.is_zero()) throw std::logic_error("central_extension: expected trivial rep");
        for (const auto& mtx : e.rep.dmap)
            if (!mtx.is_zero()) throw std::logic_error("central_extension: expected trivial rep");
        for (const auto& mtx : e.rep.theta)
            if (!mtx.is_zero()) throw std::logic_error("central_extension: expected trivial rep");
    }
    return e;
}

/// Induced cocycle of the extension computed through an alternative linear
/// section t (proj * t = id required).
template <class F>
CochainPair<F> cocycle_of_section(const AbelianExtension<F>& e, const Matrix<F>& t) {
    const F& f = e.base.field;
    const size_t n = e.base.dim, m = e.vdim;
    if (!(e.proj * t).is_identity())
        throw std::invalid_argument("cocycle_of_section: t is not a section");
    CochainPair<F> c(f, n, m, 1);
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) {
            Vec<F> ta = t.col(a), tb = t.col(b);
            Vec<F> br = e.total.bracket(ta, tb);
            Vec<F> tab = t.apply(e.base.bin(a, b));
            c.even.set_value({a, b}, e.vproj.apply(vec_sub<F>(br, tab)));
            for (size_t k = 0; k < n; ++k) {
                Vec<F> tr = e.total.triple(ta, tb, t.col(k));
                Vec<F> st = t.apply(e.base.ter(a, b, k));
                c.odd.set_value({a, b, k}, e.vproj.apply(vec_sub<F>(tr, st)));
            }
        }
    return c;
}

/// lambda = vproj (s - t); asserts delta(lambda) = (alpha_s - alpha_t,
/// beta_s - beta_t) exactly.
template <class F>
Matrix<F> section_shift_witness(const AbelianExtension<F>& e, const Matrix<F>& t) {
    const F& f = e.base.field;
    if (!(e.proj * t).is_identity())
        throw std::invalid_argument("section_shift_witness: t is not a section");
    Matrix<F> lam = e.vproj * (e.sect - t);
    auto lhs = delta_zero(e.rep, lam);
    auto rhs = e.cocycle - cocycle_of_section(e, t);
    if (lhs != rhs)
        throw std::logic_error("section_shift_witness: coboundary identity failed");
    (void)f;
    return lam;
}

/// Equivalence over identical (base, V, rep): phi with phi|_V = id and
/// proj' phi = proj exists iff the cocycle difference is a coboundary.
template <class F>
std::optional<Matrix<F>> are_equivalent(const AbelianExtension<F>& e1,
                                        const AbelianExtension<F>& e2) {
    if (e1.base.dim != e2.base.dim || e1.vdim != e2.vdim ||
        e1.base.binary != e2.base.binary || e1.base.ternary != e2.base.ternary)
        throw std::invalid_argument("are_equivalent: incomparable inputs");
    if (e1.rep.rho != e2.rep.rho || e1.rep.dmap != e2.rep.dmap ||
        e1.rep.theta != e2.rep.theta)
        throw std::invalid_argument("are_equivalent: representation mismatch");

    auto lam = solve_coboundary(e1.rep, e1.cocycle - e2.cocycle);
    if (!lam) return std::nullopt;
    // phi(i1 v + s1 a) = i2 v + i2 lambda(a) + s2 a
    Matrix<F> phi = e2.incl * e1.vproj + e2.incl * (*lam) * e1.proj + e2.sect * e1.proj;
    return phi;
}

} // namespace lyat

#endif
