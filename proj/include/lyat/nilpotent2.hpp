#ifndef LYAT_NILPOTENT2_HPP
#define LYAT_NILPOTENT2_HPP

#include <random>
#include <sstream>

#include "lyat/inducibility.hpp"
#include "lyat/poly.hpp"

namespace lyat {

/// Direct inducibility criterion for central extensions of index-2
/// nilpotent algebras (abelian base, trivial induced representation):
/// phi alpha(a,b) = alpha(psi a, psi b) and phi beta = beta(psi,psi,psi) on
/// all basis tuples. Falls back to decide_inducible when the hypotheses do
/// not hold.
template <class F>
bool direct_check(const AbelianExtension<F>& e, const AutPair<F>& pr) {
    validate_pair(e, pr);
    bool trivial = true;
    for (const auto& m : e.rep.rho) trivial = trivial && m.is_zero();
    for (const auto& m : e.rep.dmap) trivial = trivial && m.is_zero();
    for (const auto& m : e.rep.theta) trivial = trivial && m.is_zero();
    if (!e.base.is_abelian() || !trivial)
        return decide_inducible(e, pr).inducible();

    const F& f = e.base.field;
    const size_t n = e.base.dim, m = e.vdim;
    auto alpha_vv = [&](const Vec<F>& x, const Vec<F>& y) {
        Vec<F> r = zero_vec(f, m);
        for (size_t i = 0; i < n; ++i) {
            if (x[i].is_zero()) continue;
            for (size_t j = 0; j < n; ++j) {
                if (y[j].is_zero()) continue;
                auto c = x[i] * y[j];
                for (size_t v = 0; v < m; ++v) r[v] += c * e.cocycle.even.at({i, j}, v);
            }
        }
        return r;
    };
    for (size_t a = 0; a < n; ++a)
        for (size_t b = a + 1; b < n; ++b) {
            Vec<F> lhs = pr.phi.apply(e.alpha_at(a, b));
            if (lhs != alpha_vv(pr.psi.col(a), pr.psi.col(b))) return false;
        }
    for (size_t a = 0; a < n; ++a)
        for (size_t b = a + 1; b < n; ++b) {
            const Vec<F> pa = pr.psi.col(a), pb = pr.psi.col(b);
            for (size_t c = 0; c < n; ++c) {
                Vec<F> lhs = pr.phi.apply(e.beta_at(a, b, c));
                Vec<F> rhs = zero_vec(f, m);
                for (size_t i = 0; i < n; ++i) {
                    if (pa[i].is_zero()) continue;
                    for (size_t j = 0; j < n; ++j) {
                        if (pb[j].is_zero()) continue;
                        auto cf = pa[i] * pb[j];
                        for (size_t k = 0; k < n; ++k) {
                            const auto& pk = pr.psi(k, c);
                            if (pk.is_zero()) continue;
                            auto ck = cf * pk;
                            for (size_t v = 0; v < m; ++v)
                                rhs[v] += ck * e.cocycle.odd.at({i, j, k}, v);
                        }
                    }
                }
                if (lhs != rhs) return false;
            }
        }
    return true;
}

enum class RelationKind { binary, ternary };

template <class F>
struct Relation {
    Poly<F> poly;
    RelationKind kind;
    std::vector<size_t> tuple;  // 1-based source tuple (i,j) or (i,j,k)
    size_t component;           // V-coordinate, 0-based
};

/// Symbolic relation set characterizing inducible pairs for the central
/// extension of an index-2 nilpotent algebra. Variables: x[r][c] for the
/// entries of [psi] over the base (1-based, column convention
/// psi(ebar_c) = sum_r x[r][c] ebar_r) and y[r][c] for [phi] over the
/// center, shortened to "k" when the center is one-dimensional.
template <class F>
struct RelationSet {
    size_t base_dim;
    size_t center_dim;
    std::vector<std::string> var_names;
    std::vector<Relation<F>> relations;

    size_t x_index(size_t r, size_t c) const { return r * base_dim + c; }
    size_t y_index(size_t r, size_t c) const {
        return base_dim * base_dim + r * center_dim + c;
    }
};

template <class F>
RelationSet<F> generate_relations(const LYAlgebra<F>& L) {
    auto lcs = lower_central_series(L);
    if (!lcs.nilpotency_index || *lcs.nilpotency_index != 2)
        throw std::invalid_argument("generate_relations: algebra is not nilpotent of index 2");
    const F& f = L.field;
    auto e = central_extension(L);
    const size_t n = e.base.dim, m = e.vdim;
    const size_t nvars = n * n + m * m;

    RelationSet<F> out;
    out.base_dim = n;
    out.center_dim = m;
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c)
            out.var_names.push_back("x[" + std::to_string(r + 1) + "][" +
                                    std::to_string(c + 1) + "]");
    for (size_t r = 0; r < m; ++r)
        for (size_t c = 0; c < m; ++c)
            out.var_names.push_back(m == 1 ? "k"
                                           : "y[" + std::to_string(r + 1) + "][" +
                                                 std::to_string(c + 1) + "]");

    auto xv = [&](size_t r, size_t c) {
        return Poly<F>::variable(f, nvars, out.x_index(r, c));
    };
    auto yv = [&](size_t r, size_t c) {
        return Poly<F>::variable(f, nvars, out.y_index(r, c));
    };
    auto phi_apply = [&](const Vec<F>& val, size_t v) {
        // (phi val)_v as a polynomial in the y variables
        Poly<F> p(f, nvars);
        for (size_t w = 0; w < m; ++w)
            if (!val[w].is_zero()) p = p + yv(v, w).scaled(val[w]);
        return p;
    };

    // alpha(psi ebar_i, psi ebar_j) = phi(alpha(ebar_i, ebar_j)), i < j
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t v = 0; v < m; ++v) {
                Poly<F> p(f, nvars);
                for (size_t r = 0; r < n; ++r)
                    for (size_t s = 0; s < n; ++s) {
                        const auto& c = e.cocycle.even.at({r, s}, v);
                        if (!c.is_zero()) p = p + (xv(r, i) * xv(s, j)).scaled(c);
                    }
                p = p - phi_apply(e.alpha_at(i, j), v);
                if (p.is_zero()) continue;
                out.relations.push_back({p.normalized(), RelationKind::binary,
                                         {i + 1, j + 1}, v});
            }

    // beta(psi ebar_i, psi ebar_j, psi ebar_k) = phi(beta(ebar_i, ebar_j, ebar_k))
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t k = 0; k < n; ++k)
                for (size_t v = 0; v < m; ++v) {
                    Poly<F> p(f, nvars);
                    for (size_t r = 0; r < n; ++r)
                        for (size_t s = 0; s < n; ++s)
                            for (size_t t = 0; t < n; ++t) {
                                const auto& c = e.cocycle.odd.at({r, s, t}, v);
                                if (!c.is_zero())
                                    p = p + (xv(r, i) * xv(s, j) * xv(t, k)).scaled(c);
                            }
                    p = p - phi_apply(e.beta_at(i, j, k), v);
                    if (p.is_zero()) continue;
                    out.relations.push_back({p.normalized(), RelationKind::ternary,
                                             {i + 1, j + 1, k + 1}, v});
                }
    return out;
}

/// True iff every relation vanishes at the numeric pair.
template <class F>
bool evaluate_relations(const RelationSet<F>& rs, const AutPair<F>& pr) {
    const F& f = pr.phi.field();
    const size_t n = rs.base_dim, m = rs.center_dim;
    if (pr.psi.rows() != n || pr.phi.rows() != m)
        throw std::invalid_argument("evaluate_relations: shape mismatch");
    std::vector<typename F::Element> assignment;
    assignment.reserve(n * n + m * m);
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) assignment.push_back(pr.psi(r, c));
    for (size_t r = 0; r < m; ++r)
        for (size_t c = 0; c < m; ++c) assignment.push_back(pr.phi(r, c));
    for (const auto& rel : rs.relations)
        if (!rel.poly.evaluate(assignment).is_zero()) return false;
    (void)f;
    return true;
}

enum class HeisenbergMode { as_stated, corrected };

struct HeisenbergConditionReport {
    // conditions (1), (2), (3), (4a), (4b), (4c)
    bool c1, c2, c3, c4a, c4b, c4c;
    bool all() const { return c1 && c2 && c3 && c4a && c4b && c4c; }
};

/// Block-matrix inducibility conditions for the central extension of the
/// Heisenberg family. psi is 2n x 2n blocked [[A,B],[C,D]], phi = kappa.
/// Condition (4c) is evaluated as stated (C^t M = O) or in the corrected
/// reading (B^t M = O) derived from the defining equations.
template <class F>
HeisenbergConditionReport heisenberg_conditions(size_t n, const AutPair<F>& pr,
                                                HeisenbergMode mode) {
    const F& f = pr.phi.field();
    if (pr.psi.rows() != 2 * n || pr.psi.cols() != 2 * n || pr.phi.rows() != 1)
        throw std::invalid_argument("heisenberg_conditions: shape mismatch");
    const auto kappa = pr.phi(0, 0);
    auto A = [&](size_t r, size_t c) { return pr.psi(r, c); };
    auto B = [&](size_t r, size_t c) { return pr.psi(r, n + c); };
    auto C = [&](size_t r, size_t c) { return pr.psi(n + r, c); };
    auto D = [&](size_t r, size_t c) { return pr.psi(n + r, n + c); };

    HeisenbergConditionReport rep{true, true, true, true, true, true};

    // (1) A^t D - C^t B = kappa I
    for (size_t i = 0; i < n && rep.c1; ++i)
        for (size_t l = 0; l < n; ++l) {
            auto s = f.zero();
            for (size_t r = 0; r < n; ++r) s += A(r, i) * D(r, l) - C(r, i) * B(r, l);
            if (s != (i == l ? kappa : f.zero())) { rep.c1 = false; break; }
        }
    // (2) A^t C and B^t D symmetric
    for (size_t i = 0; i < n && rep.c2; ++i)
        for (size_t j = 0; j < n; ++j) {
            auto s = f.zero(), t = f.zero();
            for (size_t r = 0; r < n; ++r) {
                s += A(r, i) * C(r, j) - C(r, i) * A(r, j);
                t += B(r, i) * D(r, j) - D(r, i) * B(r, j);
            }
            if (!s.is_zero() || !t.is_zero()) { rep.c2 = false; break; }
        }

    // M^sigma_{(xz,wu)}[r][c] = x(r,c) u(r,sigma) - z(r,c) w(r,sigma)
    auto m_ac_bd = [&](size_t sigma, size_t r, size_t c) {
        return A(r, c) * D(r, sigma) - C(r, c) * B(r, sigma);
    };
    auto m_ac_ac = [&](size_t sigma, size_t r, size_t c) {
        return A(r, c) * C(r, sigma) - C(r, c) * A(r, sigma);
    };
    auto m_bd_bd = [&](size_t sigma, size_t r, size_t c) {
        return B(r, c) * D(r, sigma) - D(r, c) * B(r, sigma);
    };
    auto left_product_zero = [&](auto&& left, auto&& M) {
        for (size_t sigma = 0; sigma < n; ++sigma)
            for (size_t l = 0; l < n; ++l)
                for (size_t c = 0; c < n; ++c) {
                    auto s = f.zero();
                    for (size_t r = 0; r < n; ++r) s += left(r, l) * M(sigma, r, c);
                    if (!s.is_zero()) return false;
                }
        return true;
    };

    // (3) A^t M^sigma_(ac,bd) = kappa E_{sigma,sigma}
    for (size_t sigma = 0; sigma < n && rep.c3; ++sigma)
        for (size_t l = 0; l < n && rep.c3; ++l)
            for (size_t c = 0; c < n; ++c) {
                auto s = f.zero();
                for (size_t r = 0; r < n; ++r) s += A(r, l) * m_ac_bd(sigma, r, c);
                auto expect = (l == sigma && c == sigma) ? kappa : f.zero();
                if (s != expect) { rep.c3 = false; break; }
            }
    // (4a) A^t M_(ac,ac) = O = B^t M_(ac,ac)
    rep.c4a = left_product_zero(A, m_ac_ac) && left_product_zero(B, m_ac_ac);
    // (4b) A^t M_(bd,bd) = O = B^t M_(bd,bd)
    rep.c4b = left_product_zero(A, m_bd_bd) && left_product_zero(B, m_bd_bd);
    // (4c) as stated: C^t M_(ac,bd) = O; corrected: B^t M_(ac,bd) = O
    rep.c4c = mode == HeisenbergMode::as_stated ? left_product_zero(C, m_ac_bd)
                                                : left_product_zero(B, m_ac_bd);
    return rep;
}

template <class F>
struct CrosscheckWitness {
    AutPair<F> pair;
    bool direct;
    bool as_stated;
    bool corrected;
    // re-verification of the direct verdict
    bool reverified;
    std::string reverification;
};

template <class F>
struct CrosscheckReport {
    size_t n;
    size_t samples = 0;
    size_t corrected_agreements = 0;
    size_t as_stated_agreements = 0;
    std::vector<CrosscheckWitness<F>> disagreements;  // as-stated vs direct
    bool corrected_agrees_everywhere() const {
        return corrected_agreements == samples;
    }
};

namespace detail {

template <class F>
AutPair<F> random_heisenberg_pair(const F& f, std::mt19937_64& rng, size_t n, int kind) {
    const size_t nn = 2 * n;
    auto rand_el = [&](int span) {
        if constexpr (F::is_prime) {
            return f.from_int(static_cast<long long>(rng() % f.p));
        } else {
            (void)f;
            return Rational(static_cast<long>(rng() % (2 * span + 1)) - span);
        }
    };
    auto rand_nonzero = [&]() {
        while (true) {
            auto x = rand_el(3);
            if (!x.is_zero()) return x;
        }
    };
    Matrix<F> psi(f, nn, nn);
    auto kappa = rand_nonzero();
    switch (kind) {
    case 0:  // dense random invertible
        while (true) {
            for (size_t i = 0; i < nn; ++i)
                for (size_t j = 0; j < nn; ++j) psi(i, j) = rand_el(3);
            if (invert(psi)) break;
        }
        break;
    case 1:  // inducible family: A = I, D = kappa I, C diagonal
        for (size_t i = 0; i < n; ++i) {
            psi(i, i) = f.one();
            psi(n + i, n + i) = kappa;
            psi(n + i, i) = rand_el(3);
        }
        break;
    default:  // as-stated-passing family: A = I, D = kappa I, B diagonal nonzero somewhere
        for (size_t i = 0; i < n; ++i) {
            psi(i, i) = f.one();
            psi(n + i, n + i) = kappa;
            psi(i, n + i) = rand_el(2);
        }
        psi(0, n) = rand_nonzero();
        break;
    }
    Matrix<F> phi(f, 1, 1);
    phi(0, 0) = kappa;
    return {phi, psi};
}

} // namespace detail

/// Samples pairs (random and structured) for the central extension of
/// heisenberg(n), comparing the direct criterion with the block-matrix
/// conditions in both (4c) readings. Disagreement witnesses are
/// re-verified: by the explicit certificate gamma when inducible, by
/// exhaustive lift search over a prime field, and by the exact rank
/// computation behind decide_inducible over Q.
template <class F>
CrosscheckReport<F> crosscheck(const F& f, size_t n, size_t samples, uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto L = heisenberg(f, n);
    auto e = central_extension(L);
    CrosscheckReport<F> out;
    out.n = n;

    for (size_t it = 0; it < samples; ++it) {
        auto pr = detail::random_heisenberg_pair(f, rng, n, static_cast<int>(it % 3));
        if (!invert(pr.psi)) continue;
        bool direct = direct_check(e, pr);
        bool stated = heisenberg_conditions(n, pr, HeisenbergMode::as_stated).all();
        bool corr = heisenberg_conditions(n, pr, HeisenbergMode::corrected).all();
        ++out.samples;
        if (direct == corr) ++out.corrected_agreements;
        if (direct == stated) {
            ++out.as_stated_agreements;
        } else {
            CrosscheckWitness<F> w{pr, direct, stated, corr, false, ""};
            auto res = decide_inducible(e, pr);
            if (direct) {
                w.reverified = res.inducible() &&
                               is_automorphism(e.total, res.certificate->gamma);
                w.reverification = "explicit lifting automorphism verified";
            } else if constexpr (F::is_prime) {
                // exhaustive lift search over Hom(L, V): p^(2n) candidates
                bool found = false;
                const size_t nb = 2 * n;
                std::vector<uint32_t> mu(nb, 0);
                while (true) {
                    Matrix<F> lam(f, 1, nb);
                    for (size_t t = 0; t < nb; ++t) lam(0, t) = f.from_int(mu[t]);
                    Matrix<F> gamma = e.incl * pr.phi * e.vproj +
                                      e.incl * lam * e.proj +
                                      e.sect * pr.psi * e.proj;
                    if (is_morphism(e.total, e.total, gamma) && invert(gamma)) {
                        found = true;
                        break;
                    }
                    size_t t = 0;
                    while (t < nb && ++mu[t] == f.p) mu[t++] = 0;
                    if (t == nb) break;
                }
                w.reverified = !found && !res.inducible();
                w.reverification = "exhaustive lift search over F_p found no automorphism";
            } else {
                w.reverified = !res.inducible() &&
                               res.reason == InducibilityFailure::nontrivial_class;
                w.reverification = "exact coboundary system is inconsistent over Q";
            }
            out.disagreements.push_back(std::move(w));
        }
    }
    return out;
}

} // namespace lyat

#endif
