#ifndef LYAT_INDUCIBILITY_HPP
#define LYAT_INDUCIBILITY_HPP

#include "lyat/extension.hpp"

namespace lyat {

/// Candidate pair (phi, psi) in Aut(V) x Aut(base). V is abelian, so
/// Aut(V) = GL(V): any invertible phi qualifies; psi must be an algebra
/// automorphism of the base.
template <class F>
struct AutPair {
    Matrix<F> phi;  // m x m
    Matrix<F> psi;  // n x n
};

template <class F>
void validate_pair(const AbelianExtension<F>& e, const AutPair<F>& pr) {
    if (pr.phi.rows() != e.vdim || pr.phi.cols() != e.vdim ||
        pr.psi.rows() != e.base.dim || pr.psi.cols() != e.base.dim)
        throw std::invalid_argument("AutPair: shape mismatch");
    if (!invert(pr.phi)) throw std::invalid_argument("AutPair: phi is singular");
    if (!is_automorphism(e.base, pr.psi))
        throw std::invalid_argument("AutPair: psi is not an automorphism of the base");
}

template <class F>
struct AutClassification {
    bool in_aut_v = false;              // gamma(V) = V
    std::optional<AutPair<F>> pair;     // tau(gamma), present iff in_aut_v
    bool in_aut_v_upper_l = false;      // Aut_V^L: induced map on base is id
    bool in_aut_upper_v = false;        // Aut^V: gamma fixes V pointwise
    bool in_aut_vl = false;             // Aut^{V,L}: both
};

/// Classifies an automorphism of the total algebra against the lifting
/// subgroups. Requires gamma to be an automorphism of total.
template <class F>
AutClassification<F> classify_automorphism(const AbelianExtension<F>& e,
                                           const Matrix<F>& gamma) {
    if (!is_automorphism(e.total, gamma))
        throw std::invalid_argument("classify_automorphism: gamma is not an automorphism of the total algebra");
    AutClassification<F> out;
    if (!(e.proj * gamma * e.incl).is_zero()) return out;  // gamma(V) != V
    out.in_aut_v = true;
    Matrix<F> phi = e.vproj * gamma * e.incl;
    Matrix<F> psi = e.proj * gamma * e.sect;
    out.in_aut_v_upper_l = psi.is_identity();
    out.in_aut_upper_v = phi.is_identity();
    out.in_aut_vl = out.in_aut_v_upper_l && out.in_aut_upper_v;
    out.pair = AutPair<F>{std::move(phi), std::move(psi)};
    return out;
}

/// Compatibility: phi intertwines the induced representation and the
/// representation twisted by psi.
template <class F>
bool is_compatible(const AbelianExtension<F>& e, const AutPair<F>& pr) {
    validate_pair(e, pr);
    return is_rep_morphism(e.rep, twist(e.rep, pr.psi), pr.phi);
}

/// (alpha_{phi,psi}, beta_{phi,psi}) =
/// (phi a(psi^-1, psi^-1) - a, phi b(psi^-1, psi^-1, psi^-1) - b).
template <class F>
CochainPair<F> wells_cocycle(const AbelianExtension<F>& e, const AutPair<F>& pr) {
    if (!is_compatible(e, pr))
        throw std::invalid_argument("wells_cocycle: pair is not compatible");
    const F& f = e.base.field;
    const size_t n = e.base.dim, m = e.vdim;
    Matrix<F> psi_inv = *invert(pr.psi);

    CochainPair<F> out(f, n, m, 1);
    // alpha evaluated at vector arguments
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
    auto beta_vvv = [&](const Vec<F>& x, const Vec<F>& y, const Vec<F>& z) {
        Vec<F> r = zero_vec(f, m);
        for (size_t i = 0; i < n; ++i) {
            if (x[i].is_zero()) continue;
            for (size_t j = 0; j < n; ++j) {
                if (y[j].is_zero()) continue;
                auto c = x[i] * y[j];
                for (size_t k = 0; k < n; ++k) {
                    if (z[k].is_zero()) continue;
                    auto ck = c * z[k];
                    for (size_t v = 0; v < m; ++v) r[v] += ck * e.cocycle.odd.at({i, j, k}, v);
                }
            }
        }
        return r;
    };

    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) {
            Vec<F> av = pr.phi.apply(alpha_vv(psi_inv.col(a), psi_inv.col(b)));
            for (size_t v = 0; v < m; ++v) av[v] -= e.cocycle.even.at({a, b}, v);
            out.even.set_value({a, b}, av);
            for (size_t c = 0; c < n; ++c) {
                Vec<F> bv = pr.phi.apply(
                    beta_vvv(psi_inv.col(a), psi_inv.col(b), psi_inv.col(c)));
                for (size_t v = 0; v < m; ++v) bv[v] -= e.cocycle.odd.at({a, b, c}, v);
                out.odd.set_value({a, b, c}, bv);
            }
        }

    if (!is_cocycle23(e.rep, out))
        throw std::logic_error("wells_cocycle: result is not a (2,3)-cocycle");
    return out;
}

template <class F>
struct WellsClass {
    bool trivial;
    std::optional<Matrix<F>> witness;  // lambda with delta(lambda) = Wells cocycle
};

template <class F>
WellsClass<F> wells_class(const AbelianExtension<F>& e, const AutPair<F>& pr) {
    auto w = wells_cocycle(e, pr);
    auto lam = solve_coboundary(e.rep, w);
    return {lam.has_value(), lam};
}

/// Lifting automorphism together with the solving 1-cochain:
/// gamma(v + s(a)) = phi(v) + lambda(psi(a)) + s(psi(a)), where
/// delta(lambda) equals the Wells cocycle of the pair.
template <class F>
struct LiftCertificate {
    Matrix<F> gamma;
    Matrix<F> lambda;
};

enum class InducibilityFailure { incompatible, nontrivial_class };

template <class F>
struct InducibilityResult {
    std::optional<LiftCertificate<F>> certificate;
    std::optional<InducibilityFailure> reason;
    bool inducible() const { return certificate.has_value(); }
};

/// Decides inducibility of (phi, psi); on success the certificate gamma is
/// verified directly as an automorphism of the total algebra inducing the
/// pair.
template <class F>
InducibilityResult<F> decide_inducible(const AbelianExtension<F>& e, const AutPair<F>& pr) {
    validate_pair(e, pr);
    if (!is_compatible(e, pr))
        return {std::nullopt, InducibilityFailure::incompatible};
    auto wc = wells_class(e, pr);
    if (!wc.trivial)
        return {std::nullopt, InducibilityFailure::nontrivial_class};

    const Matrix<F>& lam = *wc.witness;
    Matrix<F> gamma = e.incl * pr.phi * e.vproj +
                      e.incl * (lam * pr.psi) * e.proj +
                      e.sect * pr.psi * e.proj;

    if (!is_automorphism(e.total, gamma))
        throw std::logic_error("decide_inducible: constructed gamma is not an automorphism");
    auto cls = classify_automorphism(e, gamma);
    if (!cls.in_aut_v || cls.pair->phi != pr.phi || cls.pair->psi != pr.psi)
        throw std::logic_error("decide_inducible: gamma does not induce the pair");
    return {LiftCertificate<F>{std::move(gamma), lam}, std::nullopt};
}

/// lambda_1(phi) = [(phi a - a, phi b - b)] for (phi, 1) compatible.
template <class F>
WellsClass<F> lambda1_class(const AbelianExtension<F>& e, const Matrix<F>& phi) {
    AutPair<F> pr{phi, Matrix<F>::identity(e.base.field, e.base.dim)};
    if (!is_compatible(e, pr))
        throw std::invalid_argument("lambda1_class: (phi, 1) is not compatible");
    return wells_class(e, pr);
}

/// lambda_2(psi) = [(a(psi^-1,psi^-1) - a, ...)] for (1, psi) compatible.
template <class F>
WellsClass<F> lambda2_class(const AbelianExtension<F>& e, const Matrix<F>& psi) {
    AutPair<F> pr{Matrix<F>::identity(e.base.field, e.vdim), psi};
    if (!is_compatible(e, pr))
        throw std::invalid_argument("lambda2_class: (1, psi) is not compatible");
    return wells_class(e, pr);
}

/// H^1 -> Aut^{V,L}: gamma(v + s(a)) = v + lambda(a) + s(a).
template <class F>
Matrix<F> aut_from_h1(const AbelianExtension<F>& e, const Matrix<F>& lam) {
    if (!delta_zero(e.rep, lam).is_zero())
        throw std::invalid_argument("aut_from_h1: lambda is not delta-closed");
    Matrix<F> gamma = Matrix<F>::identity(e.base.field, e.total.dim) +
                      e.incl * lam * e.proj;
    auto cls = classify_automorphism(e, gamma);
    if (!cls.in_aut_vl) throw std::logic_error("aut_from_h1: image not in Aut^{V,L}");
    return gamma;
}

/// Inverse direction: chi(gamma)(a) = gamma s(a) - s(a), for gamma in Aut^{V,L}.
template <class F>
Matrix<F> chi_of_aut(const AbelianExtension<F>& e, const Matrix<F>& gamma) {
    auto cls = classify_automorphism(e, gamma);
    if (!cls.in_aut_vl)
        throw std::invalid_argument("chi_of_aut: gamma is not in Aut^{V,L}");
    Matrix<F> lam = e.vproj * gamma * e.sect;
    if (!delta_zero(e.rep, lam).is_zero())
        throw std::logic_error("chi_of_aut: extracted lambda is not delta-closed");
    return lam;
}

} // namespace lyat

#endif
