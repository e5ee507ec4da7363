#include <catch2/catch_amalgamated.hpp>

#include "lyat/extension.hpp"
#include "testutil.hpp"

using namespace lyat;

namespace {
const RationalField Q;

template <class F>
void check_structural_invariants(const AbelianExtension<F>& e) {
    CHECK((e.proj * e.incl).is_zero());
    CHECK((e.proj * e.sect).is_identity());
    CHECK((e.vproj * e.incl).is_identity());
    CHECK((e.vproj * e.sect).is_zero());
    SubspaceBasis<F> V = SubspaceBasis<F>::from_vectors(
        e.base.field, e.total.dim, [&] {
            std::vector<Vec<F>> cols;
            for (size_t v = 0; v < e.vdim; ++v) cols.push_back(e.incl.col(v));
            return cols;
        }());
    auto rep = ideal_tests(e.total, V);
    CHECK(rep.is_abelian_ideal);
    CHECK(is_cocycle23(e.rep, e.cocycle));
    CHECK(check_axioms(e.total).all_pass());
}

CochainPair<RationalField> h1_like_cocycle(const LYAlgebra<RationalField>& base) {
    // alpha(e1,e2) = 1, beta(e1,e2,e1) = 1 on a 2-dim abelian base, m = 1
    CochainPair<RationalField> c(Q, 2, 1, 1);
    c.even.at({0, 1}, 0) = Q.from_int(1);
    c.even.at({1, 0}, 0) = Q.from_int(-1);
    c.odd.at({0, 1, 0}, 0) = Q.from_int(1);
    c.odd.at({1, 0, 0}, 0) = Q.from_int(-1);
    (void)base;
    return c;
}
} // namespace

TEST_CASE("build_extension") {
    LYAlgebra<RationalField> ab2(Q, 2);
    auto r = trivial_rep(ab2, 1);

    SECTION("zero cocycle gives the semidirect product") {
        CochainPair<RationalField> z(Q, 2, 1, 1);
        auto e = build_extension(ab2, r, z);
        CHECK(e.total.binary == semidirect(r).binary);
        CHECK(e.total.ternary == semidirect(r).ternary);
        check_structural_invariants(e);
    }
    SECTION("h1 cocycle rebuilds the Heisenberg algebra") {
        auto e = build_extension(ab2, r, h1_like_cocycle(ab2));
        auto h1 = heisenberg(Q, 1);
        CHECK(e.total.binary == h1.binary);
        CHECK(e.total.ternary == h1.ternary);
        check_structural_invariants(e);
    }
    SECTION("non-cocycle rejected, raw builder fails axioms") {
        CochainPair<RationalField> bad(Q, 3, 3, 1);
        bad.odd.at({0, 1, 2}, 0) = Q.from_int(1);
        bad.odd.at({1, 0, 2}, 0) = Q.from_int(-1);
        auto h1 = heisenberg(Q, 1);
        auto ra = adjoint(h1);
        REQUIRE_FALSE(is_cocycle23(ra, bad));
        CHECK_THROWS_AS(build_extension(h1, ra, bad), std::invalid_argument);
        CHECK_FALSE(check_axioms(build_extension_raw(h1, ra, bad).total).all_pass());
    }
}

TEST_CASE("cocycle iff total satisfies axioms") {
    testutil::Rng rng(4242);
    PrimeField f3(3);
    auto h1 = heisenberg(f3, 1);
    auto r = adjoint(h1);
    CochainCoords cc{3, 3};
    int cocycles_seen = 0, non_cocycles_seen = 0;
    for (int it = 0; it < 24; ++it) {
        Vec<PrimeField> coords;
        if (it % 3 == 0) {
            // exact coboundaries are cocycles
            auto lam = testutil::random_matrix(f3, rng, 3, 3);
            coords = c23_coords(f3, delta_zero(r, lam));
        } else {
            coords = testutil::random_vec(f3, rng, cc.c23_dim());
        }
        auto c = c23_from_coords(f3, 3, 3, coords);
        bool is_c = is_cocycle23(r, c);
        bool ax = check_axioms(build_extension_raw(h1, r, c).total).all_pass();
        CHECK(is_c == ax);
        (is_c ? cocycles_seen : non_cocycles_seen)++;
    }
    CHECK(cocycles_seen > 0);
    CHECK(non_cocycles_seen > 0);
}

TEST_CASE("from_total") {
    SECTION("h1 by its center") {
        auto h1 = heisenberg(Q, 1);
        auto e = from_total(h1, center(h1));
        CHECK(e.base.dim == 2);
        CHECK(e.base.is_abelian());
        CHECK(e.vdim == 1);
        for (const auto& m : e.rep.rho) CHECK(m.is_zero());
        CHECK(e.alpha_at(0, 1)[0] == Q.from_int(1));
        CHECK(e.beta_at(0, 1, 0)[0] == Q.from_int(1));
        CHECK(e.beta_at(0, 1, 1)[0] == Q.from_int(0));
        check_structural_invariants(e);
    }
    SECTION("semidirect splits back with zero cocycle") {
        auto r = adjoint(heisenberg(Q, 1));
        auto t = semidirect(r);
        std::vector<Vec<RationalField>> vcols;
        for (size_t v = 0; v < 3; ++v) {
            Vec<RationalField> c = zero_vec(Q, 6);
            c[3 + v] = Q.from_int(1);
            vcols.push_back(c);
        }
        auto V = SubspaceBasis<RationalField>::from_vectors(Q, 6, vcols);
        auto e = from_total(t, V);
        CHECK(e.cocycle.is_zero());
        CHECK(e.rep.rho == r.rho);
        CHECK(e.rep.dmap == r.dmap);
        CHECK(e.rep.theta == r.theta);
        check_structural_invariants(e);
    }
    SECTION("g1 by its center") {
        auto g1 = generalized_heisenberg(Q, 1);
        auto e = from_total(g1, center(g1));
        CHECK(e.base.dim == 3);
        CHECK(e.base.is_abelian());
        CHECK(e.alpha_at(0, 2)[0] == Q.from_int(1));
        CHECK(e.beta_at(0, 2, 0)[0] == Q.from_int(1));
        CHECK(e.beta_at(1, 2, 1)[0] == Q.from_int(1));
        check_structural_invariants(e);
    }
    SECTION("non-abelian-ideal rejected") {
        auto h1 = heisenberg(Q, 1);
        std::vector<Vec<RationalField>> all;
        for (size_t i = 0; i < 3; ++i) all.push_back(h1.basis_vec(i));
        auto W = SubspaceBasis<RationalField>::from_vectors(Q, 3, all);
        CHECK_THROWS_AS(from_total(h1, W), std::invalid_argument);
    }
}

TEST_CASE("round trip build_extension -> from_total") {
    LYAlgebra<RationalField> ab2(Q, 2);
    auto r = trivial_rep(ab2, 1);
    auto c = h1_like_cocycle(ab2);
    auto e = build_extension(ab2, r, c);
    std::vector<Vec<RationalField>> vcols{e.incl.col(0)};
    auto V = SubspaceBasis<RationalField>::from_vectors(Q, 3, vcols);
    auto e2 = from_total(e.total, V);
    CHECK(e2.rep.rho == r.rho);
    CHECK(e2.cocycle == c);
}

TEST_CASE("central_extension") {
    SECTION("heisenberg: trivial rep on 2n-dim abelian base") {
        for (size_t n = 1; n <= 2; ++n) {
            auto e = central_extension(heisenberg(Q, n));
            CHECK(e.base.dim == 2 * n);
            CHECK(e.vdim == 1);
            CHECK(e.base.is_abelian());
        }
    }
    SECTION("generalized heisenberg") {
        auto e = central_extension(generalized_heisenberg(Q, 1));
        CHECK(e.base.dim == 3);
        CHECK(e.vdim == 1);
    }
    SECTION("abelian total: 0-dim base allowed") {
        LYAlgebra<RationalField> ab(Q, 2);
        auto e = central_extension(ab);
        CHECK(e.base.dim == 0);
        CHECK(e.vdim == 2);
    }
    SECTION("zero-dim algebra has trivial center") {
        LYAlgebra<RationalField> z(Q, 0);
        CHECK_THROWS_AS(central_extension(z), std::invalid_argument);
    }
}

TEST_CASE("section_shift_witness") {
    auto e = central_extension(heisenberg(Q, 1));
    SECTION("t = s gives lambda = 0") {
        auto lam = section_shift_witness(e, e.sect);
        CHECK(lam.is_zero());
    }
    SECTION("shifted section") {
        // t(e1bar) = e1 + e, t(e2bar) = e2
        Matrix<RationalField> t = e.sect;
        t(2, 0) = Q.from_int(1);
        auto lam = section_shift_witness(e, t);
        CHECK(lam(0, 0) == Q.from_int(-1));
        CHECK(lam(0, 1) == Q.from_int(0));
    }
    SECTION("random sections over F3 satisfy the identity") {
        PrimeField f3(3);
        auto e3 = central_extension(heisenberg(f3, 1));
        testutil::Rng rng(17);
        for (int it = 0; it < 30; ++it) {
            Matrix<PrimeField> t = e3.sect;
            for (size_t a = 0; a < 2; ++a)
                t(2, a) = testutil::random_scalar(f3, rng);
            CHECK_NOTHROW(section_shift_witness(e3, t));
        }
    }
    SECTION("non-section rejected") {
        Matrix<RationalField> t(Q, 3, 2);
        CHECK_THROWS_AS(section_shift_witness(e, t), std::invalid_argument);
    }
}

TEST_CASE("are_equivalent") {
    LYAlgebra<RationalField> ab2(Q, 2);
    auto r = trivial_rep(ab2, 1);
    auto c = h1_like_cocycle(ab2);
    auto e1 = build_extension(ab2, r, c);

    SECTION("an extension is equivalent to itself via the identity") {
        auto phi = are_equivalent(e1, e1);
        REQUIRE(phi);
        CHECK(phi->is_identity());
    }
    SECTION("shifting by a coboundary gives an equivalence") {
        testutil::Rng rng(23);
        auto lam0 = testutil::random_matrix(Q, rng, 1, 2);
        auto c2 = c + delta_zero(r, lam0);
        auto e2 = build_extension(ab2, r, c2);
        auto phi = are_equivalent(e1, e2);
        REQUIRE(phi);
        CHECK(is_morphism(e1.total, e2.total, *phi));
        CHECK((*phi * e1.incl) == e2.incl);          // phi restricted to V is id
        CHECK((e2.proj * *phi) == e1.proj);          // p' phi = p
    }
    SECTION("independent nonzero classes are inequivalent") {
        CochainPair<RationalField> c2(Q, 2, 1, 1);
        c2.odd.at({0, 1, 1}, 0) = Q.from_int(1);
        c2.odd.at({1, 0, 1}, 0) = Q.from_int(-1);
        REQUIRE(is_cocycle23(r, c2));
        auto e2 = build_extension(ab2, r, c2);
        CHECK_FALSE(are_equivalent(e1, e2));
    }
    SECTION("the central extension of h1 is literally this extension") {
        auto ea = central_extension(heisenberg(Q, 1));
        auto phi = are_equivalent(e1, ea);
        REQUIRE(phi);
        CHECK(phi->is_identity());
    }
    SECTION("rep mismatch is an error") {
        auto h1 = heisenberg(Q, 1);
        CochainPair<RationalField> z(Q, 3, 3, 1);
        auto e_adj = build_extension(h1, adjoint(h1), z);
        auto e_triv = build_extension(h1, trivial_rep(h1, 3), z);
        CHECK_THROWS_AS(are_equivalent(e_adj, e_triv), std::invalid_argument);
    }
}

TEST_CASE("induced rep is section independent") {
    PrimeField f3(3);
    auto e = central_extension(generalized_heisenberg(f3, 1));
    testutil::Rng rng(29);
    // rebuilding the rep through a different section leaves it unchanged
    for (int it = 0; it < 10; ++it) {
        Matrix<PrimeField> t = e.sect;
        for (size_t a = 0; a < e.base.dim; ++a)
            t(e.total.dim - 1, a) = testutil::random_scalar(f3, rng);
        REQUIRE((e.proj * t).is_identity());
        for (size_t a = 0; a < e.base.dim; ++a)
            for (size_t v = 0; v < e.vdim; ++v) {
                auto rcol = e.vproj.apply(e.total.bracket(t.col(a), e.incl.col(v)));
                for (size_t w = 0; w < e.vdim; ++w)
                    CHECK(rcol[w] == e.rep.rho[a](w, v));
            }
    }
}
