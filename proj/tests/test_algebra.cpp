#include <catch2/catch_amalgamated.hpp>

#include "lyat/algebra.hpp"
#include "testutil.hpp"

using namespace lyat;

namespace {
const RationalField Q;

Vec<RationalField> ev(const LYAlgebra<RationalField>& L, size_t i) { return L.basis_vec(i); }
} // namespace

TEST_CASE("heisenberg structure") {
    auto h1 = heisenberg(Q, 1);
    REQUIRE(h1.dim == 3);
    // [e1, e2] = e, {e1, e2, e1} = e
    CHECK(h1.bracket(ev(h1, 0), ev(h1, 1)) == ev(h1, 2));
    CHECK(h1.triple(ev(h1, 0), ev(h1, 1), ev(h1, 0)) == ev(h1, 2));
    CHECK(h1.bracket(ev(h1, 1), ev(h1, 0)) ==
          Vec<RationalField>{Q.from_int(0), Q.from_int(0), Q.from_int(-1)});

    auto h2 = heisenberg(Q, 2);
    REQUIRE(h2.dim == 5);
    CHECK(h2.bracket(ev(h2, 0), ev(h2, 2)) == ev(h2, 4));
    CHECK(h2.bracket(ev(h2, 1), ev(h2, 3)) == ev(h2, 4));
    CHECK(h2.triple(ev(h2, 0), ev(h2, 2), ev(h2, 0)) == ev(h2, 4));
    CHECK(h2.triple(ev(h2, 1), ev(h2, 3), ev(h2, 1)) == ev(h2, 4));

    CHECK_THROWS_AS(heisenberg(Q, 0), std::invalid_argument);
}

TEST_CASE("generalized heisenberg structure") {
    auto g1 = generalized_heisenberg(Q, 1);
    REQUIRE(g1.dim == 4);
    CHECK(g1.bracket(ev(g1, 0), ev(g1, 2)) == ev(g1, 3));
    CHECK(g1.triple(ev(g1, 0), ev(g1, 2), ev(g1, 0)) == ev(g1, 3));
    CHECK(g1.triple(ev(g1, 1), ev(g1, 2), ev(g1, 1)) == ev(g1, 3));
    CHECK_THROWS_AS(generalized_heisenberg(Q, 0), std::invalid_argument);
}

TEST_CASE("axiom certification of builtin families") {
    for (size_t n = 1; n <= 2; ++n) {
        CHECK(check_axioms(heisenberg(Q, n)).all_pass());
        CHECK(check_axioms(generalized_heisenberg(Q, n)).all_pass());
    }
    PrimeField f3(3);
    CHECK(check_axioms(heisenberg(f3, 2)).all_pass());
    CHECK(check_axioms(generalized_heisenberg(f3, 1)).all_pass());
}

TEST_CASE("perturbed table fails with witness") {
    auto h1 = heisenberg(Q, 1);
    // overwrite the single entry {e1,e2,e1}, binary kept; the broken skew
    // image makes the LY3 cyclic sum nonzero
    h1.ter(0, 1, 0) = ev(h1, 0);
    auto rep = check_axioms(h1);
    CHECK(rep.ly1.pass);
    REQUIRE_FALSE(rep.ly3.pass);
    REQUIRE(rep.ly3.witness.size() == 3);
    // re-evaluating LY3 at the witness reproduces the nonzero residual
    auto [a, b, c] = std::tuple{rep.ly3.witness[0], rep.ly3.witness[1], rep.ly3.witness[2]};
    Vec<RationalField> s = h1.bracket_ve(h1.bin(a, b), c);
    add_scaled<RationalField>(s, Q.one(), h1.ter(a, b, c));
    add_scaled<RationalField>(s, Q.one(), h1.bracket_ve(h1.bin(b, c), a));
    add_scaled<RationalField>(s, Q.one(), h1.ter(b, c, a));
    add_scaled<RationalField>(s, Q.one(), h1.bracket_ve(h1.bin(c, a), b));
    add_scaled<RationalField>(s, Q.one(), h1.ter(c, a, b));
    REQUIRE_FALSE(is_zero_vec<RationalField>(s));
    for (size_t t = 0; t < s.size(); ++t)
        CHECK(RationalField::to_string(s[t]) == rep.ly3.residual[t]);
}

TEST_CASE("bracket_eval dispatch and skewness") {
    auto h1 = heisenberg(Q, 1);
    testutil::Rng rng(7);
    for (int it = 0; it < 20; ++it) {
        auto x = testutil::random_vec(Q, rng, 3);
        auto y = testutil::random_vec(Q, rng, 3);
        auto z = testutil::random_vec(Q, rng, 3);
        auto xy = bracket_eval(h1, x, y);
        auto yx = bracket_eval(h1, y, x);
        for (size_t t = 0; t < 3; ++t) CHECK(xy[t] == -yx[t]);
        auto xyz = bracket_eval(h1, x, y, z);
        auto yxz = bracket_eval(h1, y, x, z);
        for (size_t t = 0; t < 3; ++t) CHECK(xyz[t] == -yxz[t]);
        CHECK(is_zero_vec<RationalField>(bracket_eval(h1, x, x)));
    }
}

TEST_CASE("center of builtin families") {
    for (size_t n = 1; n <= 2; ++n) {
        auto h = heisenberg(Q, n);
        auto z = center(h);
        REQUIRE(z.dim() == 1);
        CHECK(z.contains(ev(h, 2 * n)));
        auto g = generalized_heisenberg(Q, n);
        auto zg = center(g);
        REQUIRE(zg.dim() == 1);
        CHECK(zg.contains(ev(g, 2 * n + 1)));
    }
    LYAlgebra<RationalField> ab(Q, 3);
    CHECK(center(ab).dim() == 3);
}

TEST_CASE("ideal tests") {
    auto h1 = heisenberg(Q, 1);
    auto z = center(h1);
    auto rep = ideal_tests(h1, z);
    CHECK(rep.is_ideal);
    CHECK(rep.is_abelian_ideal);

    auto all = SubspaceBasis<RationalField>::from_vectors(
        Q, 3, {ev(h1, 0), ev(h1, 1), ev(h1, 2)});
    auto rep2 = ideal_tests(h1, all);
    CHECK(rep2.is_ideal);
    CHECK_FALSE(rep2.is_abelian_ideal);

    auto span_e1 = SubspaceBasis<RationalField>::from_vectors(Q, 3, {ev(h1, 0)});
    CHECK_FALSE(ideal_tests(h1, span_e1).is_ideal);
}

TEST_CASE("quotient") {
    auto h1 = heisenberg(Q, 1);
    SECTION("by center: 2-dim abelian") {
        auto q = quotient(h1, center(h1));
        CHECK(q.algebra.dim == 2);
        CHECK(q.algebra.is_abelian());
        CHECK(check_axioms(q.algebra).all_pass());
        CHECK((q.projection * q.inclusion).is_identity());
    }
    SECTION("by itself: zero algebra") {
        auto all = SubspaceBasis<RationalField>::from_vectors(
            Q, 3, {ev(h1, 0), ev(h1, 1), ev(h1, 2)});
        CHECK(quotient(h1, all).algebra.dim == 0);
    }
    SECTION("by zero: unchanged") {
        SubspaceBasis<RationalField> none(Q, 3);
        auto q = quotient(h1, none);
        CHECK(q.algebra.dim == 3);
        CHECK(q.algebra.binary == h1.binary);
        CHECK(q.algebra.ternary == h1.ternary);
    }
    SECTION("non-ideal rejected") {
        auto span_e1 = SubspaceBasis<RationalField>::from_vectors(Q, 3, {ev(h1, 0)});
        CHECK_THROWS_AS(quotient(h1, span_e1), std::invalid_argument);
    }
}

TEST_CASE("lower central series") {
    SECTION("heisenberg: index 2") {
        for (size_t n = 1; n <= 3; ++n) {
            auto lcs = lower_central_series(heisenberg(Q, n));
            REQUIRE(lcs.nilpotency_index);
            CHECK(*lcs.nilpotency_index == 2);
            REQUIRE(lcs.terms.size() == 3);
            CHECK(lcs.terms[1].dim() == 1);
        }
        auto lcs = lower_central_series(generalized_heisenberg(Q, 2));
        REQUIRE(lcs.nilpotency_index);
        CHECK(*lcs.nilpotency_index == 2);
    }
    SECTION("abelian: index 1") {
        LYAlgebra<RationalField> ab(Q, 2);
        auto lcs = lower_central_series(ab);
        REQUIRE(lcs.nilpotency_index);
        CHECK(*lcs.nilpotency_index == 1);
        CHECK(lcs.terms.size() == 2);
    }
    SECTION("simple Lie algebra: stabilizes, no index") {
        // so(3): [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2
        std::vector<std::vector<Vec<RationalField>>> t(3, std::vector<Vec<RationalField>>(3, zero_vec(Q, 3)));
        auto set = [&](size_t i, size_t j, size_t k, long s) {
            t[i][j][k] = Q.from_int(s);
            t[j][i][k] = Q.from_int(-s);
        };
        set(0, 1, 2, 1); set(1, 2, 0, 1); set(2, 0, 1, 1);
        auto so3 = from_classical(Q, ClassicalKind::lie, t);
        auto lcs = lower_central_series(so3);
        CHECK_FALSE(lcs.nilpotency_index);
        CHECK(lcs.terms.back().dim() == 3);
    }
}

TEST_CASE("from_classical") {
    SECTION("cross product Lie algebra") {
        std::vector<std::vector<Vec<RationalField>>> t(3, std::vector<Vec<RationalField>>(3, zero_vec(Q, 3)));
        auto set = [&](size_t i, size_t j, size_t k, long s) {
            t[i][j][k] = Q.from_int(s);
            t[j][i][k] = Q.from_int(-s);
        };
        set(0, 1, 2, 1); set(1, 2, 0, 1); set(2, 0, 1, 1);
        auto L = from_classical(Q, ClassicalKind::lie, t);
        CHECK(check_axioms(L).all_pass());
        // {a,b,c} = [[a,b],c]
        auto lhs = L.triple(L.basis_vec(0), L.basis_vec(1), L.basis_vec(1));
        auto rhs = L.bracket(L.bracket(L.basis_vec(0), L.basis_vec(1)), L.basis_vec(1));
        CHECK(lhs == rhs);
    }
    SECTION("non-skew Leibniz table x.x = y gives abelian") {
        std::vector<std::vector<Vec<RationalField>>> t(2, std::vector<Vec<RationalField>>(2, zero_vec(Q, 2)));
        t[0][0][1] = Q.from_int(1);  // x.x = y
        auto L = from_classical(Q, ClassicalKind::leibniz, t);
        CHECK(L.is_abelian());
    }
    SECTION("abelian input of any kind") {
        std::vector<std::vector<Vec<RationalField>>> t(2, std::vector<Vec<RationalField>>(2, zero_vec(Q, 2)));
        CHECK(from_classical(Q, ClassicalKind::lie, t).is_abelian());
        CHECK(from_classical(Q, ClassicalKind::malcev, t).is_abelian());
    }
    SECTION("malcev includes the <<x,y>,z> term") {
        // On a Lie algebra the Malcev construction gives {x,y,z} =
        // [x,[y,z]] - [y,[x,z]] + [[x,y],z] and the result must satisfy
        // the axioms.
        std::vector<std::vector<Vec<RationalField>>> t(3, std::vector<Vec<RationalField>>(3, zero_vec(Q, 3)));
        auto set = [&](size_t i, size_t j, size_t k, long s) {
            t[i][j][k] = Q.from_int(s);
            t[j][i][k] = Q.from_int(-s);
        };
        set(0, 1, 2, 1); set(1, 2, 0, 1); set(2, 0, 1, 1);
        auto L = from_classical(Q, ClassicalKind::malcev, t);
        CHECK(check_axioms(L).all_pass());
        auto x = L.basis_vec(0), y = L.basis_vec(1), z = L.basis_vec(2);
        auto expect = L.bracket(x, L.bracket(y, z));
        auto t2 = L.bracket(y, L.bracket(x, z));
        auto t3 = L.bracket(L.bracket(x, y), z);
        for (size_t s = 0; s < 3; ++s) expect[s] = expect[s] - t2[s] + t3[s];
        CHECK(L.triple(x, y, z) == expect);
    }
    SECTION("reductive split of so(3)") {
        // G = span{e1}, H = span{e2,e3}: [G,G]=0 in G, [e1,e2]=e3, [e1,e3]=-e2 in H
        std::vector<std::vector<Vec<RationalField>>> t(3, std::vector<Vec<RationalField>>(3, zero_vec(Q, 3)));
        auto set = [&](size_t i, size_t j, size_t k, long s) {
            t[i][j][k] = Q.from_int(s);
            t[j][i][k] = Q.from_int(-s);
        };
        set(0, 1, 2, 1); set(0, 2, 1, -1); set(1, 2, 0, 1);
        auto H = from_classical(Q, ClassicalKind::reductive, t, 1);
        CHECK(H.dim == 2);
        CHECK(check_axioms(H).all_pass());
        // [e2,e3] = e1 projects to zero in H; {e2,e3,e2} = [pi_G[e2,e3],e2] = [e1,e2] = e3
        CHECK(is_zero_vec<RationalField>(H.bracket(H.basis_vec(0), H.basis_vec(1))));
        CHECK(H.triple(H.basis_vec(0), H.basis_vec(1), H.basis_vec(0)) == H.basis_vec(1));
    }
    SECTION("reductive condition violated") {
        std::vector<std::vector<Vec<RationalField>>> t(2, std::vector<Vec<RationalField>>(2, zero_vec(Q, 2)));
        t[0][1][0] = Q.from_int(1);  // [G,H] lands in G
        t[1][0][0] = Q.from_int(-1);
        CHECK_THROWS_AS(from_classical(Q, ClassicalKind::reductive, t, 1),
                        std::invalid_argument);
    }
}

TEST_CASE("morphisms") {
    auto h1 = heisenberg(Q, 1);
    CHECK(is_morphism(h1, h1, Matrix<RationalField>::identity(Q, 3)));
    CHECK(is_automorphism(h1, Matrix<RationalField>::identity(Q, 3)));

    // gamma(e1)=e1, gamma(e2)=k e2, gamma(e)=k e is an automorphism
    Matrix<RationalField> g(Q, 3, 3);
    g(0, 0) = Q.from_int(1); g(1, 1) = Q.from_int(3); g(2, 2) = Q.from_int(3);
    CHECK(is_automorphism(h1, g));

    // swapping e1 and e2 negates the bracket: not a morphism
    Matrix<RationalField> sw(Q, 3, 3);
    sw(0, 1) = Q.from_int(1); sw(1, 0) = Q.from_int(1); sw(2, 2) = Q.from_int(1);
    CHECK_FALSE(is_morphism(h1, h1, sw));
}

TEST_CASE("embedding of heisenberg into generalized heisenberg") {
    for (size_t n = 1; n <= 3; ++n) {
        auto h = heisenberg(Q, n);
        auto g = generalized_heisenberg(Q, n);
        Matrix<RationalField> phi(Q, g.dim, h.dim);
        for (size_t i = 0; i < n; ++i) phi(i, i) = Q.from_int(1);
        for (size_t i = n; i < 2 * n; ++i) phi(i + 1, i) = Q.from_int(1);
        phi(2 * n + 1, 2 * n) = Q.from_int(1);
        CHECK(is_morphism(h, g, phi));
    }
}

TEST_CASE("morphism composition closure") {
    auto h1 = heisenberg(Q, 1);
    Matrix<RationalField> g1(Q, 3, 3), g2(Q, 3, 3);
    g1(0, 0) = Q.from_int(1); g1(1, 1) = Q.from_int(2); g1(2, 2) = Q.from_int(2);
    g2(0, 0) = Q.from_int(1); g2(0, 2) = Q.from_int(0); g2(1, 1) = Q.from_int(1);
    g2(2, 2) = Q.from_int(1); g2(2, 0) = Q.from_int(5);
    REQUIRE(is_morphism(h1, h1, g1));
    REQUIRE(is_morphism(h1, h1, g2));
    CHECK(is_morphism(h1, h1, g1 * g2));
}

TEST_CASE("duplicate conflicting entries are rejected") {
    LYAlgebra<RationalField> L(Q, 3);
    L.set_binary(0, 1, ev(L, 2));
    CHECK_THROWS_AS(L.set_binary(0, 1, ev(L, 0)), std::invalid_argument);
    CHECK_THROWS_AS(L.set_binary(1, 0, ev(L, 2)), std::invalid_argument);
    L.set_ternary(0, 1, 0, ev(L, 2));
    CHECK_THROWS_AS(L.set_ternary(1, 0, 0, ev(L, 2)), std::invalid_argument);
}
