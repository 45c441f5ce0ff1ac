#include <catch2/catch_amalgamated.hpp>

#include "nichols/lie.hpp"
#include "support.hpp"

using namespace nichols;
using namespace testsupport;

namespace {

RestrictedLie sl2_restricted(uint32_t p) {
    auto field = std::make_shared<Field>(p, 1);
    RestrictedLie L(field, {"e", "h", "f"});
    const Field& F = *field;
    L.set_bracket(1, 0, sv_unit(0, F.from_int(2)));        // [h,e] = 2e
    L.set_bracket(1, 2, sv_unit(2, F.from_int(-2)));       // [h,f] = -2f
    L.set_bracket(0, 2, sv_unit(1, F.one()));              // [e,f] = h
    L.set_p_op(0, {});                                     // e^[p] = 0
    L.set_p_op(1, sv_unit(1, F.one()));                    // h^[p] = h
    L.set_p_op(2, {});                                     // f^[p] = 0
    return L;
}

} // namespace

TEST_CASE("abelian Lie algebras have vanishing s_i", "[lie]") {
    auto field = std::make_shared<Field>(3, 1);
    RestrictedLie L(field, {"a", "b"});
    L.set_p_op(0, {});
    L.set_p_op(1, {});
    for (uint32_t i = 1; i <= 2; ++i)
        for (uint32_t s = 0; s < 2; ++s)
            for (uint32_t t = 0; t < 2; ++t)
                CHECK(L.s_poly(i, sv_unit(s, field->one()), sv_unit(t, field->one())).empty());
    CHECK(verify_restricted(L).pass());
}

TEST_CASE("sl2 is a restricted Lie algebra", "[lie]") {
    for (uint32_t p : {3u, 5u}) {
        auto L = sl2_restricted(p);
        auto rep = verify_restricted(L);
        INFO(rep.witness);
        CHECK(rep.pass());
    }
}

TEST_CASE("corrupted p-operation fails the ad compatibility", "[lie]") {
    auto gl = build_l({{1}}, 1, std::make_shared<Field>(3, 1));
    RestrictedLie L = gl.lie;
    L.set_p_op(0, sv_unit(0, L.F().one())); // E^[3] = E, but ad(E)^3 = 0 != ad(E)
    auto rep = verify_restricted(L);
    CHECK(!rep.ad_compatible);
    CHECK(rep.witness.find("ad(") != std::string::npos);
}

TEST_CASE("matched pair from the Borel factorization of sl2", "[lie]") {
    auto s = sl2_restricted(3);
    auto mp = matched_pair_from_factorization(s, {0, 1}, {2}); // g = <e,h>, l = <f>
    // both actions are nontrivial
    bool lact_nonzero = false, ract_nonzero = false;
    for (const auto& row : mp.lact)
        for (const auto& v : row)
            lact_nonzero |= !v.empty();
    for (const auto& row : mp.ract)
        for (const auto& v : row)
            ract_nonzero |= !v.empty();
    CHECK(lact_nonzero);
    CHECK(ract_nonzero);
    auto rep = verify_matched_pair(mp);
    INFO(rep.witness);
    CHECK(rep.pass());
    // the double crossproduct reproduces sl2
    RestrictedLie d = double_cross(mp);
    REQUIRE(d.dim() == 3);
    auto repd = verify_restricted(d);
    INFO(repd.witness);
    CHECK(repd.pass());
    // basis order e,h,f is preserved by this factorization
    for (uint32_t i = 0; i < 3; ++i) {
        CHECK(d.p_op_basis(i) == s.p_op_basis(i));
        for (uint32_t j = 0; j < 3; ++j)
            CHECK(d.bracket_basis(i, j) == s.bracket_basis(i, j));
    }
}

TEST_CASE("trivial matched pair of abelian factors", "[lie]") {
    auto field = std::make_shared<Field>(3, 1);
    RestrictedLie a(field, {"a"}), b(field, {"b"});
    a.set_p_op(0, {});
    b.set_p_op(0, {});
    MatchedPairRL mp{a, b, {{SparseVec{}}}, {{SparseVec{}}}};
    CHECK(verify_matched_pair(mp).pass());
    RestrictedLie d = double_cross(mp);
    CHECK(verify_restricted(d).pass());
    for (uint32_t i = 1; i <= 2; ++i)
        CHECK(d.s_poly(i, sv_unit(0, field->one()), sv_unit(1, field->one())).empty());
}

TEST_CASE("build_l dimensions and relations", "[lie]") {
    auto field = std::make_shared<Field>(3, 1);
    auto g1 = build_l({{1}}, 1, field);
    CHECK(g1.lie.dim() == 3); // E, v0, v1
    CHECK(verify_restricted(g1.lie).pass());
    // [E, v0] = v1, [E, v1] = 0
    CHECK(g1.lie.bracket_basis(0, 1) == sv_unit(2, field->one()));
    CHECK(g1.lie.bracket_basis(0, 2).empty());

    auto g2 = build_l({{1, 1}}, 2, field); // t=2, theta=3, G_3 = (1,1)
    CHECK(g2.lie.dim() == 2 + 4);
    CHECK(verify_restricted(g2.lie).pass());

    // five ghost matrices including the paper's cases
    for (auto rows : std::vector<std::vector<std::vector<uint32_t>>>{
             {{1}}, {{2}}, {{1, 1}}, {{1, 0}}, {{2, 1}, {0, 1}}}) {
        uint32_t t = uint32_t(rows[0].size());
        auto gl = build_l(rows, t, field);
        auto rep = verify_restricted(gl.lie);
        INFO(rep.witness);
        CHECK(rep.pass());
        // (ad E_j)^{1+G_{jh}} (v_h) = 0 as matrix nilpotency on the module part
        for (uint32_t j = 0; j < t; ++j) {
            DenseMatrix adE = gl.lie.ad(sv_unit(j, field->one()));
            for (uint32_t r = 0; r < rows.size(); ++r) {
                std::vector<uint32_t> zero(t, 0);
                SparseVec vh = sv_unit(gl.v_index(t + r, zero), field->one());
                for (uint32_t k = 0; k < rows[r][j] + 1; ++k)
                    vh = adE.apply(*field, vh);
                CHECK(vh.empty());
            }
        }
    }
}

TEST_CASE("build_l agrees with the double crossproduct construction", "[lie]") {
    auto field = std::make_shared<Field>(3, 1);
    const Field& F = *field;
    auto gl = build_l({{1}}, 1, field);
    // g = V(1) = span{v0,v1} abelian, l = span{E}, E |> v_m = v_{m+1}
    RestrictedLie g(field, {"v0", "v1"}), l(field, {"E"});
    g.set_p_op(0, {});
    g.set_p_op(1, {});
    l.set_p_op(0, {});
    MatchedPairRL mp{g, l, {{sv_unit(1, F.one()), SparseVec{}}}, {{SparseVec{}, SparseVec{}}}};
    auto rep = verify_matched_pair(mp);
    INFO(rep.witness);
    CHECK(rep.pass());
    RestrictedLie d = double_cross(mp);
    CHECK(verify_restricted(d).pass());
    // double_cross basis: v0, v1, E; build_l basis: E, v0, v1
    CHECK(d.bracket_basis(2, 0) == sv_unit(1, F.one()));       // [E, v0] = v1
    CHECK(gl.lie.bracket_basis(0, 1) == sv_unit(2, F.one()));  // same bracket
    CHECK(d.bracket_basis(2, 1).empty());
    // restriction to each factor reproduces the factor exactly
    auto back = matched_pair_from_factorization(d, {0, 1}, {2});
    for (uint32_t i = 0; i < 2; ++i)
        for (uint32_t j = 0; j < 2; ++j)
            CHECK(back.g.bracket_basis(i, j) == g.bracket_basis(i, j));
    CHECK(back.lact[0][0] == mp.lact[0][0]);
    CHECK(back.ract[0][0] == mp.ract[0][0]);
}

TEST_CASE("restricted enveloping algebras", "[lie]") {
    auto field = std::make_shared<Field>(3, 1);
    // 1-dimensional abelian: k[E]/(E^3)
    RestrictedLie a(field, {"E"});
    a.set_p_op(0, {});
    auto ua = restricted_enveloping(a);
    CHECK(ua.alg->dim() == 3);
    auto repa = check_hopf(*ua.hopf, true);
    INFO(repa.witness);
    CHECK(repa.pass());

    // l = V(1) x| kE: dim u(l) = 27 = p^{G+2}
    auto gl = build_l({{1}}, 1, field);
    auto ul = restricted_enveloping(gl.lie);
    CHECK(ul.alg->dim() == 27);
    auto repl = check_hopf(*ul.hopf);
    INFO(repl.witness);
    CHECK(repl.pass());

    // general: dim u(l) = p^{t + sum |A_h|}
    auto g2 = build_l({{1, 1}}, 2, field);
    auto u2 = restricted_enveloping(g2.lie);
    CHECK(u2.alg->dim() == 729); // 3^6

    // sl2: dim 27, nonzero p-operation
    auto us = restricted_enveloping(sl2_restricted(3));
    CHECK(us.alg->dim() == 27);
    auto reps = check_hopf(*us.hopf);
    INFO(reps.witness);
    CHECK(reps.pass());
}

TEST_CASE("Jacobson sum formula against the enveloping algebra", "[lie]") {
    // independent oracle: (s+t)^p - s^p - t^p computed by the rewriting engine
    // in u(L) must equal sum s_i(s,t)/i computed by symbolic X-expansion
    auto field = std::make_shared<Field>(3, 1);
    const Field& F = *field;
    for (const RestrictedLie& L : {sl2_restricted(3), build_l({{1}}, 1, field).lie,
                                   build_l({{2}}, 1, field).lie}) {
        auto u = restricted_enveloping(L);
        auto lift = [&](const SparseVec& v) {
            SvBuilder b;
            for (const auto& [i, c] : v)
                b.add(u.alg->index_of(Word{uint8_t(i)}), c);
            return b.take(F);
        };
        auto cube = [&](const SparseVec& v) {
            SparseVec r = sv_unit(u.alg->unit_index(), F.one());
            for (uint32_t i = 0; i < F.p(); ++i)
                r = u.alg->mult(r, v);
            return r;
        };
        for (int trial = 0; trial < 200; ++trial) {
            SparseVec s = random_lie_vec(L, rng());
            SparseVec t = random_lie_vec(L, rng());
            SparseVec lhs = cube(lift(sv_add(F, s, t, F.one())));
            lhs = sv_add(F, lhs, cube(lift(s)), F.neg(F.one()));
            lhs = sv_add(F, lhs, cube(lift(t)), F.neg(F.one()));
            SparseVec rhs;
            for (uint32_t i = 1; i <= F.p() - 1; ++i)
                rhs = sv_add(F, rhs, lift(L.s_poly(i, s, t)), F.inv(F.from_int(i)));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("s_poly table for l = V(1) x| kE at p=3", "[lie]") {
    auto field = std::make_shared<Field>(3, 1);
    auto gl = build_l({{1}}, 1, field);
    const Field& F = *field;
    SparseVec E = sv_unit(0, F.one()), v0 = sv_unit(1, F.one());
    // ad(XE + v0)(E) = -v1, ad(XE + v0)(-v1) = 0: both coefficients vanish
    CHECK(gl.lie.s_poly(1, E, v0).empty());
    CHECK(gl.lie.s_poly(2, E, v0).empty());
    // swapped arguments: ad(Xv0 + E)(v0) = [E, v0] = v1 (coefficient of X^0),
    // then ad(Xv0 + E)(v1) = 0
    CHECK(gl.lie.s_poly(1, v0, E).empty());
    CHECK(gl.lie.s_poly(2, v0, E).empty());
}

TEST_CASE("iterated ad reproduces the v basis inside u(l)", "[lie]") {
    auto field = std::make_shared<Field>(3, 1);
    const Field& F = *field;
    auto gl = build_l({{2, 1}}, 2, field);
    auto u = restricted_enveloping(gl.lie);
    uint32_t h = 2; // the single point
    std::vector<uint32_t> zero{0, 0};
    SparseVec vh = sv_unit(u.alg->index_of(Word{uint8_t(gl.v_index(h, zero))}), F.one());
    for (const auto& m : box_lattice({2, 1})) {
        // (ad E_1)^{m_1} (ad E_2)^{m_2} (v_h) inside the associative algebra
        SparseVec cur = vh;
        for (uint32_t j = 2; j-- > 0;) {
            SparseVec Ej = sv_unit(u.alg->index_of(Word{uint8_t(gl.e_index(j))}), F.one());
            for (uint32_t k = 0; k < m[j]; ++k) {
                SparseVec left = u.alg->mult(Ej, cur);
                SparseVec right = u.alg->mult(cur, Ej);
                cur = sv_add(F, left, right, F.neg(F.one()));
            }
        }
        SparseVec expect =
            sv_unit(u.alg->index_of(Word{uint8_t(gl.v_index(h, m))}), F.one());
        CHECK(cur == expect);
    }
}

TEST_CASE("dim u(L) = p^dim L across the suite", "[lie]") {
    auto field = std::make_shared<Field>(3, 1);
    for (auto rows : std::vector<std::vector<std::vector<uint32_t>>>{{{1}}, {{1, 0}}, {{2}}}) {
        uint32_t t = uint32_t(rows[0].size());
        auto gl = build_l(rows, t, field);
        auto u = restricted_enveloping(gl.lie);
        uint64_t expect = 1;
        for (uint32_t i = 0; i < gl.lie.dim(); ++i)
            expect *= 3;
        CHECK(u.alg->dim() == expect);
    }
}
