#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace nichols;
using namespace testsupport;

TEST_CASE("single relation x^2", "[rewrite]") {
    PresentationBuilder b(3);
    auto x = uint8_t(b.add_generator("x"));
    b.add_relation(b.mono(Word{x, x}));
    auto pres = b.build();
    auto rws = complete(pres, 6);
    REQUIRE(rws.complete());
    std::vector<Word> basis;
    rws.normal_words(6, &basis);
    REQUIRE(basis.size() == 2); // {1, x}
    CHECK(basis[0] == Word{});
    CHECK(basis[1] == Word{x});
}

TEST_CASE("restricted Jordan plane completion", "[rewrite]") {
    auto pres = jordan_presentation(3);
    auto rws = complete(pres, 7);
    REQUIRE(rws.complete());
    FinBasisAlgebra alg(pres, rws);
    CHECK(alg.dim() == 9);
    // normal words are exactly x^a y^b, 0 <= a,b < 3
    for (const auto& w : alg.basis()) {
        bool seen_y = false;
        for (uint8_t c : w) {
            if (c == 1)
                seen_y = true;
            else
                CHECK(!seen_y); // no x after a y
        }
    }
    CHECK(alg.hilbert_series() == std::vector<uint64_t>{1, 2, 3, 2, 1});

    auto p5 = jordan_presentation(5);
    FinBasisAlgebra alg5(p5, complete(p5));
    CHECK(alg5.dim() == 25);
}

TEST_CASE("normal forms in the Jordan plane", "[rewrite]") {
    auto pres = jordan_presentation(3);
    auto rws = complete(pres, 7);
    const Field& F = pres.F();
    const Alphabet& A = pres.A();

    // y*x -> x*y + x^2  (since 1/2 = 2 in F_3)
    NcPoly yx = NcPoly::monomial(A, F, Word{1, 0}, F.one());
    NcPoly expect(A);
    expect.add_term(F, Word{0, 1}, F.one());
    expect.add_term(F, Word{0, 0}, F.one());
    CHECK(rws.reduce(yx) == expect);

    CHECK(rws.reduce(NcPoly(A)).is_zero());                           // 0 -> 0
    CHECK(rws.reduce_word(word_pow(0, 3)).is_zero());                 // x^3 -> 0
}

TEST_CASE("normal form is idempotent on random polynomials", "[rewrite]") {
    auto pres = jordan_presentation(3);
    auto rws = complete(pres, 7);
    for (int i = 0; i < 1000; ++i) {
        NcPoly p = random_poly(pres.A(), pres.F(), 5, 8);
        NcPoly n1 = rws.reduce(p);
        CHECK(rws.reduce(n1) == n1);
    }
}

TEST_CASE("multiplication", "[rewrite]") {
    auto pres = jordan_presentation(3);
    FinBasisAlgebra alg(pres, complete(pres, 7));
    const Field& F = pres.F();

    uint32_t x = alg.index_of(Word{0});
    uint32_t y = alg.index_of(Word{1});
    uint32_t xy = alg.index_of(Word{0, 1});
    uint32_t xx = alg.index_of(Word{0, 0});

    for (uint32_t w = 0; w < alg.dim(); ++w) {
        CHECK(alg.mult(alg.unit_index(), w) == sv_unit(w, F.one()));
        CHECK(alg.mult(w, alg.unit_index()) == sv_unit(w, F.one()));
    }
    CHECK(alg.mult(x, y) == sv_unit(xy, F.one()));
    SparseVec yx = alg.mult(y, x);
    CHECK(yx == SparseVec{{xx, F.one()}, {xy, F.one()}});
}

TEST_CASE("associativity on all triples (dim <= 100)", "[rewrite]") {
    auto pres = jordan_presentation(3);
    FinBasisAlgebra alg(pres, complete(pres, 7));
    for (uint32_t a = 0; a < alg.dim(); ++a)
        for (uint32_t b = 0; b < alg.dim(); ++b) {
            SparseVec ab = alg.mult(a, b);
            SparseVec ea = sv_unit(a, pres.F().one());
            for (uint32_t c = 0; c < alg.dim(); ++c) {
                SparseVec bc = alg.mult(b, c);
                CHECK(alg.mult(ab, sv_unit(c, pres.F().one())) == alg.mult(ea, bc));
            }
        }
}

TEST_CASE("Laestrygonian q=1 ghost=1 at p=3", "[rewrite]") {
    Field f3(3, 1);
    auto pres = laestrygonian_presentation(3, f3.one(), 1);
    auto rws = complete(pres, 13);
    REQUIRE(rws.complete());
    FinBasisAlgebra alg(pres, rws);
    CHECK(alg.dim() == 81);
    auto h = alg.hilbert_series();
    uint64_t total = 0;
    for (auto d : h)
        total += d;
    CHECK(total == 81);
}

TEST_CASE("larger Laestrygonian instances", "[rewrite][.slow]") {
    Field f3(3, 1);
    auto p32 = laestrygonian_presentation(3, f3.one(), 2);
    CHECK(FinBasisAlgebra(p32, complete(p32)).dim() == 243);

    Field f5(5, 1);
    auto p51 = laestrygonian_presentation(5, f5.one(), 1);
    CHECK(FinBasisAlgebra(p51, complete(p51)).dim() == 625);
}

TEST_CASE("monomial order is multiplicative", "[rewrite]") {
    auto pres = jordan_presentation(3);
    const Alphabet& A = pres.A();
    int checked = 0;
    for (int i = 0; i < 3000 && checked < 1000; ++i) {
        Word u = random_word(A, 6), v = random_word(A, 6), w = random_word(A, 4);
        if (!A.less(u, v))
            continue;
        ++checked;
        CHECK(A.less(w + u, w + v));
        CHECK(A.less(u + w, v + w));
    }
    CHECK(checked == 1000);
}

TEST_CASE("inconclusive on free algebra", "[rewrite]") {
    PresentationBuilder b(3);
    b.add_generator("x");
    b.add_generator("y");
    NcPoly r = b.poly();
    r.add_term(b.F(), Word{0, 1}, b.F().one());
    r.add_term(b.F(), Word{1, 0}, b.F().neg(b.F().one()));
    b.add_relation(r); // commutative polynomial ring: infinite-dimensional
    auto rws = complete(b.build(), 8);
    CHECK(!rws.complete());
    CHECK(rws.status_detail().find("raise bound") != std::string::npos);
}

TEST_CASE("expected dimension mismatch is rejected", "[rewrite]") {
    PresentationBuilder b(3);
    auto x = uint8_t(b.add_generator("x"));
    b.add_relation(b.mono(Word{x, x}));
    auto pres = b.build(5); // wrong on purpose
    auto rws = complete(pres, 6);
    CHECK_THROWS_AS(FinBasisAlgebra(pres, rws), FieldError);
}

TEST_CASE("relation homogeneity honours the declared grading", "[rewrite]") {
    // yx - xy + x^2 is homogeneous because deg y = deg x in the group grading
    auto pres = jordan_presentation(3);
    CHECK(pres.relations.size() == 3);
    // a genuinely inhomogeneous relation is rejected
    PresentationBuilder b(3);
    auto x = uint8_t(b.add_generator("x", 1, {1}));
    b.add_generator("y", 1, {2});
    NcPoly r = b.poly();
    r.add_term(b.F(), Word{x}, b.F().one());
    r.add_term(b.F(), Word{x, x}, b.F().one());
    b.add_relation(r);
    CHECK_THROWS_AS(b.build(std::nullopt, 1, {}), FieldError);
}
