#pragma once

#include <random>

#include "nichols/dual.hpp"

// Hand-written fixture presentations used as oracles across the test suite.
// These are spelled out literally so they stay independent of the general
// presentation builders they cross-check.

namespace testsupport {

using namespace nichols;

// restricted Jordan plane: k<x,y> / (yx - xy + (1/2)x^2, x^p, y^p), dim p^2
inline Presentation jordan_presentation(uint32_t p) {
    PresentationBuilder b(p);
    auto x = uint8_t(b.add_generator("x", 1, {1}));
    auto y = uint8_t(b.add_generator("y", 1, {1}));
    const Field& F = b.F();
    NcPoly r = b.poly();
    r.add_term(F, Word{y, x}, F.one());
    r.add_term(F, Word{x, y}, F.neg(F.one()));
    r.add_term(F, Word{x, x}, F.half());
    b.add_relation(r);
    b.add_relation(b.mono(word_pow(x, p)));
    b.add_relation(b.mono(word_pow(y, p)));
    return b.build(uint64_t(p) * p, 1, {});
}

// first Laestrygonian algebra, literal relations; q given in the field of the builder
inline Presentation laestrygonian_presentation(uint32_t p, Fq q, uint32_t ghost,
                                               uint32_t m = 1,
                                               std::optional<std::vector<uint32_t>> modulus =
                                                   std::nullopt) {
    PresentationBuilder b(p, m, std::move(modulus));
    const Field& F = b.F();
    auto x1 = uint8_t(b.add_generator("x1", 1, {1, 0}));
    auto y1 = uint8_t(b.add_generator("y1", 1, {1, 0}));
    auto x2 = uint8_t(b.add_generator("x2", 1, {0, 1}));

    NcPoly jordan = b.poly();
    jordan.add_term(F, Word{y1, x1}, F.one());
    jordan.add_term(F, Word{x1, y1}, F.neg(F.one()));
    jordan.add_term(F, Word{x1, x1}, F.half());
    b.add_relation(jordan);
    b.add_relation(b.mono(word_pow(x1, p)));
    b.add_relation(b.mono(word_pow(y1, p)));

    // z_0 = x2, z_{n+1} = y1 z_n - q z_n y1
    std::vector<NcPoly> z;
    z.push_back(b.mono(Word{x2}));
    for (uint32_t n = 0; n < ghost + 1; ++n) {
        NcPoly zn = z.back().framed(F, Word{y1}, Word{});
        zn.add(F, z.back().framed(F, Word{}, Word{y1}), F.neg(q));
        z.push_back(zn);
    }

    // x1 x2 = q x2 x1
    NcPoly qc = b.poly();
    qc.add_term(F, Word{x1, x2}, F.one());
    qc.add_term(F, Word{x2, x1}, F.neg(q));
    b.add_relation(qc);

    b.add_relation(z[ghost + 1]); // z_{1+G} = 0
    for (uint32_t t = 0; t < ghost; ++t) {
        NcPoly r = z[t].times(F, z[t + 1]);
        r.add(F, z[t + 1].times(F, z[t]), F.neg(F.inv(q)));
        b.add_relation(r); // z_t z_{t+1} = q^{-1} z_{t+1} z_t
    }
    for (uint32_t t = 0; t <= ghost; ++t) {
        NcPoly pw = b.mono(Word{});
        for (uint32_t k = 0; k < p; ++k)
            pw = pw.times(F, z[t]);
        b.add_relation(pw); // z_t^p = 0
    }

    uint64_t dim = 1;
    for (uint32_t i = 0; i < ghost + 3; ++i)
        dim *= p;
    auto pres = b.build(dim, 2, {});
    pres.pbw_generators = ghost + 3;
    // top normal word length: (p-1) * sum of PBW generator word lengths
    pres.suggested_bound = (p - 1) * (2 + (ghost + 1) * (ghost + 2) / 2) + 2;
    return pres;
}

struct HopfFixture {
    AlgPtr alg;
    std::shared_ptr<PresentedHopf> hopf;
};

// group algebra k[Z/f]
inline HopfFixture group_algebra_zf(uint32_t p, uint32_t f) {
    PresentationBuilder b(p);
    auto g = uint8_t(b.add_generator("g", 0, {1}));
    NcPoly r = b.mono(word_pow(g, f));
    r.add_term(b.F(), Word{}, b.F().neg(b.F().one()));
    b.add_relation(r);
    auto pres = b.build(f, 1, {f});
    auto alg = std::make_shared<FinBasisAlgebra>(pres, complete(pres, f + 2),
                                                 std::vector<uint32_t>{g});
    std::vector<TensorElement> dg{grouplike_delta(*alg, g)};
    std::vector<Fq> eps{alg->F().one()};
    std::vector<SparseVec> sg{sv_unit(alg->index_of(word_pow(g, f - 1)), alg->F().one())};
    auto h = std::make_shared<PresentedHopf>(alg, dg, eps, sg, std::vector<uint32_t>{g});
    return {alg, h};
}

// k[E]/(E^p) with E primitive (restricted enveloping algebra of the 1-dim
// abelian restricted Lie algebra with zero p-operation)
inline HopfFixture primitive_truncated(uint32_t p) {
    PresentationBuilder b(p);
    auto e = uint8_t(b.add_generator("E", 1, {1}));
    b.add_relation(b.mono(word_pow(e, p)));
    auto pres = b.build(p, 0, {});
    auto alg = std::make_shared<FinBasisAlgebra>(pres, complete(pres, p + 2));
    std::vector<TensorElement> dg{primitive_delta(*alg, e)};
    std::vector<Fq> eps{alg->F().zero()};
    std::vector<SparseVec> sg{sv_unit(alg->index_of(Word{e}), alg->F().neg(alg->F().one()))};
    auto h = std::make_shared<PresentedHopf>(alg, dg, eps, sg);
    return {alg, h};
}

// hand-written minimal bosonization of the restricted Jordan plane over Z/p:
// generators g, x, y with gx = xg, gy = yg + xg, the Jordan relations, g^p = 1
inline HopfFixture jordan_bosonization_hand(uint32_t p) {
    PresentationBuilder b(p);
    const Field& F = b.F();
    auto g = uint8_t(b.add_generator("g", 0, {1}));
    auto x = uint8_t(b.add_generator("x", 1, {1}));
    auto y = uint8_t(b.add_generator("y", 1, {1}));

    NcPoly gp = b.mono(word_pow(g, p));
    gp.add_term(F, Word{}, F.neg(F.one()));
    b.add_relation(gp);

    NcPoly gx = b.mono(Word{g, x});
    gx.add_term(F, Word{x, g}, F.neg(F.one()));
    b.add_relation(gx);

    NcPoly gy = b.mono(Word{g, y});
    gy.add_term(F, Word{y, g}, F.neg(F.one()));
    gy.add_term(F, Word{x, g}, F.neg(F.one()));
    b.add_relation(gy);

    NcPoly jordan = b.poly();
    jordan.add_term(F, Word{y, x}, F.one());
    jordan.add_term(F, Word{x, y}, F.neg(F.one()));
    jordan.add_term(F, Word{x, x}, F.half());
    b.add_relation(jordan);
    b.add_relation(b.mono(word_pow(x, p)));
    b.add_relation(b.mono(word_pow(y, p)));

    auto pres = b.build(uint64_t(p) * p * p, 1, {p});
    auto alg = std::make_shared<FinBasisAlgebra>(pres, complete(pres, 4 * p),
                                                 std::vector<uint32_t>{g});
    std::vector<TensorElement> dg(3);
    dg[g] = grouplike_delta(*alg, g);
    dg[x] = skew_primitive_delta(*alg, x, g);
    dg[y] = skew_primitive_delta(*alg, y, g);
    std::vector<Fq> eps{F.one(), F.zero(), F.zero()};
    Word ginv = word_pow(g, p - 1);
    std::vector<SparseVec> sg(3);
    sg[g] = sv_unit(alg->index_of(ginv), F.one());
    Word gx_w = ginv;
    gx_w.push_back(x);
    Word gy_w = ginv;
    gy_w.push_back(y);
    sg[x] = sv_unit(alg->index_of(gx_w), F.neg(F.one()));
    sg[y] = sv_unit(alg->index_of(gy_w), F.neg(F.one()));
    auto h = std::make_shared<PresentedHopf>(alg, dg, eps, sg, std::vector<uint32_t>{g});
    return {alg, h};
}

inline std::mt19937& rng() {
    static std::mt19937 gen(0x5eed);
    return gen;
}

inline Word random_word(const Alphabet& A, size_t maxlen) {
    std::uniform_int_distribution<size_t> len(0, maxlen);
    std::uniform_int_distribution<uint32_t> pick(0, uint32_t(A.size() - 1));
    Word w;
    size_t l = len(rng());
    for (size_t i = 0; i < l; ++i)
        w.push_back(uint8_t(pick(rng())));
    return w;
}

inline NcPoly random_poly(const Alphabet& A, const Field& F, size_t terms, size_t maxlen) {
    NcPoly p(A);
    std::uniform_int_distribution<uint64_t> coef(0, F.order() - 1);
    for (size_t i = 0; i < terms; ++i)
        p.add_term(F, random_word(A, maxlen), F.element(coef(rng())));
    return p;
}

} // namespace testsupport
