#pragma once

#include "nichols/algebra.hpp"
#include "nichols/hopf.hpp"
#include "nichols/realization.hpp"

// Presentations of the Nichols algebras B(V(q,a)) and their bosonizations
// with (Z/f)^theta.

namespace nichols {

// Alphabet layout shared by the Nichols algebra and its bosonization:
// optional group generators first (degree 0), then x_1, y_1, ..., x_t, y_t,
// then the point generators x_{t+1}..x_theta.
struct NicholsAlphabet {
    uint32_t t = 0, theta = 0, groups = 0; // groups = 0 or theta
    uint8_t group_gen(uint32_t k) const { return uint8_t(k); }
    uint8_t x(uint32_t comp) const {
        return uint8_t(groups + (comp < t ? 2 * comp : t + comp));
    }
    uint8_t y(uint32_t j) const { return uint8_t(groups + 2 * j + 1); }
    uint32_t size() const { return groups + 2 * t + (theta - t); }
};

namespace detail {

inline std::vector<int32_t> unit_multidegree(uint32_t theta, uint32_t k) {
    std::vector<int32_t> e(theta, 0);
    e[k] = 1;
    return e;
}

} // namespace detail

// iterated q-commutator expansion of the generator sch_{h,n}: peeling the
// lowest nonzero index j gives sch = y_j sch~ - q sch~ y_j with
// q = q_{jh} prod_{i >= j} q_{ji}^{n_i}
inline NcPoly sch_expand(const PaperData& d, const Alphabet& A, const NicholsAlphabet& L,
                         uint32_t h, std::vector<uint32_t> n) {
    const Field& F = d.F();
    uint32_t j = 0;
    bool all_zero = true;
    for (uint32_t i = 0; i < d.t; ++i)
        if (n[i] != 0) {
            j = i;
            all_zero = false;
            break;
        }
    if (all_zero)
        return NcPoly::monomial(A, F, Word{L.x(h)}, F.one());
    Fq q = d.qq(j, h);
    for (uint32_t i = j; i < d.t; ++i)
        q = F.mul(q, F.pow(d.qq(j, i), n[i]));
    std::vector<uint32_t> ntilde = n;
    ntilde[j] -= 1;
    NcPoly inner = sch_expand(d, A, L, h, std::move(ntilde));
    NcPoly out = inner.framed(F, Word{L.y(j)}, Word{});
    out.add(F, inner.framed(F, Word{}, Word{L.y(j)}), F.neg(q));
    return out;
}

// scalar p_{h,l;m,n} of the commutation rule between sch generators
inline Fq p_scalar(const PaperData& d, uint32_t h, const std::vector<uint32_t>& m, uint32_t l,
                   const std::vector<uint32_t>& n) {
    const Field& F = d.F();
    Fq v = d.qq(h, l);
    for (uint32_t k = 0; k < d.t; ++k)
        for (uint32_t j = 0; j < d.t; ++j)
            v = F.mul(v, F.pow(d.qq(k, j), uint64_t(m[k]) * n[j]));
    for (uint32_t k = 0; k < d.t; ++k)
        v = F.mul(v, F.pow(d.qq(k, l), m[k]));
    for (uint32_t j = 0; j < d.t; ++j)
        v = F.mul(v, F.pow(d.qq(h, j), n[j]));
    return v;
}

struct PbwGenerator {
    uint32_t point = 0;             // component index, or UINT32_MAX for block letters
    std::vector<uint32_t> box;      // lattice vector for sch generators
    NcPoly poly;
    uint32_t word_length = 1;
    std::string name;
};

// ordered PBW generator list: x_1, y_1, ..., x_t, y_t, then sch_{h,n} for
// points h ascending and n lexicographic
inline std::vector<PbwGenerator> pbw_generators(const PaperData& d, const Alphabet& A,
                                                const NicholsAlphabet& L) {
    const Field& F = d.F();
    std::vector<PbwGenerator> out;
    for (uint32_t j = 0; j < d.t; ++j) {
        out.push_back({UINT32_MAX, {}, NcPoly::monomial(A, F, Word{L.x(j)}, F.one()), 1,
                       "x" + std::to_string(j + 1)});
        out.push_back({UINT32_MAX, {}, NcPoly::monomial(A, F, Word{L.y(j)}, F.one()), 1,
                       "y" + std::to_string(j + 1)});
    }
    for (uint32_t h = d.t; h < d.theta; ++h) {
        for (const auto& n : d.box(h)) {
            uint32_t len = 1;
            for (uint32_t c : n)
                len += c;
            std::string nm = "sch" + std::to_string(h + 1) + "_";
            for (uint32_t c : n)
                nm += std::to_string(c);
            out.push_back({h, n, sch_expand(d, A, L, h, n), len, std::move(nm)});
        }
    }
    return out;
}

// defining relations of B(V(q,a)); the returned presentation carries the
// Z^theta multidegree grading (x_i, y_j both graded by their component)
inline Presentation nichols_presentation(const PaperData& d) {
    const Field& F = d.F();
    NicholsAlphabet L{d.t, d.theta, 0};
    PresentationBuilder b(d.field);
    for (uint32_t j = 0; j < d.t; ++j) {
        b.add_generator("x" + std::to_string(j + 1), 1, detail::unit_multidegree(d.theta, j));
        b.add_generator("y" + std::to_string(j + 1), 1, detail::unit_multidegree(d.theta, j));
    }
    for (uint32_t h = d.t; h < d.theta; ++h)
        b.add_generator("x" + std::to_string(h + 1), 1, detail::unit_multidegree(d.theta, h));
    const Alphabet& A = b.A();

    const uint32_t p = F.p();
    // block relations: x_j^p, y_j^p, y_j x_j - x_j y_j + (1/2) x_j^2
    for (uint32_t j = 0; j < d.t; ++j) {
        b.add_relation(b.mono(word_pow(L.x(j), p)));
        b.add_relation(b.mono(word_pow(L.y(j), p)));
        NcPoly r = b.poly();
        r.add_term(F, Word{L.y(j), L.x(j)}, F.one());
        r.add_term(F, Word{L.x(j), L.y(j)}, F.neg(F.one()));
        r.add_term(F, Word{L.x(j), L.x(j)}, F.half());
        b.add_relation(r);
    }
    // distinct blocks q-commute letterwise
    for (uint32_t k = 0; k < d.t; ++k)
        for (uint32_t j = 0; j < d.t; ++j) {
            if (k == j)
                continue;
            auto qcomm = [&](uint8_t u, uint8_t v) {
                NcPoly r = b.poly();
                r.add_term(F, Word{u, v}, F.one());
                r.add_term(F, Word{v, u}, F.neg(d.qq(k, j)));
                b.add_relation(r);
            };
            if (k < j) { // one orientation suffices; q_{jk} = q_{kj}^{-1}
                qcomm(L.x(k), L.x(j));
                qcomm(L.y(k), L.y(j));
            }
            qcomm(L.x(k), L.y(j));
        }
    // blocks q-commute with points: x_j x_h = q_{jh} x_h x_j
    for (uint32_t j = 0; j < d.t; ++j)
        for (uint32_t h = d.t; h < d.theta; ++h) {
            NcPoly r = b.poly();
            r.add_term(F, Word{L.x(j), L.x(h)}, F.one());
            r.add_term(F, Word{L.x(h), L.x(j)}, F.neg(d.qq(j, h)));
            b.add_relation(r);
        }
    // truncated adjoints: sch_{h,(1+G_{hj}) e_j} = 0
    for (uint32_t j = 0; j < d.t; ++j)
        for (uint32_t h = d.t; h < d.theta; ++h) {
            std::vector<uint32_t> n(d.t, 0);
            n[j] = d.ghost_entry(h, j) + 1;
            b.add_relation(sch_expand(d, A, L, h, n));
        }
    // sch powers and commutations
    auto gens = pbw_generators(d, A, L);
    std::vector<const PbwGenerator*> sch;
    for (const auto& g : gens)
        if (g.point != UINT32_MAX)
            sch.push_back(&g);
    for (const auto* s : sch) {
        NcPoly pw = b.mono(Word{});
        for (uint32_t i = 0; i < p; ++i)
            pw = pw.times(F, s->poly);
        b.add_relation(pw);
    }
    for (size_t i = 0; i < sch.size(); ++i)
        for (size_t j = i + 1; j < sch.size(); ++j) {
            const auto& sm = *sch[i];
            const auto& sn = *sch[j];
            NcPoly r = sm.poly.times(F, sn.poly);
            r.add(F, sn.poly.times(F, sm.poly),
                  F.neg(p_scalar(d, sm.point, sm.box, sn.point, sn.box)));
            b.add_relation(r);
        }

    uint64_t toplen = 0;
    for (const auto& g : gens)
        toplen += g.word_length;
    auto pres = b.build(d.nichols_dimension(), d.theta, {});
    pres.pbw_generators = gens.size();
    pres.suggested_bound = (p - 1) * toplen + 2;
    return pres;
}

inline FinBasisAlgebra nichols_algebra(const PaperData& d,
                                       std::optional<uint64_t> bound = std::nullopt) {
    auto pres = nichols_presentation(d);
    return FinBasisAlgebra(pres, complete(pres, bound));
}

// --- bosonization -----------------------------------------------------------

struct Bosonization {
    PaperData data;
    uint32_t f = 0;
    NicholsAlphabet layout; // groups = theta
    AlgPtr alg;
    std::shared_ptr<PresentedHopf> hopf;
    Realization real;

    uint64_t expected_dim() const {
        uint64_t g = 1;
        for (uint32_t i = 0; i < data.theta; ++i)
            g *= f;
        return data.nichols_dimension() * g;
    }
};

// H = B(V(q,a)) # k(Z/f)^theta: group relations, the action-induced
// commutation rules, the Nichols relations; skew-primitive comultiplication
inline Bosonization bosonize(const PaperData& d, uint32_t f,
                             std::optional<uint64_t> bound = std::nullopt) {
    Realization real = realize(d, f);
    const Field& F = d.F();
    NicholsAlphabet L{d.t, d.theta, d.theta};
    PresentationBuilder b(d.field);
    for (uint32_t k = 0; k < d.theta; ++k)
        b.add_generator("g" + std::to_string(k + 1), 0, detail::unit_multidegree(d.theta, k));
    for (uint32_t j = 0; j < d.t; ++j) {
        b.add_generator("x" + std::to_string(j + 1), 1, detail::unit_multidegree(d.theta, j));
        b.add_generator("y" + std::to_string(j + 1), 1, detail::unit_multidegree(d.theta, j));
    }
    for (uint32_t h = d.t; h < d.theta; ++h)
        b.add_generator("x" + std::to_string(h + 1), 1, detail::unit_multidegree(d.theta, h));
    const Alphabet& A = b.A();

    // group relations: g_k^f = 1, g_k g_l = g_l g_k
    for (uint32_t k = 0; k < d.theta; ++k) {
        NcPoly r = b.mono(word_pow(L.group_gen(k), f));
        r.add_term(F, Word{}, F.neg(F.one()));
        b.add_relation(r);
        for (uint32_t l = k + 1; l < d.theta; ++l) {
            NcPoly c = b.poly();
            c.add_term(F, Word{L.group_gen(l), L.group_gen(k)}, F.one());
            c.add_term(F, Word{L.group_gen(k), L.group_gen(l)}, F.neg(F.one()));
            b.add_relation(c);
        }
    }
    // cross relations: g_k v = (g_k . v) g_k
    BasisLayout BL{d.t, d.theta};
    auto braided_letter = [&](uint32_t vidx) -> uint8_t {
        return BL.is_y(vidx) ? L.y(BL.component_of(vidx)) : L.x(BL.component_of(vidx));
    };
    for (uint32_t k = 0; k < d.theta; ++k)
        for (uint32_t vidx = 0; vidx < BL.dim(); ++vidx) {
            NcPoly r = b.poly();
            r.add_term(F, Word{L.group_gen(k), braided_letter(vidx)}, F.one());
            for (const auto& [widx, c] : real.act(k, vidx))
                r.add_term(F, Word{braided_letter(widx), L.group_gen(k)}, F.neg(c));
            b.add_relation(r);
        }
    // Nichols relations, re-expressed in the enlarged alphabet
    auto npres = nichols_presentation(d);
    for (const auto& rel : npres.relations) {
        NcPoly r = b.poly();
        for (const auto& [w, c] : rel.terms()) {
            Word shifted;
            for (uint8_t ch : w)
                shifted.push_back(uint8_t(ch + d.theta));
            r.add_term(F, shifted, c);
        }
        b.add_relation(r);
    }

    uint64_t gdim = 1;
    for (uint32_t i = 0; i < d.theta; ++i)
        gdim *= f;
    std::vector<uint32_t> moduli(d.theta, f);
    auto pres = b.build(d.nichols_dimension() * gdim, d.theta, moduli);
    pres.pbw_generators = npres.pbw_generators.value_or(0) + d.theta;
    pres.suggested_bound = npres.suggested_bound.value_or(0) + uint64_t(d.theta) * (f - 1);

    std::vector<uint32_t> grouplikes;
    for (uint32_t k = 0; k < d.theta; ++k)
        grouplikes.push_back(k);
    auto alg = std::make_shared<FinBasisAlgebra>(pres, complete(pres, bound), grouplikes);

    std::vector<TensorElement> dg(A.size());
    std::vector<Fq> eps(A.size(), F.zero());
    std::vector<SparseVec> sg(A.size());
    for (uint32_t k = 0; k < d.theta; ++k) {
        dg[k] = grouplike_delta(*alg, k);
        eps[k] = F.one();
        sg[k] = sv_unit(alg->index_of(word_pow(L.group_gen(k), f - 1)), F.one());
    }
    for (uint32_t vidx = 0; vidx < BL.dim(); ++vidx) {
        uint8_t letter = braided_letter(vidx);
        uint32_t grp = BL.component_of(vidx);
        dg[letter] = skew_primitive_delta(*alg, letter, grp);
        Word sw = word_pow(L.group_gen(grp), f - 1);
        sw.push_back(letter);
        sg[letter] = sv_unit(alg->index_of(sw), F.neg(F.one()));
    }
    auto hopf = std::make_shared<PresentedHopf>(alg, std::move(dg), std::move(eps), std::move(sg),
                                                grouplikes);
    return Bosonization{d, f, L, alg, hopf, std::move(real)};
}

} // namespace nichols
