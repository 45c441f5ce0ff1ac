#pragma once

#include "nichols/extension.hpp"

// The split abelian extensions k -> K -> H -> u(l) -> k of the bosonizations
// H = B(V(1,a)) # k(Z/f)^theta: K is generated by the x_j and the group, the
// quotient is the restricted enveloping algebra of l = V(G) x| n, the section
// sends E_j to -S(y_j), and the retraction keeps the group-and-x part of the
// PBW expansion.

namespace nichols {

// PBW basis of a bosonization: group generators (exponents < f), then the
// Nichols PBW generators (exponents < p), in the fixed global order
struct PbwBasis {
    std::vector<SparseVec> vec;           // H coordinates per PBW monomial
    std::vector<uint32_t> radix;          // exponent bound per position
    std::vector<std::vector<uint32_t>> tuples;
    std::vector<int64_t> lead_of_word;    // basis word -> tuple index (or -1)
    bool triangular = false;

    size_t position_count() const { return radix.size(); }
};

inline PbwBasis pbw_basis(const Bosonization& B) {
    const Field& F = B.data.F();
    const FinBasisAlgebra& H = *B.alg;
    NicholsAlphabet L0{B.data.t, B.data.theta, 0};
    PresentationBuilder scratch(B.data.field);
    for (uint32_t i = 0; i < L0.size(); ++i)
        scratch.add_generator("s" + std::to_string(i));
    auto nich = pbw_generators(B.data, scratch.A(), L0);

    PbwBasis P;
    std::vector<SparseVec> genvec;
    for (uint32_t k = 0; k < B.data.theta; ++k) {
        P.radix.push_back(B.f);
        genvec.push_back(sv_unit(H.index_of(Word{uint8_t(k)}), F.one()));
    }
    for (const auto& g : nich) {
        P.radix.push_back(F.p());
        NcPoly shifted(H.A());
        for (const auto& [w, c] : g.poly.terms()) {
            Word sw;
            for (uint8_t ch : w)
                sw.push_back(uint8_t(ch + B.data.theta));
            shifted.add_term(F, sw, c);
        }
        genvec.push_back(H.reduce_to_vec(shifted));
    }

    uint64_t total = 1;
    for (uint32_t r : P.radix)
        total *= r;
    require(total == H.dim(), "PBW monomial count does not match the dimension");

    P.tuples.reserve(total);
    P.vec.resize(total);
    std::vector<uint32_t> cur(P.radix.size(), 0);
    std::vector<uint64_t> stride(P.radix.size(), 1);
    for (size_t i = P.radix.size() - 1; i-- > 0;)
        stride[i] = stride[i + 1] * P.radix[i + 1];
    for (uint64_t n = 0; n < total; ++n) {
        P.tuples.push_back(cur);
        // last nonzero position
        int64_t last = -1;
        for (size_t i = cur.size(); i-- > 0;)
            if (cur[i] != 0) {
                last = int64_t(i);
                break;
            }
        if (last < 0) {
            P.vec[n] = sv_unit(H.unit_index(), F.one());
        } else {
            uint64_t prev = n - stride[last];
            P.vec[n] = H.mult(P.vec[prev], genvec[last]);
        }
        // increment odometer (last position fastest)
        for (size_t i = cur.size(); i-- > 0;) {
            if (++cur[i] < P.radix[i])
                break;
            cur[i] = 0;
        }
    }

    // leading-word map: triangular iff it is a bijection onto the basis
    P.lead_of_word.assign(H.dim(), -1);
    P.triangular = true;
    for (uint64_t n = 0; n < total; ++n) {
        if (P.vec[n].empty()) {
            P.triangular = false;
            break;
        }
        uint32_t lead = P.vec[n].back().first; // largest index = deglex-largest
        if (P.lead_of_word[lead] != -1) {
            P.triangular = false;
            break;
        }
        P.lead_of_word[lead] = int64_t(n);
    }
    return P;
}

// linear map H -> T defined by values on PBW monomials, assembled by
// back-substitution along the triangular change of basis
inline DenseMatrix pbw_defined_map(const PbwBasis& P, const FinBasisAlgebra& H, size_t target_dim,
                                   const std::function<SparseVec(uint64_t)>& value_on_pbw) {
    require(P.triangular, "PBW change of basis is not triangular");
    const Field& F = H.F();
    DenseMatrix out(target_dim, H.dim());
    std::vector<Fq> acc(target_dim);
    for (uint32_t w = 0; w < H.dim(); ++w) {
        int64_t n = P.lead_of_word[w];
        require(n >= 0, "missing PBW monomial for a basis word");
        std::fill(acc.begin(), acc.end(), F.zero());
        for (const auto& [r, c] : value_on_pbw(uint64_t(n)))
            acc[r] = c;
        Fq leadc = F.zero();
        for (const auto& [i, c] : P.vec[n]) {
            if (i == w) {
                leadc = c;
                continue;
            }
            // i < w in the basis order, so its column is already filled
            for (size_t r = 0; r < target_dim; ++r) {
                Fq v = out.at(r, i);
                if (!v.is_zero())
                    acc[r] = F.sub(acc[r], F.mul(c, v));
            }
        }
        Fq il = F.inv(leadc);
        for (size_t r = 0; r < target_dim; ++r)
            out.at(r, w) = F.mul(acc[r], il);
    }
    return out;
}

struct PaperExtension {
    Bosonization bos;
    GhostLie ghost;
    std::shared_ptr<PresentedHopf> K, L;
    ExtensionCandidate ext;
    CleavingPair cleaving;
    PbwBasis pbw;
};

// the commutative Hopf subalgebra K = k<x_1..x_t, g_1..g_theta> presented
// on its own alphabet (groups first, then the x_j)
inline std::shared_ptr<PresentedHopf> extension_subalgebra(const PaperData& d, uint32_t f) {
    const Field& F = d.F();
    PresentationBuilder b(d.field);
    for (uint32_t k = 0; k < d.theta; ++k)
        b.add_generator("g" + std::to_string(k + 1), 0, detail::unit_multidegree(d.theta, k));
    for (uint32_t j = 0; j < d.t; ++j)
        b.add_generator("x" + std::to_string(j + 1), 1, detail::unit_multidegree(d.theta, j));
    auto gi = [&](uint32_t k) { return uint8_t(k); };
    auto xi = [&](uint32_t j) { return uint8_t(d.theta + j); };
    for (uint32_t k = 0; k < d.theta; ++k) {
        NcPoly r = b.mono(word_pow(gi(k), f));
        r.add_term(F, Word{}, F.neg(F.one()));
        b.add_relation(r);
    }
    uint32_t n = d.theta + d.t;
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = i + 1; j < n; ++j) {
            NcPoly r = b.poly();
            r.add_term(F, Word{uint8_t(j), uint8_t(i)}, F.one());
            r.add_term(F, Word{uint8_t(i), uint8_t(j)}, F.neg(F.one()));
            b.add_relation(r);
        }
    for (uint32_t j = 0; j < d.t; ++j)
        b.add_relation(b.mono(word_pow(xi(j), F.p())));
    uint64_t dim = 1;
    for (uint32_t k = 0; k < d.theta; ++k)
        dim *= f;
    for (uint32_t j = 0; j < d.t; ++j)
        dim *= F.p();
    std::vector<uint32_t> moduli(d.theta, f);
    auto pres = b.build(dim, d.theta, moduli);
    pres.pbw_generators = n;
    pres.suggested_bound = uint64_t(d.theta) * (f - 1) + uint64_t(d.t) * (F.p() - 1) + 2;
    std::vector<uint32_t> grouplikes;
    for (uint32_t k = 0; k < d.theta; ++k)
        grouplikes.push_back(k);
    auto alg = std::make_shared<FinBasisAlgebra>(pres, complete(pres), grouplikes);
    std::vector<TensorElement> dg(n);
    std::vector<Fq> eps(n, F.zero());
    std::vector<SparseVec> sg(n);
    for (uint32_t k = 0; k < d.theta; ++k) {
        dg[k] = grouplike_delta(*alg, k);
        eps[k] = F.one();
        sg[k] = sv_unit(alg->index_of(word_pow(gi(k), f - 1)), F.one());
    }
    for (uint32_t j = 0; j < d.t; ++j) {
        dg[xi(j)] = skew_primitive_delta(*alg, xi(j), j);
        Word sw = word_pow(gi(j), f - 1);
        sw.push_back(xi(j));
        sg[xi(j)] = sv_unit(alg->index_of(sw), F.neg(F.one()));
    }
    return std::make_shared<PresentedHopf>(alg, std::move(dg), std::move(eps), std::move(sg),
                                           grouplikes);
}

inline PaperExtension paper_extension(const PaperData& d, uint32_t f,
                                      std::optional<uint64_t> bound = std::nullopt) {
    require(d.q_is_one(), "the split extension requires q = 1");
    const Field& F = d.F();
    require(f % F.p() == 0, "f must be a multiple of p");

    Bosonization B = bosonize(d, f, bound);
    GhostLie ghost = build_l(d.ghost, d.t, d.field);
    const FinBasisAlgebra& H = *B.alg;

    auto K = extension_subalgebra(d, f);
    auto env = restricted_enveloping(ghost.lie);
    auto L = env.hopf;

    // iota: g_k -> g_k, x_j -> x_j
    std::vector<SparseVec> iota_imgs;
    for (uint32_t k = 0; k < d.theta; ++k)
        iota_imgs.push_back(sv_unit(H.index_of(Word{uint8_t(k)}), F.one()));
    for (uint32_t j = 0; j < d.t; ++j)
        iota_imgs.push_back(sv_unit(H.index_of(Word{B.layout.x(j)}), F.one()));
    LinearMap iota = LinearMap::from_gen_images(K->alg_ptr(), B.alg, iota_imgs);

    // pi: g_k -> 1, x_j -> 0, y_j -> E_j, x_h -> v_{h,0}
    const FinBasisAlgebra& Lalg = L->alg();
    std::vector<SparseVec> pi_imgs(H.A().size());
    for (uint32_t k = 0; k < d.theta; ++k)
        pi_imgs[k] = sv_unit(Lalg.unit_index(), F.one());
    for (uint32_t j = 0; j < d.t; ++j) {
        pi_imgs[B.layout.x(j)] = {};
        pi_imgs[B.layout.y(j)] =
            sv_unit(Lalg.index_of(Word{uint8_t(ghost.e_index(j))}), F.one());
    }
    std::vector<uint32_t> zero(d.t, 0);
    for (uint32_t h = d.t; h < d.theta; ++h)
        pi_imgs[B.layout.x(h)] =
            sv_unit(Lalg.index_of(Word{uint8_t(ghost.v_index(h, zero))}), F.one());
    LinearMap pi = LinearMap::from_gen_images(B.alg, L->alg_ptr(), pi_imgs);

    // section: s(E_j) = -S(y_j) = g_j^{-1} y_j, s(v_h) = -S(x_h) = g_h^{-1} x_h,
    // extended to the v_{h,m} by the iterated commutators with the s(E_j)
    std::vector<SparseVec> s_imgs(Lalg.A().size());
    for (uint32_t j = 0; j < d.t; ++j) {
        Word w = word_pow(uint8_t(j), f - 1);
        w.push_back(B.layout.y(j));
        s_imgs[ghost.e_index(j)] = sv_unit(H.index_of(w), F.one());
    }
    for (uint32_t vi = 0; vi < ghost.v_labels.size(); ++vi) {
        const auto& [h, m] = ghost.v_labels[vi];
        uint32_t j = 0;
        bool zerovec = true;
        for (uint32_t i = 0; i < d.t; ++i)
            if (m[i] != 0) {
                j = i;
                zerovec = false;
                break;
            }
        if (zerovec) {
            Word w = word_pow(uint8_t(h), f - 1);
            w.push_back(B.layout.x(h));
            s_imgs[ghost.t + vi] = sv_unit(H.index_of(w), F.one());
            continue;
        }
        auto prev = m;
        --prev[j];
        const SparseVec& vprev = s_imgs[ghost.v_index(h, prev)];
        const SparseVec& ej = s_imgs[ghost.e_index(j)];
        SparseVec comm = H.mult(ej, vprev);
        comm = sv_add(F, comm, H.mult(vprev, ej), F.neg(F.one()));
        s_imgs[ghost.t + vi] = comm;
    }
    LinearMap section = LinearMap::from_gen_images(L->alg_ptr(), B.alg, s_imgs);

    // retraction via the PBW case split
    PbwBasis pbw = pbw_basis(B);
    const FinBasisAlgebra& Kalg = K->alg();
    auto case_split = [&](uint64_t n) -> SparseVec {
        const auto& tup = pbw.tuples[n];
        // group exponents, then per block (x, y), then the sch generators
        Word w;
        for (uint32_t k = 0; k < d.theta; ++k)
            for (uint32_t c = 0; c < tup[k]; ++c)
                w.push_back(uint8_t(k));
        size_t pos = d.theta;
        for (uint32_t j = 0; j < d.t; ++j) {
            for (uint32_t c = 0; c < tup[pos]; ++c)
                w.push_back(uint8_t(d.theta + j)); // x_j in K's alphabet
            if (tup[pos + 1] != 0)
                return {}; // a y_j exponent survives
            pos += 2;
        }
        for (; pos < tup.size(); ++pos)
            if (tup[pos] != 0)
                return {}; // a sch exponent survives
        return sv_unit(Kalg.index_of(w), F.one());
    };
    LinearMap retraction(B.alg, K->alg_ptr(),
                         pbw_defined_map(pbw, H, Kalg.dim(), case_split));

    ExtensionCandidate ext{K, B.hopf, L, HopfMapData{iota, iota_imgs},
                           HopfMapData{pi, pi_imgs}};
    CleavingPair cleaving{HopfMapData{section, s_imgs}, retraction};
    return PaperExtension{std::move(B), std::move(ghost), std::move(K), std::move(L),
                          std::move(ext), std::move(cleaving), std::move(pbw)};
}

} // namespace nichols
