#pragma once

#include <functional>

#include "nichols/tensor.hpp"

// Hopf structure over a basis algebra: comultiplication, counit and antipode
// given on generators, extended (anti)multiplicatively, with axiom checking.

namespace nichols {

using AlgPtr = std::shared_ptr<const FinBasisAlgebra>;

struct HopfCheckReport {
    bool well_defined = false;
    bool coassociative = false;
    bool counit_ok = false;
    bool antipode_ok = false;
    std::string witness; // first failure, if any
    bool pass() const { return well_defined && coassociative && counit_ok && antipode_ok; }
};

class PresentedHopf {
public:
    PresentedHopf(AlgPtr alg, std::vector<TensorElement> delta_gen, std::vector<Fq> eps_gen,
                  std::vector<SparseVec> antipode_gen, std::vector<uint32_t> grouplikes = {})
        : alg_(std::move(alg)), delta_gen_(std::move(delta_gen)), eps_gen_(std::move(eps_gen)),
          s_gen_(std::move(antipode_gen)), grouplikes_(std::move(grouplikes)) {
        size_t n = alg_->A().size();
        require(delta_gen_.size() == n && eps_gen_.size() == n && s_gen_.size() == n,
                "hopf structure must cover every generator");
        s_word_.assign(alg_->dim(), std::nullopt);
    }

    const FinBasisAlgebra& alg() const { return *alg_; }
    AlgPtr alg_ptr() const { return alg_; }
    const Field& F() const { return alg_->F(); }
    size_t dim() const { return alg_->dim(); }
    const std::vector<uint32_t>& grouplikes() const { return grouplikes_; }
    const TensorElement& delta_gen(uint32_t g) const { return delta_gen_[g]; }
    Fq eps_gen(uint32_t g) const { return eps_gen_[g]; }
    const SparseVec& antipode_gen(uint32_t g) const { return s_gen_[g]; }

    // algebra-map extension of the comultiplication to a basis element
    TensorElement delta_word(uint32_t idx) const {
        if (auto it = delta_cache_.find(idx); it != delta_cache_.end())
            return it->second;
        const Word& w = alg_->word(idx);
        TensorElement t = delta_unit();
        if (!w.empty()) {
            uint32_t pre = alg_->index_of(w.substr(0, w.size() - 1));
            t = tensor_mult(*alg_, *alg_, delta_word(pre), delta_gen_[w.back()]);
        }
        if (delta_cache_.size() < delta_cache_cap_)
            delta_cache_.emplace(idx, t);
        return t;
    }

    TensorElement delta_vec(const SparseVec& v) const {
        TensorElement t;
        for (const auto& [i, c] : v)
            t.add(F(), delta_word(i), c);
        return t;
    }

    TensorElement delta_unit() const {
        TensorElement t;
        t.add_term(F(), alg_->unit_index(), alg_->unit_index(), F().one());
        return t;
    }

    // comultiplication evaluated on a free word (used on defining relations)
    TensorElement delta_free_word(const Word& w) const {
        TensorElement t = delta_unit();
        for (uint8_t g : w)
            t = tensor_mult(*alg_, *alg_, t, delta_gen_[g]);
        return t;
    }

    Fq eps_free_word(const Word& w) const {
        Fq e = F().one();
        for (uint8_t g : w) {
            e = F().mul(e, eps_gen_[g]);
            if (e.is_zero())
                break;
        }
        return e;
    }

    Fq eps_word(uint32_t idx) const { return eps_free_word(alg_->word(idx)); }

    Fq eps_vec(const SparseVec& v) const {
        Fq e = F().zero();
        for (const auto& [i, c] : v)
            e = F().add(e, F().mul(c, eps_word(i)));
        return e;
    }

    // anti-multiplicative extension of the antipode: S(uv) = S(v)S(u)
    SparseVec antipode_word(uint32_t idx) const {
        if (s_word_[idx])
            return *s_word_[idx];
        const Word& w = alg_->word(idx);
        SparseVec v;
        if (w.empty()) {
            v = sv_unit(alg_->unit_index(), F().one());
        } else {
            uint32_t pre = alg_->index_of(w.substr(0, w.size() - 1));
            v = alg_->mult(s_gen_[w.back()], antipode_word(pre));
        }
        s_word_[idx] = v;
        return v;
    }

    SparseVec antipode_free_word(const Word& w) const {
        SparseVec v = sv_unit(alg_->unit_index(), F().one());
        for (size_t i = w.size(); i-- > 0;)
            v = alg_->mult(v, s_gen_[w[i]]);
        return v;
    }

    SparseVec antipode_vec(const SparseVec& u) const {
        SvBuilder b;
        for (const auto& [i, c] : u)
            for (const auto& [j, d] : antipode_word(i))
                b.add(j, F().mul(c, d));
        return b.take(F());
    }

    void set_delta_cache_cap(size_t cap) const { delta_cache_cap_ = cap; }

private:
    AlgPtr alg_;
    std::vector<TensorElement> delta_gen_;
    std::vector<Fq> eps_gen_;
    std::vector<SparseVec> s_gen_;
    std::vector<uint32_t> grouplikes_;
    mutable std::unordered_map<uint32_t, TensorElement> delta_cache_;
    mutable std::vector<std::optional<SparseVec>> s_word_;
    mutable size_t delta_cache_cap_ = 200000;
};

namespace detail {

inline std::string gen_name(const PresentedHopf& h, uint32_t g) {
    return h.alg().A().gen(g).name;
}

} // namespace detail

// The four axiom checks. Generator mode verifies each axiom on generators plus
// well-definedness on the defining relations (both sides of every axiom are
// (anti)algebra maps, so this is equivalent); exhaustive mode re-verifies on
// every basis word and every product pair, feasible for small dimensions.
inline HopfCheckReport check_hopf(const PresentedHopf& h, bool exhaustive = false) {
    HopfCheckReport rep;
    const FinBasisAlgebra& A = h.alg();
    const Field& F = h.F();
    const size_t ngen = A.A().size();

    // (1) well-definedness on the defining relations
    rep.well_defined = true;
    for (const auto& rel : A.presentation().relations) {
        TensorElement dt;
        Fq ee = F.zero();
        SvBuilder sb;
        for (const auto& [w, c] : rel.terms()) {
            dt.add(F, h.delta_free_word(w), c);
            ee = F.add(ee, F.mul(c, h.eps_free_word(w)));
            for (const auto& [j, d] : h.antipode_free_word(w))
                sb.add(j, F.mul(c, d));
        }
        SparseVec sv = sb.take(F);
        if (!dt.is_zero() || !ee.is_zero() || !sv.empty()) {
            rep.well_defined = false;
            rep.witness = "structure maps do not annihilate relation: " + rel.to_string(F);
            break;
        }
    }

    // grouplike consistency
    for (uint32_t g : h.grouplikes()) {
        uint32_t gi = A.index_of(Word{uint8_t(g)});
        TensorElement gg;
        gg.add_term(F, gi, gi, F.one());
        bool ok = h.delta_gen(g) == gg && h.eps_gen(g) == F.one();
        if (ok) {
            SparseVec prod = A.mult(h.antipode_gen(g), sv_unit(gi, F.one()));
            ok = prod == sv_unit(A.unit_index(), F.one());
        }
        if (!ok) {
            rep.well_defined = false;
            rep.witness = "declared grouplike fails delta/eps/antipode consistency: " +
                          detail::gen_name(h, g);
        }
    }

    auto coassoc_at = [&](uint32_t idx) {
        TensorElement d = h.delta_word(idx);
        Tensor3 lhs, rhs;
        for (const auto& [k, c] : d.terms()) {
            TensorElement dl = h.delta_word(TensorElement::left(k));
            for (const auto& [k2, c2] : dl.terms())
                t3_add(F, lhs,
                       {TensorElement::left(k2), TensorElement::right(k2),
                        TensorElement::right(k)},
                       F.mul(c, c2));
            TensorElement dr = h.delta_word(TensorElement::right(k));
            for (const auto& [k2, c2] : dr.terms())
                t3_add(F, rhs,
                       {TensorElement::left(k), TensorElement::left(k2),
                        TensorElement::right(k2)},
                       F.mul(c, c2));
        }
        return lhs == rhs;
    };

    auto counit_at = [&](uint32_t idx) {
        TensorElement d = h.delta_word(idx);
        SvBuilder lt, rt;
        for (const auto& [k, c] : d.terms()) {
            lt.add(TensorElement::right(k), F.mul(c, h.eps_word(TensorElement::left(k))));
            rt.add(TensorElement::left(k), F.mul(c, h.eps_word(TensorElement::right(k))));
        }
        SparseVec e = sv_unit(idx, F.one());
        return lt.take(F) == e && rt.take(F) == e;
    };

    auto antipode_at = [&](uint32_t idx) {
        TensorElement d = h.delta_word(idx);
        SvBuilder lt, rt;
        for (const auto& [k, c] : d.terms()) {
            for (const auto& [j, a] :
                 A.mult(h.antipode_word(TensorElement::left(k)),
                        sv_unit(TensorElement::right(k), F.one())))
                lt.add(j, F.mul(c, a));
            for (const auto& [j, a] :
                 A.mult(sv_unit(TensorElement::left(k), F.one()),
                        h.antipode_word(TensorElement::right(k))))
                rt.add(j, F.mul(c, a));
        }
        SparseVec e = sv_unit(A.unit_index(), h.eps_word(idx));
        return lt.take(F) == e && rt.take(F) == e;
    };

    auto scan = [&](const std::function<bool(uint32_t)>& f, bool& flag, const char* what) {
        flag = true;
        if (exhaustive) {
            for (uint32_t i = 0; i < A.dim(); ++i)
                if (!f(i)) {
                    flag = false;
                    if (rep.witness.empty())
                        rep.witness = std::string(what) + " fails on basis word " +
                                      A.A().to_string(A.word(i));
                    return;
                }
        } else {
            for (uint32_t g = 0; g < ngen; ++g) {
                Word wg{uint8_t(g)};
                if (!A.rewrite_system().word_reducible(wg) && !f(A.index_of(wg))) {
                    flag = false;
                    if (rep.witness.empty())
                        rep.witness = std::string(what) + " fails on generator " +
                                      detail::gen_name(h, uint32_t(g));
                    return;
                }
            }
        }
    };

    scan(coassoc_at, rep.coassociative, "coassociativity");
    scan(counit_at, rep.counit_ok, "counit axiom");
    scan(antipode_at, rep.antipode_ok, "antipode axiom");

    if (exhaustive && rep.well_defined) {
        // multiplicativity of delta on every product pair
        for (uint32_t i = 0; i < A.dim() && rep.well_defined; ++i) {
            TensorElement di = h.delta_word(i);
            for (uint32_t j = 0; j < A.dim(); ++j) {
                TensorElement prod = tensor_mult(A, A, di, h.delta_word(j));
                TensorElement dm = h.delta_vec(A.mult(i, j));
                if (!(prod == dm)) {
                    rep.well_defined = false;
                    rep.witness = "delta not multiplicative on pair (" +
                                  A.A().to_string(A.word(i)) + ", " + A.A().to_string(A.word(j)) +
                                  ")";
                    break;
                }
            }
        }
    }
    return rep;
}

// convenience builders ------------------------------------------------------

// primitive generator: delta(x) = x (x) 1 + 1 (x) x, eps = 0, S(x) = -x
inline TensorElement primitive_delta(const FinBasisAlgebra& A, uint32_t gen) {
    TensorElement t;
    uint32_t gi = A.index_of(Word{uint8_t(gen)});
    t.add_term(A.F(), gi, A.unit_index(), A.F().one());
    t.add_term(A.F(), A.unit_index(), gi, A.F().one());
    return t;
}

// skew-primitive: delta(x) = x (x) 1 + g (x) x
inline TensorElement skew_primitive_delta(const FinBasisAlgebra& A, uint32_t gen, uint32_t grp) {
    TensorElement t;
    uint32_t gi = A.index_of(Word{uint8_t(gen)});
    uint32_t hi = A.index_of(Word{uint8_t(grp)});
    t.add_term(A.F(), gi, A.unit_index(), A.F().one());
    t.add_term(A.F(), hi, gi, A.F().one());
    return t;
}

inline TensorElement grouplike_delta(const FinBasisAlgebra& A, uint32_t gen) {
    TensorElement t;
    uint32_t gi = A.index_of(Word{uint8_t(gen)});
    t.add_term(A.F(), gi, gi, A.F().one());
    return t;
}

} // namespace nichols
