#pragma once

#include <array>
#include <map>

#include "nichols/algebra.hpp"

// Elements of A (x) B for basis algebras: finitely supported maps on pairs of
// basis indices, both components in normal form.

namespace nichols {

class TensorElement {
public:
    using Key = uint64_t; // (i << 32) | j
    using Terms = std::map<Key, Fq>;

    static Key key(uint32_t i, uint32_t j) { return (uint64_t(i) << 32) | j; }
    static uint32_t left(Key k) { return uint32_t(k >> 32); }
    static uint32_t right(Key k) { return uint32_t(k); }

    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    void add_term(const Field& F, uint32_t i, uint32_t j, Fq c) {
        if (c.is_zero())
            return;
        Key k = key(i, j);
        auto [it, fresh] = terms_.emplace(k, c);
        if (!fresh) {
            it->second = F.add(it->second, c);
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    void add(const Field& F, const TensorElement& o, Fq scale) {
        if (scale.is_zero())
            return;
        for (const auto& [k, c] : o.terms_)
            add_term(F, left(k), right(k), F.mul(c, scale));
    }

    void add(const Field& F, const TensorElement& o) {
        for (const auto& [k, c] : o.terms_)
            add_term(F, left(k), right(k), c);
    }

    static TensorElement simple(const Field& F, const SparseVec& a, const SparseVec& b) {
        TensorElement t;
        for (const auto& [i, c] : a)
            for (const auto& [j, d] : b)
                t.add_term(F, i, j, F.mul(c, d));
        return t;
    }

    friend bool operator==(const TensorElement& a, const TensorElement& b) {
        return a.terms_ == b.terms_;
    }

private:
    Terms terms_;
};

// product in A (x) B, componentwise in the two algebras
template <class AlgA, class AlgB>
TensorElement tensor_mult(const AlgA& A, const AlgB& B, const TensorElement& s,
                          const TensorElement& t) {
    TensorElement r;
    const Field& F = A.F();
    for (const auto& [k1, c1] : s.terms()) {
        for (const auto& [k2, c2] : t.terms()) {
            Fq c = F.mul(c1, c2);
            SparseVec lv = A.mult(TensorElement::left(k1), TensorElement::left(k2));
            SparseVec rv = B.mult(TensorElement::right(k1), TensorElement::right(k2));
            for (const auto& [i, a] : lv) {
                Fq ca = F.mul(c, a);
                for (const auto& [j, b] : rv)
                    r.add_term(F, i, j, F.mul(ca, b));
            }
        }
    }
    return r;
}

// triple tensors, used for the coassociativity check
using Tensor3 = std::map<std::array<uint32_t, 3>, Fq>;

inline void t3_add(const Field& F, Tensor3& t, std::array<uint32_t, 3> k, Fq c) {
    if (c.is_zero())
        return;
    auto [it, fresh] = t.emplace(k, c);
    if (!fresh) {
        it->second = F.add(it->second, c);
        if (it->second.is_zero())
            t.erase(it);
    }
}

} // namespace nichols
