#pragma once

#include "nichols/hopf.hpp"

// Linear maps between basis algebras in matrix form, with the structure-map
// predicates and convolution calculus used by the extension checks.

namespace nichols {

class LinearMap {
public:
    LinearMap(AlgPtr src, AlgPtr tgt, DenseMatrix m)
        : src_(std::move(src)), tgt_(std::move(tgt)), m_(std::move(m)) {
        require(m_.rows() == tgt_->dim() && m_.cols() == src_->dim(), "linear map shape mismatch");
    }

    // multiplicative extension of generator images: f(w) = f(w') f(last)
    static LinearMap from_gen_images(AlgPtr src, AlgPtr tgt, std::vector<SparseVec> images) {
        require(images.size() == src->A().size(), "one image per generator required");
        DenseMatrix m(tgt->dim(), src->dim());
        std::vector<SparseVec> cols(src->dim());
        for (uint32_t i = 0; i < src->dim(); ++i) {
            const Word& w = src->word(i);
            if (w.empty())
                cols[i] = sv_unit(tgt->unit_index(), tgt->F().one());
            else {
                uint32_t pre = src->index_of(w.substr(0, w.size() - 1));
                cols[i] = tgt->mult(cols[pre], images[w.back()]);
            }
            m.set_col(i, cols[i]);
        }
        return LinearMap(std::move(src), std::move(tgt), std::move(m));
    }

    static LinearMap identity(AlgPtr a) {
        DenseMatrix m = DenseMatrix::identity(a->F(), a->dim());
        return LinearMap(a, a, std::move(m));
    }

    const FinBasisAlgebra& src() const { return *src_; }
    const FinBasisAlgebra& tgt() const { return *tgt_; }
    AlgPtr src_ptr() const { return src_; }
    AlgPtr tgt_ptr() const { return tgt_; }
    const DenseMatrix& matrix() const { return m_; }

    SparseVec col(uint32_t i) const {
        SparseVec v;
        for (size_t r = 0; r < m_.rows(); ++r)
            if (!m_.at(r, i).is_zero())
                v.emplace_back(uint32_t(r), m_.at(r, i));
        return v;
    }

    SparseVec apply(const SparseVec& v) const { return m_.apply(src_->F(), v); }

    LinearMap compose(const LinearMap& inner) const {
        // (*this) o inner
        return LinearMap(inner.src_, tgt_, m_.times(src_->F(), inner.m_));
    }

    size_t rank() const { return m_.rank(src_->F()); }
    bool injective() const { return rank() == src_->dim(); }
    bool surjective() const { return rank() == tgt_->dim(); }

    friend bool operator==(const LinearMap& a, const LinearMap& b) { return a.m_ == b.m_; }

private:
    AlgPtr src_, tgt_;
    DenseMatrix m_;
};

// f(uv) = f(u)f(v) for all basis pairs and f(1) = 1; returns the first
// counterexample through `witness` when given
inline bool is_algebra_map(const LinearMap& f, std::string* witness = nullptr) {
    const auto& S = f.src();
    const auto& T = f.tgt();
    if (f.col(S.unit_index()) != sv_unit(T.unit_index(), T.F().one())) {
        if (witness)
            *witness = "unit not preserved";
        return false;
    }
    std::vector<SparseVec> cols(S.dim());
    for (uint32_t i = 0; i < S.dim(); ++i)
        cols[i] = f.col(i);
    for (uint32_t i = 0; i < S.dim(); ++i)
        for (uint32_t j = 0; j < S.dim(); ++j) {
            SparseVec lhs = f.apply(S.mult(i, j));
            SparseVec rhs = T.mult(cols[i], cols[j]);
            if (lhs != rhs) {
                if (witness)
                    *witness = "pair (" + S.A().to_string(S.word(i)) + ", " +
                               S.A().to_string(S.word(j)) + ")";
                return false;
            }
        }
    return true;
}

// checks that generator images satisfy the source presentation's relations
inline bool algebra_map_well_defined(const Presentation& src, const FinBasisAlgebra& tgt,
                                     const std::vector<SparseVec>& images,
                                     std::string* witness = nullptr) {
    const Field& F = tgt.F();
    for (const auto& rel : src.relations) {
        SvBuilder acc;
        for (const auto& [w, c] : rel.terms()) {
            SparseVec v = sv_unit(tgt.unit_index(), F.one());
            for (uint8_t g : w)
                v = tgt.mult(v, images[g]);
            for (const auto& [i, d] : v)
                acc.add(i, F.mul(c, d));
        }
        if (!acc.take(F).empty()) {
            if (witness)
                *witness = "relation not preserved: " + rel.to_string(F);
            return false;
        }
    }
    return true;
}

// (f (x) f) Delta_src = Delta_tgt f  and  eps_tgt f = eps_src on all basis words
inline bool is_coalgebra_map(const PresentedHopf& hs, const PresentedHopf& ht, const LinearMap& f,
                             std::string* witness = nullptr) {
    const Field& F = hs.F();
    for (uint32_t i = 0; i < hs.dim(); ++i) {
        TensorElement lhs;
        TensorElement di = hs.delta_word(i);
        for (const auto& [k, c] : di.terms()) {
            SparseVec fl = f.col(TensorElement::left(k));
            SparseVec fr = f.col(TensorElement::right(k));
            TensorElement t = TensorElement::simple(F, fl, fr);
            lhs.add(F, t, c);
        }
        TensorElement rhs = ht.delta_vec(f.col(i));
        bool ok = lhs == rhs && ht.eps_vec(f.col(i)) == hs.eps_word(i);
        if (!ok) {
            if (witness)
                *witness = "basis word " + hs.alg().A().to_string(hs.alg().word(i));
            return false;
        }
    }
    return true;
}

// convolution product of maps C -> A: (f*g)(c) = f(c_(1)) g(c_(2))
inline LinearMap convolution(const PresentedHopf& hc, const LinearMap& f, const LinearMap& g) {
    const Field& F = hc.F();
    const auto& A = f.tgt();
    DenseMatrix m(A.dim(), hc.dim());
    for (uint32_t c = 0; c < hc.dim(); ++c) {
        SvBuilder acc;
        TensorElement dc = hc.delta_word(c);
        for (const auto& [k, coef] : dc.terms()) {
            SparseVec prod =
                A.mult(f.col(TensorElement::left(k)), g.col(TensorElement::right(k)));
            for (const auto& [i, v] : prod)
                acc.add(i, F.mul(coef, v));
        }
        m.set_col(c, acc.take(F));
    }
    return LinearMap(f.src_ptr(), f.tgt_ptr(), std::move(m));
}

// the convolution unit c |-> eps(c) 1_A
inline LinearMap unit_eps(const PresentedHopf& hc, AlgPtr a) {
    DenseMatrix m(a->dim(), hc.dim());
    for (uint32_t c = 0; c < hc.dim(); ++c)
        m.at(a->unit_index(), c) = hc.eps_word(c);
    return LinearMap(hc.alg_ptr(), a, std::move(m));
}

// convolution inverse by solving the linear system (f * g) = u eps in Hom(C,A);
// the result is verified two-sided.
inline std::optional<LinearMap> convolution_inverse(const PresentedHopf& hc, const LinearMap& f,
                                                    size_t unknown_cap = 2000) {
    const Field& F = hc.F();
    const auto& A = f.tgt();
    const size_t dc = hc.dim(), da = A.dim();
    require(dc * da <= unknown_cap,
            "convolution solve too large; use an algebra-map shortcut");
    auto flat = [&](uint32_t c, uint32_t a) { return size_t(c) * da + a; };
    DenseMatrix M(dc * da, dc * da);
    std::vector<Fq> rhs(dc * da);
    for (uint32_t c = 0; c < dc; ++c) {
        rhs[flat(c, A.unit_index())] = hc.eps_word(c);
        TensorElement dlt = hc.delta_word(c);
        for (const auto& [k, coef] : dlt.terms()) {
            uint32_t u = TensorElement::left(k), v = TensorElement::right(k);
            SparseVec fu = f.col(u);
            for (uint32_t b = 0; b < da; ++b) {
                SparseVec prod = A.mult(fu, sv_unit(b, F.one()));
                for (const auto& [a, val] : prod)
                    M.at(flat(c, a), flat(v, b)) = F.add(M.at(flat(c, a), flat(v, b)), F.mul(coef, val));
            }
        }
    }
    auto x = M.solve(F, rhs);
    if (!x)
        return std::nullopt;
    DenseMatrix gm(da, dc);
    for (uint32_t c = 0; c < dc; ++c)
        for (uint32_t a = 0; a < da; ++a)
            gm.at(a, c) = (*x)[flat(c, a)];
    LinearMap g(hc.alg_ptr(), f.tgt_ptr(), std::move(gm));
    LinearMap ue = unit_eps(hc, f.tgt_ptr());
    if (!(convolution(hc, f, g) == ue) || !(convolution(hc, g, f) == ue))
        return std::nullopt;
    return g;
}

} // namespace nichols
