#pragma once

#include <unordered_map>

#include "nichols/linalg.hpp"
#include "nichols/rewrite.hpp"

namespace nichols {

// A finite-dimensional algebra realized by a complete rewrite system:
// basis = normal words (deglex ascending, so index 0 is the unit),
// multiplication by normal-form reduction with cached generator tables.
class FinBasisAlgebra {
public:
    FinBasisAlgebra(const Presentation& pres, RewriteSystem rws,
                    std::vector<uint32_t> grouplike_gens = {})
        : pres_(pres), rws_(std::move(rws)) {
        require(rws_.complete(), "algebra requires a complete rewrite system: " + rws_.status_detail());
        rws_.normal_words(rws_.degree_bound(), &basis_);
        for (uint32_t i = 0; i < basis_.size(); ++i)
            index_[basis_[i]] = i;
        if (pres_.expected_dim)
            require(*pres_.expected_dim == basis_.size(),
                    "normal word count " + std::to_string(basis_.size()) +
                        " does not match expected dimension " + std::to_string(*pres_.expected_dim));
        gen_eps_.assign(A().size(), F().zero());
        for (uint32_t g : grouplike_gens) {
            grouplike_.insert(g);
            gen_eps_[g] = F().one();
        }
        build_gen_tables();
    }

    const Field& F() const { return *pres_.field; }
    const Alphabet& A() const { return *pres_.alpha; }
    const Presentation& presentation() const { return pres_; }
    const RewriteSystem& rewrite_system() const { return rws_; }

    size_t dim() const { return basis_.size(); }
    const Word& word(uint32_t i) const { return basis_[i]; }
    const std::vector<Word>& basis() const { return basis_; }
    uint32_t unit_index() const { return 0; }

    uint32_t index_of(const Word& w) const {
        auto it = index_.find(w);
        require(it != index_.end(), "word is not a basis word: " + A().to_string(w));
        return it->second;
    }

    bool is_grouplike_gen(uint32_t g) const { return grouplike_.count(g) > 0; }
    const std::vector<Fq>& gen_counits() const { return gen_eps_; }

    NcPoly normal_form(const NcPoly& p) const { return rws_.reduce(p); }

    SparseVec to_vec(const NcPoly& normal) const {
        SparseVec v;
        for (const auto& [w, c] : normal.terms())
            v.emplace_back(index_of(w), c);
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return v;
    }

    SparseVec reduce_to_vec(const NcPoly& p) const { return to_vec(normal_form(p)); }

    NcPoly to_poly(const SparseVec& v) const {
        NcPoly p(A());
        for (const auto& [i, c] : v)
            p.add_term(F(), basis_[i], c);
        return p;
    }

    // right-multiply a basis element by one generator
    const SparseVec& mult_gen(uint32_t i, uint32_t g) const { return gen_table_[g][i]; }

    SparseVec mult_vec_gen(const SparseVec& v, uint32_t g) const {
        SvBuilder b;
        for (const auto& [i, c] : v)
            for (const auto& [j, d] : gen_table_[g][i])
                b.add(j, F().mul(c, d));
        return b.take(F());
    }

    SparseVec mult_vec_word(SparseVec v, const Word& w) const {
        for (uint8_t g : w)
            v = mult_vec_gen(v, g);
        return v;
    }

    SparseVec mult(uint32_t i, uint32_t j) const {
        uint64_t key = (uint64_t(i) << 32) | j;
        if (auto it = mult_cache_.find(key); it != mult_cache_.end())
            return it->second;
        SparseVec r = mult_vec_word(sv_unit(i, F().one()), basis_[j]);
        if (mult_cache_.size() < mult_cache_cap_)
            mult_cache_.emplace(key, r);
        return r;
    }

    SparseVec mult(const SparseVec& u, const SparseVec& v) const {
        SvBuilder b;
        for (const auto& [j, c] : v) {
            SparseVec uj = mult_vec_word(u, basis_[j]);
            for (const auto& [k, d] : uj)
                b.add(k, F().mul(d, c));
        }
        return b.take(F());
    }

    Fq counit_word(const Word& w) const {
        Fq e = F().one();
        for (uint8_t g : w) {
            e = F().mul(e, gen_eps_[g]);
            if (e.is_zero())
                break;
        }
        return e;
    }

    Fq counit(const SparseVec& v) const {
        Fq e = F().zero();
        for (const auto& [i, c] : v)
            e = F().add(e, F().mul(c, counit_word(basis_[i])));
        return e;
    }

    // graded dimensions by total generator degree; sum equals dim
    std::vector<uint64_t> hilbert_series() const {
        std::vector<uint64_t> h;
        for (const auto& w : basis_) {
            uint64_t d = A().degree(w);
            if (h.size() <= d)
                h.resize(d + 1, 0);
            ++h[d];
        }
        return h;
    }

    uint64_t word_degree(uint32_t i) const { return A().degree(basis_[i]); }

    std::vector<int64_t> word_multidegree(uint32_t i) const { return pres_.multidegree(basis_[i]); }

    // every nonzero vector Gamma-homogeneous of this multidegree? (throws if mixed)
    std::vector<int64_t> vec_multidegree(const SparseVec& v) const {
        require(!v.empty(), "multidegree of zero vector");
        auto md = word_multidegree(v.front().first);
        for (const auto& [i, c] : v)
            require(word_multidegree(i) == md, "vector is not multihomogeneous");
        return md;
    }

private:
    void build_gen_tables() {
        gen_table_.assign(A().size(), {});
        for (size_t g = 0; g < A().size(); ++g) {
            gen_table_[g].resize(basis_.size());
            for (uint32_t i = 0; i < basis_.size(); ++i) {
                Word w = basis_[i];
                w.push_back(uint8_t(g));
                auto it = index_.find(w);
                if (it != index_.end())
                    gen_table_[g][i] = sv_unit(it->second, F().one());
                else
                    gen_table_[g][i] = to_vec(rws_.reduce_word(w));
            }
        }
    }

    Presentation pres_;
    RewriteSystem rws_;
    std::vector<Word> basis_;
    std::unordered_map<Word, uint32_t, WordHash> index_;
    std::unordered_set<uint32_t> grouplike_;
    std::vector<Fq> gen_eps_;
    std::vector<std::vector<SparseVec>> gen_table_;
    mutable std::unordered_map<uint64_t, SparseVec> mult_cache_;
    mutable size_t mult_cache_cap_ = 2'000'000;
};

inline std::vector<uint64_t> hilbert_series(const FinBasisAlgebra& alg) {
    return alg.hilbert_series();
}

} // namespace nichols
