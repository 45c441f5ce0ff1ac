#pragma once

#include <map>
#include <string>

#include "nichols/fq.hpp"
#include "nichols/word.hpp"

// Noncommutative polynomials: finitely supported maps Word -> Fq,
// kept in descending monomial order so the leading term is first.

namespace nichols {

struct WordGreater {
    const Alphabet* alpha = nullptr;
    bool operator()(const Word& a, const Word& b) const { return alpha->less(b, a); }
};

class NcPoly {
public:
    using Terms = std::map<Word, Fq, WordGreater>;

    NcPoly() = default;
    explicit NcPoly(const Alphabet& a) : terms_(WordGreater{&a}) {}

    static NcPoly monomial(const Alphabet& a, const Field& F, const Word& w, Fq c) {
        NcPoly p(a);
        p.add_term(F, w, c);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    const Word& leading_word() const {
        require(!terms_.empty(), "leading word of zero polynomial");
        return terms_.begin()->first;
    }
    Fq leading_coeff() const {
        require(!terms_.empty(), "leading coeff of zero polynomial");
        return terms_.begin()->second;
    }

    Fq coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Fq{} : it->second;
    }

    void add_term(const Field& F, const Word& w, Fq c) {
        if (c.is_zero())
            return;
        auto [it, fresh] = terms_.emplace(w, c);
        if (!fresh) {
            it->second = F.add(it->second, c);
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    void add(const Field& F, const NcPoly& q, Fq scale) {
        if (scale.is_zero())
            return;
        for (const auto& [w, c] : q.terms_)
            add_term(F, w, F.mul(c, scale));
    }

    void add(const Field& F, const NcPoly& q) {
        for (const auto& [w, c] : q.terms_)
            add_term(F, w, c);
    }

    void sub(const Field& F, const NcPoly& q) { add(F, q, F.neg(F.one())); }

    void scale(const Field& F, Fq c) {
        if (c.is_zero()) {
            terms_.clear();
            return;
        }
        for (auto& [w, cf] : terms_)
            cf = F.mul(cf, c);
    }

    void make_monic(const Field& F) {
        if (is_zero())
            return;
        scale(F, F.inv(leading_coeff()));
    }

    // this := left * this * right (word conjugation)
    NcPoly framed(const Field& F, const Word& left, const Word& right) const {
        NcPoly r(alphabet());
        for (const auto& [w, c] : terms_)
            r.add_term(F, left + w + right, c);
        return r;
    }

    NcPoly times(const Field& F, const NcPoly& q) const {
        NcPoly r(alphabet());
        for (const auto& [wu, cu] : terms_)
            for (const auto& [wv, cv] : q.terms_)
                r.add_term(F, wu + wv, F.mul(cu, cv));
        return r;
    }

    const Alphabet& alphabet() const { return *terms_.key_comp().alpha; }

    std::string to_string(const Field& F) const {
        if (terms_.empty())
            return "0";
        std::string s;
        bool first = true;
        for (const auto& [w, c] : terms_) {
            if (!first)
                s += " + ";
            first = false;
            s += F.to_string(c) + "*" + alphabet().to_string(w);
        }
        return s;
    }

    friend bool operator==(const NcPoly& a, const NcPoly& b) {
        if (a.terms_.size() != b.terms_.size())
            return false;
        auto ia = a.terms_.begin();
        auto ib = b.terms_.begin();
        for (; ia != a.terms_.end(); ++ia, ++ib)
            if (ia->first != ib->first || ia->second != ib->second)
                return false;
        return true;
    }

private:
    Terms terms_;
};

} // namespace nichols
