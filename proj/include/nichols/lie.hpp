#pragma once

#include <random>

#include "nichols/braided.hpp"
#include "nichols/hopf.hpp"

// Restricted Lie algebras in characteristic p: bracket tables, p-operations,
// the s_i polynomials, matched pairs and double crossproducts, restricted
// enveloping algebras, and the semidirect products V(G) x| n.

namespace nichols {

class RestrictedLie {
public:
    RestrictedLie(std::shared_ptr<const Field> f, std::vector<std::string> names)
        : field_(std::move(f)), names_(std::move(names)),
          bracket_(names_.size(), std::vector<SparseVec>(names_.size())),
          p_op_(names_.size()) {}

    const Field& F() const { return *field_; }
    std::shared_ptr<const Field> field_ptr() const { return field_; }
    size_t dim() const { return names_.size(); }
    const std::string& name(uint32_t i) const { return names_[i]; }

    void set_bracket(uint32_t i, uint32_t j, SparseVec v) {
        bracket_[i][j] = v;
        bracket_[j][i] = sv_scale(F(), v, F().neg(F().one()));
    }
    void set_p_op(uint32_t i, SparseVec v) { p_op_[i] = std::move(v); }

    const SparseVec& bracket_basis(uint32_t i, uint32_t j) const { return bracket_[i][j]; }
    const SparseVec& p_op_basis(uint32_t i) const { return p_op_[i]; }

    SparseVec bracket(const SparseVec& a, const SparseVec& b) const {
        SvBuilder acc;
        for (const auto& [i, c] : a)
            for (const auto& [j, d] : b) {
                Fq cd = F().mul(c, d);
                for (const auto& [k, e] : bracket_[i][j])
                    acc.add(k, F().mul(cd, e));
            }
        return acc.take(F());
    }

    DenseMatrix ad(const SparseVec& s) const {
        DenseMatrix m(dim(), dim());
        for (uint32_t j = 0; j < dim(); ++j)
            m.set_col(j, bracket(s, sv_unit(j, F().one())));
        return m;
    }

    // the coefficient of X^{i-1} in ad(Xs + t)^{p-1}(s), computed by carrying
    // vectors of polynomials in the formal variable X
    SparseVec s_poly(uint32_t i, const SparseVec& s, const SparseVec& t) const {
        const uint32_t p = F().p();
        require(i >= 1 && i <= p - 1, "s_i needs 1 <= i <= p-1");
        // w[d] = coefficient vector of X^d
        std::vector<SparseVec> w(p, SparseVec{});
        w[0] = s;
        for (uint32_t step = 0; step < p - 1; ++step) {
            std::vector<SparseVec> next(p, SparseVec{});
            for (uint32_t d = 0; d < p; ++d) {
                if (w[d].empty())
                    continue;
                SparseVec xs = bracket(s, w[d]);
                if (d + 1 < p && !xs.empty())
                    next[d + 1] = sv_add(F(), next[d + 1], xs, F().one());
                SparseVec ts = bracket(t, w[d]);
                if (!ts.empty())
                    next[d] = sv_add(F(), next[d], ts, F().one());
            }
            w = std::move(next);
        }
        return w[i - 1];
    }

    // semilinear extension of the p-operation to arbitrary elements via
    // (a+b)^[p] = a^[p] + b^[p] + sum s_i(a,b)/i and (ka)^[p] = k^p a^[p]
    SparseVec p_power(const SparseVec& v) const {
        if (v.empty())
            return {};
        if (v.size() == 1)
            return sv_scale(F(), p_op_[v[0].first], F().pow(v[0].second, F().p()));
        SparseVec head{v[0]};
        SparseVec tail(v.begin() + 1, v.end());
        SparseVec out = sv_add(F(), p_power(head), p_power(tail), F().one());
        for (uint32_t i = 1; i <= F().p() - 1; ++i) {
            SparseVec si = s_poly(i, head, tail);
            if (!si.empty())
                out = sv_add(F(), out, si, F().inv(F().from_int(i)));
        }
        return out;
    }

private:
    std::shared_ptr<const Field> field_;
    std::vector<std::string> names_;
    std::vector<std::vector<SparseVec>> bracket_;
    std::vector<SparseVec> p_op_;
};

struct LieCheckReport {
    bool antisymmetric = false;
    bool jacobi = false;
    bool semilinear = false;    // (ks)^[p] = k^p s^[p]
    bool ad_compatible = false; // ad(s^[p]) = ad(s)^p
    bool sum_formula = false;   // (s+t)^[p] = s^[p] + t^[p] + sum s_i/i
    std::string witness;
    bool pass() const {
        return antisymmetric && jacobi && semilinear && ad_compatible && sum_formula;
    }
};

inline SparseVec random_lie_vec(const RestrictedLie& L, std::mt19937& gen) {
    std::uniform_int_distribution<uint64_t> coef(0, L.F().order() - 1);
    SvBuilder b;
    for (uint32_t i = 0; i < L.dim(); ++i)
        b.add(i, L.F().element(coef(gen)));
    return b.take(L.F());
}

inline LieCheckReport verify_restricted(const RestrictedLie& L, uint32_t random_checks = 200,
                                        uint32_t seed = 0x11) {
    LieCheckReport rep;
    const Field& F = L.F();
    const uint32_t n = uint32_t(L.dim());

    rep.antisymmetric = true;
    for (uint32_t i = 0; i < n && rep.antisymmetric; ++i) {
        if (!L.bracket_basis(i, i).empty()) {
            rep.antisymmetric = false;
            rep.witness = "[x,x] != 0 at " + L.name(i);
        }
        for (uint32_t j = 0; j < n; ++j)
            if (L.bracket_basis(i, j) !=
                sv_scale(F, L.bracket_basis(j, i), F.neg(F.one()))) {
                rep.antisymmetric = false;
                rep.witness = "antisymmetry fails at (" + L.name(i) + "," + L.name(j) + ")";
            }
    }

    rep.jacobi = true;
    for (uint32_t i = 0; i < n && rep.jacobi; ++i)
        for (uint32_t j = 0; j < n && rep.jacobi; ++j)
            for (uint32_t k = 0; k < n; ++k) {
                SparseVec a = sv_unit(i, F.one()), b = sv_unit(j, F.one()),
                          c = sv_unit(k, F.one());
                SparseVec s = L.bracket(L.bracket(a, b), c);
                s = sv_add(F, s, L.bracket(L.bracket(b, c), a), F.one());
                s = sv_add(F, s, L.bracket(L.bracket(c, a), b), F.one());
                if (!s.empty()) {
                    rep.jacobi = false;
                    rep.witness = "Jacobi fails at (" + L.name(i) + "," + L.name(j) + "," +
                                  L.name(k) + ")";
                    break;
                }
            }

    std::mt19937 gen(seed);
    std::uniform_int_distribution<uint64_t> coef(1, F.order() - 1);

    rep.semilinear = true;
    for (uint32_t trial = 0; trial < random_checks && rep.semilinear; ++trial) {
        Fq k = F.element(coef(gen));
        SparseVec s = random_lie_vec(L, gen);
        SparseVec lhs = L.p_power(sv_scale(F, s, k));
        SparseVec rhs = sv_scale(F, L.p_power(s), F.pow(k, F.p()));
        if (lhs != rhs) {
            rep.semilinear = false;
            rep.witness = "(ks)^[p] != k^p s^[p]";
        }
    }

    rep.ad_compatible = true;
    auto check_ad = [&](const SparseVec& s) {
        DenseMatrix ads = L.ad(s);
        DenseMatrix pw = DenseMatrix::identity(F, n);
        for (uint32_t i = 0; i < F.p(); ++i)
            pw = pw.times(F, ads);
        return pw == L.ad(L.p_power(s));
    };
    for (uint32_t i = 0; i < n && rep.ad_compatible; ++i)
        if (!check_ad(sv_unit(i, F.one()))) {
            rep.ad_compatible = false;
            rep.witness = "ad(s^[p]) != ad(s)^p at basis " + L.name(i);
        }
    for (uint32_t trial = 0; trial < random_checks && rep.ad_compatible; ++trial)
        if (!check_ad(random_lie_vec(L, gen))) {
            rep.ad_compatible = false;
            rep.witness = "ad(s^[p]) != ad(s)^p at a random element";
        }

    rep.sum_formula = true;
    for (uint32_t trial = 0; trial < random_checks && rep.sum_formula; ++trial) {
        SparseVec s = random_lie_vec(L, gen), t = random_lie_vec(L, gen);
        SparseVec lhs = L.p_power(sv_add(F, s, t, F.one()));
        SparseVec rhs = sv_add(F, L.p_power(s), L.p_power(t), F.one());
        for (uint32_t i = 1; i <= F.p() - 1; ++i)
            rhs = sv_add(F, rhs, L.s_poly(i, s, t), F.inv(F.from_int(i)));
        if (lhs != rhs) {
            rep.sum_formula = false;
            rep.witness = "Jacobson sum formula fails";
        }
    }
    return rep;
}

// --- matched pairs -----------------------------------------------------------

// (g, l, |>, <|): l acts on g from the left, g acts on l from the right
struct MatchedPairRL {
    RestrictedLie g, l;
    std::vector<std::vector<SparseVec>> lact; // lact[li][gj] = e^l_i |> e^g_j in g
    std::vector<std::vector<SparseVec>> ract; // ract[li][gj] = e^l_i <| e^g_j in l

    const Field& F() const { return g.F(); }

    SparseVec tri(const SparseVec& lv, const SparseVec& gv) const {
        SvBuilder acc;
        for (const auto& [i, c] : lv)
            for (const auto& [j, d] : gv) {
                Fq cd = F().mul(c, d);
                for (const auto& [k, e] : lact[i][j])
                    acc.add(k, F().mul(cd, e));
            }
        return acc.take(F());
    }
    SparseVec trir(const SparseVec& lv, const SparseVec& gv) const {
        SvBuilder acc;
        for (const auto& [i, c] : lv)
            for (const auto& [j, d] : gv) {
                Fq cd = F().mul(c, d);
                for (const auto& [k, e] : ract[i][j])
                    acc.add(k, F().mul(cd, e));
            }
        return acc.take(F());
    }
};

struct MatchedPairReport {
    bool left_action = false;   // [l,m] |> x = l |> (m |> x) - m |> (l |> x)
    bool right_action = false;  // l <| [x,y] = (l <| x) <| y - (l <| y) <| x
    bool compat_l = false;      // eq for [l,m] <| x
    bool compat_g = false;      // eq for l |> [x,y]
    bool p_action_left = false; // l^[p] |> x = l |> ... |> x (p times)
    bool p_action_right = false;
    bool restricted_left = false;  // l^[p] <| y expansion
    bool restricted_right = false; // l |> y^[p] expansion
    std::string witness;
    bool pass() const {
        return left_action && right_action && compat_l && compat_g && p_action_left &&
               p_action_right && restricted_left && restricted_right;
    }
};

inline MatchedPairReport verify_matched_pair(const MatchedPairRL& mp) {
    MatchedPairReport rep;
    const Field& F = mp.F();
    const uint32_t ng = uint32_t(mp.g.dim()), nl = uint32_t(mp.l.dim());
    const uint32_t p = F.p();
    auto eg = [&](uint32_t i) { return sv_unit(i, F.one()); };

    rep.left_action = true;
    for (uint32_t a = 0; a < nl; ++a)
        for (uint32_t b = 0; b < nl; ++b)
            for (uint32_t x = 0; x < ng; ++x) {
                SparseVec lhs = mp.tri(mp.l.bracket_basis(a, b), eg(x));
                SparseVec rhs = sv_add(F, mp.tri(eg(a), mp.tri(eg(b), eg(x))),
                                       mp.tri(eg(b), mp.tri(eg(a), eg(x))), F.neg(F.one()));
                if (lhs != rhs) {
                    rep.left_action = false;
                    rep.witness = "left action axiom";
                }
            }

    rep.right_action = true;
    for (uint32_t a = 0; a < nl; ++a)
        for (uint32_t x = 0; x < ng; ++x)
            for (uint32_t y = 0; y < ng; ++y) {
                SparseVec lhs = mp.trir(eg(a), mp.g.bracket_basis(x, y));
                SparseVec rhs = sv_add(F, mp.trir(mp.trir(eg(a), eg(x)), eg(y)),
                                       mp.trir(mp.trir(eg(a), eg(y)), eg(x)), F.neg(F.one()));
                if (lhs != rhs) {
                    rep.right_action = false;
                    rep.witness = "right action axiom";
                }
            }

    // [l,m] <| x = [l <| x, m] + [l, m <| x] + l <| (m |> x) - m <| (l |> x)
    rep.compat_l = true;
    for (uint32_t a = 0; a < nl; ++a)
        for (uint32_t b = 0; b < nl; ++b)
            for (uint32_t x = 0; x < ng; ++x) {
                SparseVec lhs = mp.trir(mp.l.bracket_basis(a, b), eg(x));
                SparseVec rhs = mp.l.bracket(mp.trir(eg(a), eg(x)), eg(b));
                rhs = sv_add(F, rhs, mp.l.bracket(eg(a), mp.trir(eg(b), eg(x))), F.one());
                rhs = sv_add(F, rhs, mp.trir(eg(a), mp.tri(eg(b), eg(x))), F.one());
                rhs = sv_add(F, rhs, mp.trir(eg(b), mp.tri(eg(a), eg(x))), F.neg(F.one()));
                if (lhs != rhs) {
                    rep.compat_l = false;
                    rep.witness = "mixed compatibility on l";
                }
            }

    // l |> [x,y] = [l |> x, y] + [x, l |> y] + (l <| x) |> y - (l <| y) |> x
    rep.compat_g = true;
    for (uint32_t a = 0; a < nl; ++a)
        for (uint32_t x = 0; x < ng; ++x)
            for (uint32_t y = 0; y < ng; ++y) {
                SparseVec lhs = mp.tri(eg(a), mp.g.bracket_basis(x, y));
                SparseVec rhs = mp.g.bracket(mp.tri(eg(a), eg(x)), eg(y));
                rhs = sv_add(F, rhs, mp.g.bracket(eg(x), mp.tri(eg(a), eg(y))), F.one());
                rhs = sv_add(F, rhs, mp.tri(mp.trir(eg(a), eg(x)), eg(y)), F.one());
                rhs = sv_add(F, rhs, mp.tri(mp.trir(eg(a), eg(y)), eg(x)), F.neg(F.one()));
                if (lhs != rhs) {
                    rep.compat_g = false;
                    rep.witness = "mixed compatibility on g";
                }
            }

    // p-actions: the p-operation acts as the p-th operator power
    rep.p_action_left = true;
    for (uint32_t a = 0; a < nl; ++a)
        for (uint32_t x = 0; x < ng; ++x) {
            SparseVec lhs = mp.tri(mp.l.p_op_basis(a), eg(x));
            SparseVec rhs = eg(x);
            for (uint32_t i = 0; i < p; ++i)
                rhs = mp.tri(eg(a), rhs);
            if (lhs != rhs) {
                rep.p_action_left = false;
                rep.witness = "|> is not a p-action";
            }
        }
    rep.p_action_right = true;
    for (uint32_t a = 0; a < nl; ++a)
        for (uint32_t x = 0; x < ng; ++x) {
            SparseVec lhs = mp.trir(eg(a), mp.g.p_op_basis(x));
            SparseVec rhs = eg(a);
            for (uint32_t i = 0; i < p; ++i)
                rhs = mp.trir(rhs, eg(x));
            if (lhs != rhs) {
                rep.p_action_right = false;
                rep.witness = "<| is not a p-action";
            }
        }

    // l^[p] <| y = sum_{i=0}^{p-1} (ad l)^i ( l <| (l^{p-1-i} |> y) )
    rep.restricted_left = true;
    for (uint32_t a = 0; a < nl; ++a)
        for (uint32_t y = 0; y < ng; ++y) {
            SparseVec lhs = mp.trir(mp.l.p_op_basis(a), eg(y));
            SparseVec rhs;
            for (uint32_t i = 0; i <= p - 1; ++i) {
                SparseVec inner = eg(y);
                for (uint32_t k = 0; k < p - 1 - i; ++k)
                    inner = mp.tri(eg(a), inner);
                SparseVec term = mp.trir(eg(a), inner);
                for (uint32_t k = 0; k < i; ++k)
                    term = mp.l.bracket(eg(a), term);
                rhs = sv_add(F, rhs, term, F.one());
            }
            if (lhs != rhs) {
                rep.restricted_left = false;
                rep.witness = "restricted compatibility for l^[p] <| y";
            }
        }

    // l |> y^[p] = sum_{i=0}^{p-1} (-1)^i (ad y)^i ( (l <| y^{p-1-i}) |> y )
    rep.restricted_right = true;
    for (uint32_t a = 0; a < nl; ++a)
        for (uint32_t y = 0; y < ng; ++y) {
            SparseVec lhs = mp.tri(eg(a), mp.g.p_op_basis(y));
            SparseVec rhs;
            Fq sign = F.one();
            for (uint32_t i = 0; i <= p - 1; ++i) {
                SparseVec la = eg(a);
                for (uint32_t k = 0; k < p - 1 - i; ++k)
                    la = mp.trir(la, eg(y));
                SparseVec term = mp.tri(la, eg(y));
                for (uint32_t k = 0; k < i; ++k)
                    term = mp.g.bracket(eg(y), term);
                rhs = sv_add(F, rhs, term, sign);
                sign = F.neg(sign);
            }
            if (lhs != rhs) {
                rep.restricted_right = false;
                rep.witness = "restricted compatibility for l |> y^[p]";
            }
        }
    return rep;
}

// g (+) l with bracket [(x,a),(y,b)] = ([x,y] + a|>y - b|>x, [a,b] + a<|y - b<|x)
// and p-operation extending the factors via the Jacobson sum formula
inline RestrictedLie double_cross(const MatchedPairRL& mp) {
    const Field& F = mp.F();
    const uint32_t ng = uint32_t(mp.g.dim()), nl = uint32_t(mp.l.dim());
    std::vector<std::string> names;
    for (uint32_t i = 0; i < ng; ++i)
        names.push_back(mp.g.name(i));
    for (uint32_t i = 0; i < nl; ++i)
        names.push_back(mp.l.name(i));
    RestrictedLie d(mp.g.field_ptr(), names);
    auto emb_g = [&](const SparseVec& v) { return v; };
    auto emb_l = [&](const SparseVec& v) {
        SparseVec out;
        for (const auto& [i, c] : v)
            out.emplace_back(i + ng, c);
        return out;
    };
    for (uint32_t i = 0; i < ng; ++i)
        for (uint32_t j = i + 1; j < ng; ++j)
            d.set_bracket(i, j, emb_g(mp.g.bracket_basis(i, j)));
    for (uint32_t a = 0; a < nl; ++a)
        for (uint32_t b = a + 1; b < nl; ++b)
            d.set_bracket(ng + a, ng + b, emb_l(mp.l.bracket_basis(a, b)));
    for (uint32_t a = 0; a < nl; ++a)
        for (uint32_t x = 0; x < ng; ++x) {
            // [(0,a),(x,0)] = (a |> x, a <| x)
            SparseVec v = emb_g(mp.lact[a][x]);
            for (const auto& [k, c] : emb_l(mp.ract[a][x]))
                v = sv_add(F, v, SparseVec{{k, c}}, F.one());
            std::sort(v.begin(), v.end(),
                      [](const auto& p1, const auto& p2) { return p1.first < p2.first; });
            d.set_bracket(ng + a, x, v);
        }
    for (uint32_t i = 0; i < ng; ++i)
        d.set_p_op(i, emb_g(mp.g.p_op_basis(i)));
    for (uint32_t a = 0; a < nl; ++a)
        d.set_p_op(ng + a, emb_l(mp.l.p_op_basis(a)));
    return d;
}

// extract the matched pair from an exact factorization: both subspaces must be
// subalgebras and the mixed bracket splits as [a, x] = a|>x + a<|x
inline MatchedPairRL matched_pair_from_factorization(const RestrictedLie& s,
                                                     const std::vector<uint32_t>& g_idx,
                                                     const std::vector<uint32_t>& l_idx) {
    const Field& F = s.F();
    auto sub = [&](const std::vector<uint32_t>& idx, const char* what) {
        std::vector<std::string> names;
        for (auto i : idx)
            names.push_back(s.name(i));
        RestrictedLie L(s.field_ptr(), names);
        std::map<uint32_t, uint32_t> pos;
        for (uint32_t k = 0; k < idx.size(); ++k)
            pos[idx[k]] = k;
        auto project = [&](const SparseVec& v) {
            SparseVec out;
            for (const auto& [i, c] : v) {
                auto it = pos.find(i);
                require(it != pos.end(), std::string(what) + " is not a subalgebra");
                out.emplace_back(it->second, c);
            }
            return out;
        };
        for (uint32_t a = 0; a < idx.size(); ++a) {
            for (uint32_t b = a + 1; b < idx.size(); ++b)
                L.set_bracket(a, b, project(s.bracket_basis(idx[a], idx[b])));
            L.set_p_op(a, project(s.p_op_basis(idx[a])));
        }
        return L;
    };
    MatchedPairRL mp{sub(g_idx, "g"), sub(l_idx, "l"), {}, {}};
    std::map<uint32_t, std::pair<bool, uint32_t>> where; // ambient -> (is_l, pos)
    for (uint32_t k = 0; k < g_idx.size(); ++k)
        where[g_idx[k]] = {false, k};
    for (uint32_t k = 0; k < l_idx.size(); ++k)
        where[l_idx[k]] = {true, k};
    require(where.size() == s.dim(), "factorization does not cover the algebra");
    mp.lact.assign(l_idx.size(), std::vector<SparseVec>(g_idx.size()));
    mp.ract.assign(l_idx.size(), std::vector<SparseVec>(g_idx.size()));
    for (uint32_t a = 0; a < l_idx.size(); ++a)
        for (uint32_t x = 0; x < g_idx.size(); ++x) {
            SvBuilder gpart, lpart;
            for (const auto& [i, c] : s.bracket_basis(l_idx[a], g_idx[x])) {
                auto [is_l, pos] = where.at(i);
                (is_l ? lpart : gpart).add(pos, c);
            }
            mp.lact[a][x] = gpart.take(F);
            mp.ract[a][x] = lpart.take(F);
        }
    return mp;
}

// --- the restricted Lie algebra l = V(G) x| n of the split extensions -------

struct GhostLie {
    RestrictedLie lie;
    uint32_t t = 0;
    // basis order: E_1..E_t, then v_{h,m} for points h ascending, m lex in A_h
    std::vector<std::pair<uint32_t, std::vector<uint32_t>>> v_labels; // (point, m)
    uint32_t e_index(uint32_t j) const { return j; }
    uint32_t v_index(uint32_t h, const std::vector<uint32_t>& m) const {
        for (uint32_t k = 0; k < v_labels.size(); ++k)
            if (v_labels[k].first == h && v_labels[k].second == m)
                return t + k;
        throw FieldError("no such v basis vector");
    }
};

// ghost rows indexed by point (h = t..t+rows-1): bracket [E_j, v_{h,m}] =
// v_{h,m+e_j} inside the box, 0 outside; everything else commutes; p-op 0
inline GhostLie build_l(const std::vector<std::vector<uint32_t>>& ghost_rows, uint32_t t,
                        std::shared_ptr<const Field> field) {
    for (const auto& row : ghost_rows) {
        require(row.size() == t, "each ghost row needs one entry per block");
        for (uint32_t gv : row)
            require(gv < field->p(), "ghost entries must lie in 0..p-1");
    }
    std::vector<std::string> names;
    for (uint32_t j = 0; j < t; ++j)
        names.push_back("E" + std::to_string(j + 1));
    std::vector<std::pair<uint32_t, std::vector<uint32_t>>> vl;
    for (uint32_t r = 0; r < ghost_rows.size(); ++r)
        for (const auto& m : box_lattice(ghost_rows[r])) {
            std::string nm = "v" + std::to_string(t + r + 1) + "_";
            for (uint32_t c : m)
                nm += std::to_string(c);
            names.push_back(nm);
            vl.emplace_back(t + r, m);
        }
    RestrictedLie L(field, names);
    const Field& F = *field;
    GhostLie gl{std::move(L), t, std::move(vl)};
    for (uint32_t j = 0; j < t; ++j)
        for (uint32_t k = 0; k < gl.v_labels.size(); ++k) {
            const auto& [h, m] = gl.v_labels[k];
            if (m[j] < ghost_rows[h - t][j]) {
                auto next = m;
                ++next[j];
                gl.lie.set_bracket(gl.e_index(j), gl.t + k,
                                   sv_unit(gl.v_index(h, next), F.one()));
            }
        }
    return gl;
}

// --- restricted enveloping algebra ------------------------------------------

struct EnvelopingAlgebra {
    AlgPtr alg;
    std::shared_ptr<PresentedHopf> hopf;
};

// u(L): generators = basis of L, relations uv - vu - [u,v] and u^p - u^[p];
// all generators primitive; dim p^{dim L}
inline EnvelopingAlgebra restricted_enveloping(const RestrictedLie& L) {
    PresentationBuilder b(L.field_ptr());
    const Field& F = L.F();
    const uint32_t n = uint32_t(L.dim());
    for (uint32_t i = 0; i < n; ++i)
        b.add_generator(L.name(i), 1, {});
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = i + 1; j < n; ++j) {
            NcPoly r = b.poly();
            r.add_term(F, Word{uint8_t(j), uint8_t(i)}, F.one());
            r.add_term(F, Word{uint8_t(i), uint8_t(j)}, F.neg(F.one()));
            for (const auto& [k, c] : L.bracket_basis(j, i))
                r.add_term(F, Word{uint8_t(k)}, F.neg(c));
            b.add_relation(r);
        }
    for (uint32_t i = 0; i < n; ++i) {
        NcPoly r = b.mono(word_pow(uint8_t(i), F.p()));
        for (const auto& [k, c] : L.p_op_basis(i))
            r.add_term(F, Word{uint8_t(k)}, F.neg(c));
        b.add_relation(r);
    }
    uint64_t dim = 1;
    for (uint32_t i = 0; i < n; ++i)
        dim *= F.p();
    auto pres = b.build(dim);
    pres.pbw_generators = n;
    pres.suggested_bound = (F.p() - 1) * uint64_t(n) + 2;
    auto alg = std::make_shared<FinBasisAlgebra>(pres, complete(pres));
    std::vector<TensorElement> dg(n);
    std::vector<Fq> eps(n, F.zero());
    std::vector<SparseVec> sg(n);
    for (uint32_t i = 0; i < n; ++i) {
        dg[i] = primitive_delta(*alg, i);
        sg[i] = sv_unit(alg->index_of(Word{uint8_t(i)}), F.neg(F.one()));
    }
    auto hopf = std::make_shared<PresentedHopf>(alg, std::move(dg), std::move(eps), std::move(sg));
    return {alg, hopf};
}

} // namespace nichols
