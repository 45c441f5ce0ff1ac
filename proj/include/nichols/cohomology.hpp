#pragma once

#include "nichols/algebra.hpp"
#include "nichols/linalg.hpp"

// Betti numbers b_n = dim Ext^n_A(k,k) of augmented finite-dimensional
// algebras, by two independent routes: the reduced bar complex and a minimal
// graded free resolution. Group invariants of the bar cohomology for algebras
// carrying a finite group action.

namespace nichols {

struct BettiTable {
    std::vector<uint64_t> b;
    std::string method;
    bool truncated = false; // a budget guard cut the table short
    std::string note;
};

class AugmentedAlgebra {
public:
    explicit AugmentedAlgebra(const FinBasisAlgebra& A) : A_(&A) {
        const Field& F = A.F();
        for (uint32_t i = 0; i < A.dim(); ++i) {
            if (i == A.unit_index())
                continue;
            plus_index_.push_back(i);
            eps_.push_back(A.counit_word(A.word(i)));
        }
        pos_.assign(A.dim(), UINT32_MAX);
        for (uint32_t k = 0; k < plus_index_.size(); ++k)
            pos_[plus_index_[k]] = k;
        (void)F;
    }

    const FinBasisAlgebra& A() const { return *A_; }
    const Field& F() const { return A_->F(); }
    size_t dim_plus() const { return plus_index_.size(); }

    // expansion of the product of two augmentation-ideal basis vectors
    // (w_i - eps_i 1)(w_j - eps_j 1) in the adjusted basis
    SparseVec mult_plus(uint32_t i, uint32_t j) const {
        const Field& F = A_->F();
        SvBuilder acc;
        for (const auto& [k, c] : A_->mult(plus_index_[i], plus_index_[j]))
            if (pos_[k] != UINT32_MAX)
                acc.add(pos_[k], c);
        if (!eps_[j].is_zero())
            acc.add(i, F.neg(eps_[j]));
        if (!eps_[i].is_zero())
            acc.add(j, F.neg(eps_[i]));
        return acc.take(F);
    }

    uint64_t degree_plus(uint32_t i) const { return A_->word_degree(plus_index_[i]); }
    uint32_t ambient_index(uint32_t i) const { return plus_index_[i]; }
    int64_t plus_position(uint32_t ambient) const {
        return pos_[ambient] == UINT32_MAX ? -1 : int64_t(pos_[ambient]);
    }

private:
    const FinBasisAlgebra* A_;
    std::vector<uint32_t> plus_index_;
    std::vector<Fq> eps_;
    std::vector<uint32_t> pos_;
};

namespace detail {

// sparse rows of the reduced bar differential d: C^n -> C^{n+1} on dual bases:
// row T (an (n+1)-tuple) has entries at the n-tuples obtained by multiplying
// adjacent letters, with alternating signs
inline std::vector<SparseVec> bar_rows(const AugmentedAlgebra& A, uint32_t n) {
    const Field& F = A.F();
    const uint64_t D = A.dim_plus();
    uint64_t rows = 1;
    for (uint32_t i = 0; i < n + 1; ++i)
        rows *= D;
    std::vector<SparseVec> out;
    out.reserve(rows);
    std::vector<uint32_t> T(n + 1, 0);
    for (uint64_t r = 0; r < rows; ++r) {
        SvBuilder row;
        Fq sign = F.neg(F.one());
        for (uint32_t i = 0; i + 1 <= n; ++i) {
            // contract positions i, i+1: tuple S = T with both replaced by m
            for (const auto& [m, c] : A.mult_plus(T[i], T[i + 1])) {
                uint64_t idx = 0;
                for (uint32_t s = 0; s < n + 1; ++s) {
                    if (s == i + 1)
                        continue;
                    uint32_t coord = (s == i) ? m : T[s];
                    idx = idx * D + coord;
                }
                row.add(uint32_t(idx), F.mul(sign, c));
            }
            sign = F.neg(sign);
        }
        out.push_back(row.take(F));
        // odometer
        for (size_t s = T.size(); s-- > 0;) {
            if (++T[s] < D)
                break;
            T[s] = 0;
        }
    }
    return out;
}

inline std::vector<SparseVec> transpose_rows(const std::vector<SparseVec>& rows, uint64_t ncols) {
    std::vector<SparseVec> cols(ncols);
    for (uint32_t r = 0; r < rows.size(); ++r)
        for (const auto& [c, v] : rows[r])
            cols[c].emplace_back(r, v);
    return cols;
}

// kernel basis of the map given by sparse columns, via augmented elimination
inline std::vector<SparseVec> sparse_kernel(const Field& F, const std::vector<SparseVec>& cols) {
    std::map<uint32_t, std::pair<SparseVec, SparseVec>> rows; // pivot -> (col, combo)
    std::vector<SparseVec> kernel;
    for (uint32_t j = 0; j < cols.size(); ++j) {
        SparseVec v = cols[j];
        SparseVec combo = sv_unit(j, F.one());
        while (!v.empty()) {
            auto it = rows.find(v.front().first);
            if (it == rows.end())
                break;
            Fq f = F.neg(v.front().second);
            v = sv_add(F, v, it->second.first, f);
            combo = sv_add(F, combo, it->second.second, f);
        }
        if (v.empty()) {
            kernel.push_back(std::move(combo));
        } else {
            Fq inv = F.inv(v.front().second);
            rows.emplace(v.front().first,
                         std::make_pair(sv_scale(F, v, inv), sv_scale(F, combo, inv)));
        }
    }
    return kernel;
}

} // namespace detail

// reduced bar complex route; guard: (dim A+)^{n+1} tuples per level
inline BettiTable bar_betti(const AugmentedAlgebra& A, uint32_t N, uint64_t budget = 10'000'000) {
    const Field& F = A.F();
    BettiTable t;
    t.method = "bar";
    const uint64_t D = A.dim_plus();
    t.b.push_back(1); // b_0
    std::vector<uint64_t> rank(N + 1, 0);
    uint64_t level = 1; // D^n
    for (uint32_t n = 1; n <= N; ++n) {
        level *= D;
        uint64_t next = level * D;
        if (next > budget) {
            t.truncated = true;
            t.note = "bar budget exceeded at degree " + std::to_string(n);
            break;
        }
        // rank of d_n: C^n -> C^{n+1}
        auto rows = detail::bar_rows(A, n);
        SparseEchelon ech(F);
        auto cols = detail::transpose_rows(rows, level);
        for (auto& c : cols)
            ech.insert(std::move(c));
        rank[n] = ech.dim();
        // b_n = dim ker(d_n) - rank(d_{n-1}) = D^n - rank_n - rank_{n-1}
        t.b.push_back(level - rank[n] - rank[n - 1]);
    }
    return t;
}

// d o d = 0 for the assembled sparse differentials (exactness of the complex
// data itself, independent of any rank computation)
inline bool bar_differential_squares_to_zero(const AugmentedAlgebra& A, uint32_t N) {
    const Field& F = A.F();
    for (uint32_t n = 1; n + 1 <= N; ++n) {
        auto d1 = detail::bar_rows(A, n);     // C^n -> C^{n+1}
        auto d2 = detail::bar_rows(A, n + 1); // C^{n+1} -> C^{n+2}
        // rows of d2 composed with d1: (d2 d1)[T, S] = sum_R d2[T,R] d1[R,S]
        for (uint32_t T = 0; T < d2.size(); ++T) {
            SvBuilder acc;
            for (const auto& [R, c] : d2[T])
                for (const auto& [S, c2] : d1[R])
                    acc.add(S, F.mul(c, c2));
            if (!acc.take(F).empty())
                return false;
        }
    }
    return true;
}

// --- minimal graded free resolution -------------------------------------------

// requires A graded connected: unit in degree 0, all other basis words in
// positive degree
inline BettiTable minimal_graded_betti(const AugmentedAlgebra& A, uint32_t N,
                                       uint64_t dim_cap = 40'000) {
    const Field& F = A.F();
    const FinBasisAlgebra& alg = A.A();
    for (uint32_t i = 0; i < alg.dim(); ++i)
        require(i == alg.unit_index() || alg.word_degree(i) > 0,
                "minimal resolution requires a connected graded algebra");

    BettiTable t;
    t.method = "minimal";
    t.b.push_back(1);

    const size_t dA = alg.dim();
    // current kernel K inside the free module A^{W}: vectors over slot*dA+i,
    // starting from K_0 = A+ inside F_0 = A
    std::vector<SparseVec> kernel;
    for (uint32_t i = 0; i < dA; ++i)
        if (i != alg.unit_index())
            kernel.push_back(sv_unit(i, F.one()));
    std::vector<uint64_t> slot_degree{0};

    for (uint32_t n = 1; n <= N; ++n) {
        // homogeneous components of the kernel vectors (graded submodule)
        auto deg_of = [&](uint32_t flat) {
            return slot_degree[flat / dA] + alg.word_degree(flat % dA);
        };
        std::map<uint64_t, std::vector<SparseVec>> graded;
        for (const auto& v : kernel) {
            std::map<uint64_t, SparseVec> split;
            for (const auto& [i, c] : v)
                split[deg_of(i)].emplace_back(i, c);
            for (auto& [d, vec] : split)
                graded[d].push_back(std::move(vec));
        }
        // minimal generators degree by degree: quotient by A+ . K
        SparseEchelon aplusk(F); // A+ K, later extended by the chosen generators
        for (const auto& [d, vecs] : graded)
            for (const auto& v : vecs)
                for (uint32_t a = 0; a < dA; ++a) {
                    if (a == alg.unit_index())
                        continue;
                    // a . v slotwise
                    SvBuilder acc;
                    for (const auto& [flat, c] : v) {
                        uint32_t slot = flat / dA, base = flat % dA;
                        for (const auto& [m, cm] : alg.mult(a, base))
                            acc.add(slot * dA + m, F.mul(c, cm));
                    }
                    aplusk.insert(acc.take(F));
                }
        std::vector<SparseVec> new_gens;
        std::vector<uint64_t> new_deg;
        for (const auto& [d, vecs] : graded)
            for (const auto& v : vecs) {
                if (aplusk.insert(v)) {
                    new_gens.push_back(v);
                    new_deg.push_back(d);
                }
            }
        t.b.push_back(new_gens.size());
        if (new_gens.empty())
            break; // the resolution has terminated (A regular in this range)
        if ((n) == N)
            break;
        // next kernel: ker(A^{new_gens} -> K), columns of the map as k-linear map
        require(dA * new_gens.size() <= dim_cap, "minimal resolution cap exceeded");
        std::vector<SparseVec> cols(dA * new_gens.size());
        for (uint32_t g = 0; g < new_gens.size(); ++g)
            for (uint32_t i = 0; i < dA; ++i) {
                // basis_i * gen_g
                SvBuilder acc;
                for (const auto& [flat, c] : new_gens[g]) {
                    uint32_t slot = flat / dA, base = flat % dA;
                    for (const auto& [m, cm] : alg.mult(i, base))
                        acc.add(slot * dA + m, F.mul(c, cm));
                }
                cols[uint64_t(g) * dA + i] = acc.take(F);
            }
        kernel = detail::sparse_kernel(F, cols);
        slot_degree = new_deg;
    }
    return t;
}

// --- group invariants of the bar cohomology -------------------------------------

// the action of a finite abelian group on A by graded algebra automorphisms,
// given by one matrix per generator together with the generator orders
struct GroupAction {
    std::vector<uint32_t> orders;
    std::vector<DenseMatrix> gen_matrices; // dim A x dim A
};

inline BettiTable invariant_betti(const AugmentedAlgebra& A, const GroupAction& act, uint32_t N,
                                  uint64_t budget = 10'000'000) {
    const Field& F = A.F();
    uint64_t group_order = 1;
    for (uint32_t o : act.orders)
        group_order *= o;
    require(group_order % F.p() != 0,
            "invariant cohomology requires the group algebra to be semisimple (p does not "
            "divide |F|)");

    // all group element matrices restricted to A+, inverted (the cochain action
    // precomposes with g^{-1})
    const uint64_t D = A.dim_plus();
    std::vector<DenseMatrix> elems;
    {
        std::vector<uint32_t> cur(act.orders.size(), 0);
        DenseMatrix id = DenseMatrix::identity(F, A.A().dim());
        while (true) {
            DenseMatrix m = id;
            for (size_t i = 0; i < cur.size(); ++i)
                for (uint32_t k = 0; k < cur[i]; ++k)
                    m = m.times(F, act.gen_matrices[i]);
            // restrict to A+ coordinates and invert
            DenseMatrix r(D, D);
            for (uint32_t i = 0; i < D; ++i)
                for (uint32_t j = 0; j < D; ++j)
                    r.at(i, j) = m.at(A.ambient_index(i), A.ambient_index(j));
            auto rinv = r.inverse(F);
            require(rinv.has_value(), "group action is not invertible");
            elems.push_back(std::move(*rinv));
            size_t s = cur.size();
            while (s > 0) {
                --s;
                if (++cur[s] < act.orders[s])
                    break;
                cur[s] = 0;
                if (s == 0)
                    goto done;
            }
            if (cur.empty())
                break;
        }
    done:;
    }

    BettiTable t;
    t.method = "invariant";
    t.b.push_back(1);
    Fq avg = F.inv(F.from_int(int64_t(group_order % F.p())));

    uint64_t level = 1;
    for (uint32_t n = 1; n <= N; ++n) {
        level *= D;
        if (level * D > budget) {
            t.truncated = true;
            t.note = "budget exceeded at degree " + std::to_string(n);
            break;
        }
        auto rows_n = detail::bar_rows(A, n);
        auto cols_n = detail::transpose_rows(rows_n, level);
        auto kernel = detail::sparse_kernel(F, cols_n); // cocycles Z^n
        // coboundaries B^n = image of d_{n-1}
        SparseEchelon bound(F);
        if (n >= 2) {
            auto rows_prev = detail::bar_rows(A, n - 1);
            auto cols_prev = detail::transpose_rows(rows_prev, level / D);
            for (auto& c : cols_prev)
                bound.insert(std::move(c));
        }
        // average each cocycle over the group and count independent classes
        SparseEchelon classes(F);
        uint64_t bn = 0;
        for (const auto& z : kernel) {
            SvBuilder acc;
            for (const auto& g : elems) {
                // (g . z)_T = sum_S z_S prod_i g[S_i, T_i]
                for (const auto& [S, c] : z) {
                    // expand the tensor rows of g at the digits of S
                    std::vector<std::pair<uint64_t, Fq>> partial{{0, c}};
                    uint64_t s = S;
                    std::vector<uint32_t> digits(n);
                    for (uint32_t i = n; i-- > 0;) {
                        digits[i] = uint32_t(s % D);
                        s /= D;
                    }
                    for (uint32_t i = 0; i < n; ++i) {
                        std::vector<std::pair<uint64_t, Fq>> next;
                        for (const auto& [idx, cc] : partial)
                            for (uint32_t tcoord = 0; tcoord < D; ++tcoord) {
                                Fq m = g.at(digits[i], tcoord);
                                if (!m.is_zero())
                                    next.emplace_back(idx * D + tcoord, F.mul(cc, m));
                            }
                        partial = std::move(next);
                    }
                    for (const auto& [idx, cc] : partial)
                        acc.add(uint32_t(idx), cc);
                }
            }
            SparseVec averaged = acc.take(F);
            averaged = sv_scale(F, averaged, avg);
            SparseVec residue = bound.residue(averaged);
            if (!residue.empty() && classes.insert(residue))
                ++bn;
        }
        t.b.push_back(bn);
    }
    return t;
}

// --- polynomial growth probe ----------------------------------------------------

struct FgcProbe {
    bool polynomial_fit = false;
    uint32_t apparent_degree = 0;
    std::string note = "heuristic consistency evidence only, never a proof";
};

inline FgcProbe fgc_probe(const BettiTable& t) {
    FgcProbe p;
    require(t.b.size() >= 4, "probe needs at least four Betti numbers");
    // successive finite differences of b_1.. must eventually vanish
    std::vector<int64_t> cur(t.b.begin() + 1, t.b.end());
    for (uint32_t order = 0; cur.size() >= 2; ++order) {
        bool all_zero = true;
        for (int64_t v : cur)
            all_zero &= v == 0;
        if (all_zero) {
            p.polynomial_fit = true;
            p.apparent_degree = order == 0 ? 0 : order - 1;
            return p;
        }
        std::vector<int64_t> next;
        for (size_t i = 0; i + 1 < cur.size(); ++i)
            next.push_back(cur[i + 1] - cur[i]);
        cur = std::move(next);
    }
    p.note = "no polynomial fit within table; " + p.note;
    return p;
}

} // namespace nichols
