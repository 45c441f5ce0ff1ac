#pragma once

#include "nichols/tensor.hpp"

// Braided vector spaces over abelian groups: blocks-and-points data, ghosts,
// braiding assembly and the braid-equation check.

namespace nichols {

// integer lift of 2a into {1,...,p-1}: the unique G with -G = 2a (mod p);
// a = 0 lifts to 0
inline uint32_t ghost_from_a(uint32_t a_mod_p, uint32_t p) {
    a_mod_p %= p;
    if (a_mod_p == 0)
        return 0;
    // scan r in {1-p,...,-1} for r = 2a (mod p), then G = -r
    for (int64_t r = 1 - int64_t(p); r <= -1; ++r) {
        int64_t rr = ((r % int64_t(p)) + p) % p;
        if (rr == int64_t(2 * a_mod_p) % int64_t(p))
            return uint32_t(-r);
    }
    throw FieldError("no ghost lift found"); // unreachable for p odd
}

// all integer vectors 0 <= n <= bound componentwise, lexicographically sorted
inline std::vector<std::vector<uint32_t>> box_lattice(const std::vector<uint32_t>& bound) {
    std::vector<std::vector<uint32_t>> out;
    std::vector<uint32_t> cur(bound.size(), 0);
    while (true) {
        out.push_back(cur);
        size_t i = bound.size();
        while (i > 0) {
            --i;
            if (cur[i] < bound[i]) {
                ++cur[i];
                for (size_t j = i + 1; j < bound.size(); ++j)
                    cur[j] = 0;
                break;
            }
            if (i == 0)
                return out;
        }
        if (bound.empty())
            return out;
    }
}

// the data (q, a): t blocks, theta - t points, q_ii = 1, q_ij q_ji = 1,
// a over F_p with its integer ghost lift
struct PaperData {
    std::shared_ptr<const Field> field;
    uint32_t t = 0;     // blocks
    uint32_t theta = 0; // blocks + points
    std::vector<std::vector<Fq>> q;      // theta x theta
    std::vector<std::vector<Fq>> a;      // (theta-t) x t over the prime subfield
    std::vector<std::vector<uint32_t>> ghost; // same shape, entries in 0..p-1

    const Field& F() const { return *field; }
    uint32_t points() const { return theta - t; }

    Fq qq(uint32_t i, uint32_t j) const { return q[i][j]; }
    // a and ghost are indexed by (point h in t..theta-1, block j in 0..t-1)
    Fq a_entry(uint32_t h, uint32_t j) const { return a[h - t][j]; }
    uint32_t ghost_entry(uint32_t h, uint32_t j) const { return ghost[h - t][j]; }

    std::vector<uint32_t> ghost_row(uint32_t h) const { return ghost[h - t]; }

    std::vector<std::vector<uint32_t>> box(uint32_t h) const { return box_lattice(ghost_row(h)); }

    uint64_t box_size(uint32_t h) const {
        uint64_t n = 1;
        for (uint32_t g : ghost_row(h))
            n *= g + 1;
        return n;
    }

    // dim B(V(q,a)) = p^{2t + sum_h |A_h|}
    uint64_t nichols_dimension() const {
        uint64_t e = 2 * t;
        for (uint32_t h = t; h < theta; ++h)
            e += box_size(h);
        uint64_t d = 1;
        for (uint64_t i = 0; i < e; ++i)
            d *= field->p();
        return d;
    }

    // lcm of the multiplicative orders of all q_ij
    uint64_t q_order_lcm() const {
        uint64_t l = 1;
        for (uint32_t i = 0; i < theta; ++i)
            for (uint32_t j = 0; j < theta; ++j) {
                uint64_t o = field->mult_order(q[i][j]);
                l = std::lcm(l, o);
            }
        return l;
    }

    bool q_is_one() const {
        for (uint32_t i = 0; i < theta; ++i)
            for (uint32_t j = 0; j < theta; ++j)
                if (q[i][j] != field->one())
                    return false;
        return true;
    }
};

inline PaperData make_paper_data(std::shared_ptr<const Field> field, uint32_t t, uint32_t theta,
                                 std::vector<std::vector<Fq>> q,
                                 std::vector<std::vector<Fq>> a) {
    const Field& F = *field;
    require(t >= 1 && theta >= t, "need 1 <= t <= theta");
    require(q.size() == theta, "q must be theta x theta");
    for (const auto& row : q)
        require(row.size() == theta, "q must be theta x theta");
    require(a.size() == theta - t, "a must be (theta-t) x t");
    for (const auto& row : a)
        require(row.size() == t, "a must be (theta-t) x t");
    for (uint32_t i = 0; i < theta; ++i) {
        require(q[i][i] == F.one(), "q_ii must equal 1");
        for (uint32_t j = 0; j < theta; ++j) {
            require(!q[i][j].is_zero(), "q entries must be nonzero");
            if (i != j)
                require(F.mul(q[i][j], q[j][i]) == F.one(), "q_ij q_ji must equal 1");
        }
    }
    PaperData d;
    d.field = std::move(field);
    d.t = t;
    d.theta = theta;
    d.q = std::move(q);
    d.a = std::move(a);
    d.ghost.resize(theta - t, std::vector<uint32_t>(t, 0));
    for (uint32_t r = 0; r < theta - t; ++r)
        for (uint32_t j = 0; j < t; ++j)
            d.ghost[r][j] = ghost_from_a(F.to_int(d.a[r][j]), F.p());
    return d;
}

// A braided vector space on an explicit basis: c(e_i (x) e_j) given as a
// matrix of coefficient vectors.
struct BraidedSpace {
    std::shared_ptr<const Field> field;
    std::vector<std::string> labels;
    // c(e_i (x) e_j) = sum_{k,l} coeff[(k,l)] e_k (x) e_l, stored sparsely
    // keyed by (i,j) -> list of ((k,l), coeff)
    std::vector<std::vector<std::vector<std::pair<std::pair<uint32_t, uint32_t>, Fq>>>> c;
    std::vector<uint32_t> component; // which V_i each basis vector belongs to

    const Field& F() const { return *field; }
    size_t dim() const { return labels.size(); }
};

namespace detail {

// apply c to tensor legs (a,b) of a 3-tensor at positions (pos, pos+1)
using T3 = std::map<std::array<uint32_t, 3>, Fq>;

inline T3 apply_braiding(const BraidedSpace& V, const T3& t, int pos) {
    T3 out;
    const Field& F = V.F();
    for (const auto& [k, coef] : t) {
        uint32_t a = k[pos], b = k[pos + 1];
        for (const auto& [kl, c] : V.c[a][b]) {
            std::array<uint32_t, 3> nk = k;
            nk[pos] = kl.first;
            nk[pos + 1] = kl.second;
            t3_add(F, out, nk, F.mul(coef, c));
        }
    }
    return out;
}

} // namespace detail

// exhaustive braid-equation check on all basis triples:
// (c x id)(id x c)(c x id) = (id x c)(c x id)(id x c)
inline bool check_braid_equation(const BraidedSpace& V, std::string* witness = nullptr) {
    const size_t n = V.dim();
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j)
            for (uint32_t k = 0; k < n; ++k) {
                detail::T3 start;
                start[{i, j, k}] = V.F().one();
                auto lhs = detail::apply_braiding(
                    V, detail::apply_braiding(V, detail::apply_braiding(V, start, 0), 1), 0);
                auto rhs = detail::apply_braiding(
                    V, detail::apply_braiding(V, detail::apply_braiding(V, start, 1), 0), 1);
                if (lhs != rhs) {
                    if (witness)
                        *witness = "(" + V.labels[i] + ", " + V.labels[j] + ", " + V.labels[k] + ")";
                    return false;
                }
            }
    return true;
}

inline bool braiding_invertible(const BraidedSpace& V) {
    const size_t n = V.dim();
    DenseMatrix m(n * n, n * n);
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j)
            for (const auto& [kl, c] : V.c[i][j])
                m.at(kl.first * n + kl.second, i * n + j) = c;
    return m.rank(V.F()) == n * n;
}

// basis layout for V(q,a): x_1, y_1, ..., x_t, y_t (blocks), then x_{t+1}, ...
// x_theta (points). Every basis vector belongs to one V_i.
struct BasisLayout {
    uint32_t t, theta;
    uint32_t dim() const { return 2 * t + (theta - t); }
    uint32_t x(uint32_t i) const { return i < t ? 2 * i : t + i; } // x_i, 0-based component
    uint32_t y(uint32_t j) const { return 2 * j + 1; }             // j < t
    uint32_t component_of(uint32_t idx) const { return idx < 2 * t ? idx / 2 : idx - t; }
    bool is_y(uint32_t idx) const { return idx < 2 * t && (idx % 2) == 1; }
    std::string label(uint32_t idx) const {
        uint32_t comp = component_of(idx);
        return (is_y(idx) ? "y" : "x") + std::to_string(comp + 1);
    }
};

// assemble the braided vector space V(q,a): blocks of Jordan type V(1,2),
// one-dimensional points, braiding given by q and the block-point entries by a
inline BraidedSpace braided_from_paper_data(const PaperData& d) {
    const Field& F = d.F();
    BasisLayout L{d.t, d.theta};
    BraidedSpace V;
    V.field = d.field;
    const uint32_t n = L.dim();
    V.labels.resize(n);
    V.component.resize(n);
    for (uint32_t i = 0; i < n; ++i) {
        V.labels[i] = L.label(i);
        V.component[i] = L.component_of(i);
    }
    V.c.assign(n, std::vector<std::vector<std::pair<std::pair<uint32_t, uint32_t>, Fq>>>(n));

    // c(u (x) v) = q_{ij} (v + t_{ij}(v)) (x) u for u in V_i, v in V_j;
    // t_{ij}(y_j) = a_{ij} x_j for points i acting on blocks j, t_{jj}(y_j) = x_j
    for (uint32_t u = 0; u < n; ++u) {
        for (uint32_t v = 0; v < n; ++v) {
            uint32_t i = V.component[u], j = V.component[v];
            Fq qij = d.qq(i, j);
            auto& cell = V.c[u][v];
            cell.push_back({{v, u}, qij});
            if (L.is_y(v)) {
                // v = y_j: add the nilpotent part
                if (i == j) {
                    cell.push_back({{L.x(j), u}, qij}); // c(u (x) y_j) += q (x_j) (x) u
                } else if (i >= d.t && j < d.t) {
                    Fq aij = d.a_entry(i, j);
                    if (!aij.is_zero())
                        cell.push_back({{L.x(j), u}, F.mul(qij, aij)});
                }
            }
        }
    }

    std::string w;
    require(check_braid_equation(V, &w), "braid equation fails at triple " + w);
    require(braiding_invertible(V), "braiding not invertible");
    return V;
}

// General blocks-and-points input: a family of component dimensions n_j, the
// q matrix and nilpotent endomorphisms t_ij of each component.
struct AbTriple {
    std::shared_ptr<const Field> field;
    std::vector<uint32_t> n;                       // component dimensions, decreasing
    std::vector<std::vector<Fq>> q;                // theta x theta, invertible entries
    std::vector<std::vector<DenseMatrix>> t;       // t[i][j]: n_j x n_j

    uint32_t theta() const { return uint32_t(n.size()); }
};

inline void validate_ab_triple(const AbTriple& T) {
    const Field& F = *T.field;
    uint32_t th = T.theta();
    for (uint32_t i = 1; i < th; ++i)
        require(T.n[i - 1] >= T.n[i], "component dimensions must be normalized decreasing");
    require(T.q.size() == th && T.t.size() == th, "q and t must be theta x theta");
    for (uint32_t i = 0; i < th; ++i) {
        require(T.q[i].size() == th && T.t[i].size() == th, "q and t must be theta x theta");
        for (uint32_t j = 0; j < th; ++j) {
            require(!T.q[i][j].is_zero(), "q entries must be invertible");
            require(T.t[i][j].rows() == T.n[j] && T.t[i][j].cols() == T.n[j],
                    "t_ij must act on component j");
            if (T.n[j] == 1)
                for (uint32_t r = 0; r < 1; ++r)
                    require(T.t[i][j].at(0, 0).is_zero(), "t_ij must vanish on 1-dim components");
        }
    }
    // t_ik t_jk = t_jk t_ik
    for (uint32_t k = 0; k < th; ++k)
        for (uint32_t i = 0; i < th; ++i)
            for (uint32_t j = 0; j < th; ++j)
                require(T.t[i][k].times(F, T.t[j][k]) == T.t[j][k].times(F, T.t[i][k]),
                        "t_ik and t_jk must commute");
}

// c(x (x) y) = q_ij (y + t_ij(y)) (x) x for x in V_i, y in V_j
inline BraidedSpace braided_from_ab_triple(const AbTriple& T) {
    validate_ab_triple(T);
    const Field& F = *T.field;
    BraidedSpace V;
    V.field = T.field;
    std::vector<uint32_t> offset(T.theta() + 1, 0);
    for (uint32_t j = 0; j < T.theta(); ++j)
        offset[j + 1] = offset[j] + T.n[j];
    uint32_t dim = offset.back();
    V.labels.resize(dim);
    V.component.resize(dim);
    for (uint32_t j = 0; j < T.theta(); ++j)
        for (uint32_t r = 0; r < T.n[j]; ++r) {
            V.labels[offset[j] + r] = "v" + std::to_string(j + 1) + "_" + std::to_string(r);
            V.component[offset[j] + r] = j;
        }
    V.c.assign(dim, std::vector<std::vector<std::pair<std::pair<uint32_t, uint32_t>, Fq>>>(dim));
    for (uint32_t u = 0; u < dim; ++u)
        for (uint32_t v = 0; v < dim; ++v) {
            uint32_t i = V.component[u], j = V.component[v];
            uint32_t vr = v - offset[j];
            auto& cell = V.c[u][v];
            cell.push_back({{v, u}, T.q[i][j]});
            for (uint32_t r = 0; r < T.n[j]; ++r) {
                Fq tc = T.t[i][j].at(r, vr);
                if (!tc.is_zero())
                    cell.push_back({{offset[j] + r, u}, F.mul(T.q[i][j], tc)});
            }
        }
    std::string w;
    require(check_braid_equation(V, &w), "braid equation fails at triple " + w);
    require(braiding_invertible(V), "braiding not invertible");
    return V;
}

// the bilinear form p on the grading group: p(e_i, e_j) = q_{ij} extended
// bimultiplicatively (beta legs share their block index)
inline Fq p_form(const PaperData& d, const std::vector<int64_t>& gamma,
                 const std::vector<int64_t>& delta) {
    // exponent vectors over the theta indices (alpha_i and beta_j collapse to
    // their component index)
    const Field& F = d.F();
    Fq v = F.one();
    for (uint32_t i = 0; i < d.theta; ++i)
        for (uint32_t j = 0; j < d.theta; ++j) {
            int64_t e = gamma[i] * delta[j];
            if (e == 0)
                continue;
            Fq base = d.qq(i, j);
            Fq pw = e > 0 ? F.pow(base, uint64_t(e)) : F.pow(F.inv(base), uint64_t(-e));
            v = F.mul(v, pw);
        }
    return v;
}

inline bool p_form_symmetric(const PaperData& d) {
    for (uint32_t i = 0; i < d.theta; ++i)
        for (uint32_t j = 0; j < d.theta; ++j)
            if (d.qq(i, j) != d.qq(j, i))
                return false;
    return true;
}

// q_ij q_ji = 1 makes the form inverse-symmetric: p(g,d) p(d,g) = 1
inline bool p_form_inverse_symmetric(const PaperData& d) {
    const Field& F = d.F();
    for (uint32_t i = 0; i < d.theta; ++i)
        for (uint32_t j = 0; j < d.theta; ++j)
            if (F.mul(d.qq(i, j), d.qq(j, i)) != F.one())
                return false;
    return true;
}

} // namespace nichols
