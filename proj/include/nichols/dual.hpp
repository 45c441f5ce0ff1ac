#pragma once

#include "nichols/maps.hpp"

// Hopf algebras given by raw structure constants (duals, bicrossed products):
// multiplication table, basis-level comultiplication, counit vector, antipode
// matrix. Axioms are checked exhaustively or by induction from a generating set.

namespace nichols {

class TableAlgebra {
public:
    TableAlgebra(std::shared_ptr<const Field> f, size_t dim)
        : F_(std::move(f)), dim_(dim), table_(dim, std::vector<SparseVec>(dim)), unit_() {}

    const Field& F() const { return *F_; }
    std::shared_ptr<const Field> field_ptr() const { return F_; }
    size_t dim() const { return dim_; }

    void set_product(uint32_t i, uint32_t j, SparseVec v) { table_[i][j] = std::move(v); }
    void set_unit(SparseVec u) { unit_ = std::move(u); }
    void set_label(uint32_t i, std::string s) {
        labels_.resize(dim_);
        labels_[i] = std::move(s);
    }

    const SparseVec& unit() const { return unit_; }
    std::string label(uint32_t i) const {
        return (i < labels_.size() && !labels_[i].empty()) ? labels_[i] : "e" + std::to_string(i);
    }

    const SparseVec& mult(uint32_t i, uint32_t j) const { return table_[i][j]; }

    SparseVec mult(const SparseVec& a, const SparseVec& b) const {
        SvBuilder acc;
        for (const auto& [i, c] : a)
            for (const auto& [j, d] : b) {
                Fq cd = F_->mul(c, d);
                for (const auto& [k, e] : table_[i][j])
                    acc.add(k, F_->mul(cd, e));
            }
        return acc.take(*F_);
    }

private:
    std::shared_ptr<const Field> F_;
    size_t dim_;
    std::vector<std::vector<SparseVec>> table_;
    SparseVec unit_;
    std::vector<std::string> labels_;
};

struct TableHopf {
    TableAlgebra alg;
    std::vector<TensorElement> delta; // per basis index
    std::vector<Fq> eps;
    DenseMatrix antipode;              // dim x dim
    std::vector<uint32_t> generators;  // algebra generating set (for inductive checks)

    const Field& F() const { return alg.F(); }
    size_t dim() const { return alg.dim(); }

    SparseVec antipode_col(uint32_t i) const {
        SparseVec v;
        for (size_t r = 0; r < antipode.rows(); ++r)
            if (!antipode.at(r, i).is_zero())
                v.emplace_back(uint32_t(r), antipode.at(r, i));
        return v;
    }

    SparseVec antipode_vec(const SparseVec& u) const { return antipode.apply(F(), u); }

    TensorElement delta_vec(const SparseVec& v) const {
        TensorElement t;
        for (const auto& [i, c] : v)
            t.add(F(), delta[i], c);
        return t;
    }

    Fq eps_vec(const SparseVec& v) const {
        Fq e = F().zero();
        for (const auto& [i, c] : v)
            e = F().add(e, F().mul(c, eps[i]));
        return e;
    }
};

// Axiom checks for table Hopf algebras. With a generating set the expensive
// multiplicativity checks run on basis x generator pairs and propagate by
// induction (associativity on basis x basis x generator is verified alongside);
// otherwise every pair is checked.
inline HopfCheckReport check_hopf(const TableHopf& h) {
    HopfCheckReport rep;
    const TableAlgebra& A = h.alg;
    const Field& F = h.F();
    const size_t n = h.dim();

    rep.well_defined = true;

    // unit axioms
    for (uint32_t i = 0; i < n && rep.well_defined; ++i) {
        if (A.mult(A.unit(), sv_unit(i, F.one())) != sv_unit(i, F.one()) ||
            A.mult(sv_unit(i, F.one()), A.unit()) != sv_unit(i, F.one())) {
            rep.well_defined = false;
            rep.witness = "unit fails on " + A.label(i);
        }
    }
    // delta(1) = 1 (x) 1, eps(1) = 1, S(1) = 1
    if (rep.well_defined) {
        TensorElement du = h.delta_vec(A.unit());
        if (!(du == TensorElement::simple(F, A.unit(), A.unit())) ||
            h.eps_vec(A.unit()) != F.one() || h.antipode_vec(A.unit()) != A.unit()) {
            rep.well_defined = false;
            rep.witness = "structure maps fail on the unit";
        }
    }

    bool generated = !h.generators.empty();
    if (rep.well_defined && generated) {
        // the declared generators must really generate
        SparseEchelon span(F);
        std::vector<SparseVec> frontier{A.unit()};
        span.insert(A.unit());
        while (!frontier.empty()) {
            std::vector<SparseVec> next;
            for (const auto& v : frontier)
                for (uint32_t g : h.generators) {
                    SparseVec w = A.mult(v, sv_unit(g, F.one()));
                    if (span.insert(w))
                        next.push_back(w);
                }
            frontier = std::move(next);
        }
        if (span.dim() != n) {
            rep.well_defined = false;
            rep.witness = "declared generating set does not generate";
        }
        // associativity (u v) g = u (v g) so products of generators are unambiguous
        for (uint32_t u = 0; u < n && rep.well_defined; ++u)
            for (uint32_t v = 0; v < n && rep.well_defined; ++v) {
                const SparseVec& uv = A.mult(u, v);
                for (uint32_t g : h.generators) {
                    SparseVec lhs = A.mult(uv, sv_unit(g, F.one()));
                    SparseVec rhs = A.mult(sv_unit(u, F.one()), A.mult(v, g));
                    if (lhs != rhs) {
                        rep.well_defined = false;
                        rep.witness = "associativity fails at (" + A.label(u) + ", " + A.label(v) +
                                      ", " + A.label(g) + ")";
                        break;
                    }
                }
            }
    }

    // delta multiplicative
    if (rep.well_defined) {
        auto delta_pair_ok = [&](uint32_t i, uint32_t j) {
            TensorElement lhs = tensor_mult(A, A, h.delta[i], h.delta[j]);
            TensorElement rhs = h.delta_vec(A.mult(i, j));
            return lhs == rhs;
        };
        if (generated) {
            for (uint32_t i = 0; i < n && rep.well_defined; ++i)
                for (uint32_t g : h.generators)
                    if (!delta_pair_ok(i, g)) {
                        rep.well_defined = false;
                        rep.witness = "delta not multiplicative at (" + A.label(i) + ", " +
                                      A.label(g) + ")";
                        break;
                    }
        } else {
            for (uint32_t i = 0; i < n && rep.well_defined; ++i)
                for (uint32_t j = 0; j < n; ++j)
                    if (!delta_pair_ok(i, j)) {
                        rep.well_defined = false;
                        rep.witness = "delta not multiplicative at (" + A.label(i) + ", " +
                                      A.label(j) + ")";
                        break;
                    }
        }
        // eps multiplicative on the same pairs
        for (uint32_t i = 0; i < n && rep.well_defined; ++i)
            for (uint32_t j = 0; j < n; ++j) {
                Fq lhs = F.mul(h.eps[i], h.eps[j]);
                if (lhs != h.eps_vec(A.mult(i, j))) {
                    rep.well_defined = false;
                    rep.witness = "eps not multiplicative at (" + A.label(i) + ", " + A.label(j) + ")";
                    break;
                }
            }
    }

    rep.coassociative = true;
    for (uint32_t i = 0; i < n && rep.coassociative; ++i) {
        Tensor3 lhs, rhs;
        for (const auto& [k, c] : h.delta[i].terms()) {
            for (const auto& [k2, c2] : h.delta[TensorElement::left(k)].terms())
                t3_add(F, lhs,
                       {TensorElement::left(k2), TensorElement::right(k2), TensorElement::right(k)},
                       F.mul(c, c2));
            for (const auto& [k2, c2] : h.delta[TensorElement::right(k)].terms())
                t3_add(F, rhs,
                       {TensorElement::left(k), TensorElement::left(k2), TensorElement::right(k2)},
                       F.mul(c, c2));
        }
        if (!(lhs == rhs)) {
            rep.coassociative = false;
            rep.witness = "coassociativity fails at " + A.label(i);
        }
    }

    rep.counit_ok = true;
    for (uint32_t i = 0; i < n && rep.counit_ok; ++i) {
        SvBuilder lt, rt;
        for (const auto& [k, c] : h.delta[i].terms()) {
            lt.add(TensorElement::right(k), F.mul(c, h.eps[TensorElement::left(k)]));
            rt.add(TensorElement::left(k), F.mul(c, h.eps[TensorElement::right(k)]));
        }
        if (lt.take(F) != sv_unit(i, F.one()) || rt.take(F) != sv_unit(i, F.one())) {
            rep.counit_ok = false;
            rep.witness = "counit axiom fails at " + A.label(i);
        }
    }

    rep.antipode_ok = true;
    for (uint32_t i = 0; i < n && rep.antipode_ok; ++i) {
        SvBuilder lt, rt;
        for (const auto& [k, c] : h.delta[i].terms()) {
            for (const auto& [a, v] :
                 A.mult(h.antipode_col(TensorElement::left(k)),
                        sv_unit(TensorElement::right(k), F.one())))
                lt.add(a, F.mul(c, v));
            for (const auto& [a, v] :
                 A.mult(sv_unit(TensorElement::left(k), F.one()),
                        h.antipode_col(TensorElement::right(k))))
                rt.add(a, F.mul(c, v));
        }
        SparseVec expect = sv_scale(F, A.unit(), h.eps[i]);
        if (lt.take(F) != expect || rt.take(F) != expect) {
            rep.antipode_ok = false;
            rep.witness = "antipode axiom fails at " + A.label(i);
        }
    }
    return rep;
}

// materialize full structure tables of a presented Hopf algebra
inline TableHopf materialize(const PresentedHopf& h, size_t dim_cap = 2000) {
    const FinBasisAlgebra& A = h.alg();
    require(A.dim() <= dim_cap, "dimension exceeds table materialization cap");
    TableAlgebra ta(A.presentation().field, A.dim());
    ta.set_unit(sv_unit(A.unit_index(), A.F().one()));
    for (uint32_t i = 0; i < A.dim(); ++i) {
        ta.set_label(i, A.A().to_string(A.word(i)));
        for (uint32_t j = 0; j < A.dim(); ++j)
            ta.set_product(i, j, A.mult(i, j));
    }
    TableHopf th{std::move(ta), {}, {}, DenseMatrix(A.dim(), A.dim()), {}};
    th.delta.resize(A.dim());
    th.eps.resize(A.dim());
    for (uint32_t i = 0; i < A.dim(); ++i) {
        th.delta[i] = h.delta_word(i);
        th.eps[i] = h.eps_word(i);
        th.antipode.set_col(i, h.antipode_word(i));
    }
    for (uint32_t g = 0; g < A.A().size(); ++g) {
        Word wg{uint8_t(g)};
        if (!A.rewrite_system().word_reducible(wg))
            th.generators.push_back(A.index_of(wg));
    }
    return th;
}

// the dual Hopf algebra: multiplication = delta transpose, comultiplication =
// multiplication transpose, antipode = antipode transpose
inline TableHopf dual_hopf(const TableHopf& h, size_t dim_cap = 2000) {
    const size_t n = h.dim();
    require(n <= dim_cap, "dual cap exceeded");
    const Field& F = h.F();
    TableAlgebra da(h.alg.field_ptr(), n);
    std::vector<std::vector<SvBuilder>> mt(n);
    for (auto& row : mt)
        row.resize(n);
    std::vector<TensorElement> dd(n);
    for (uint32_t k = 0; k < n; ++k)
        for (const auto& [key, c] : h.delta[k].terms())
            mt[TensorElement::left(key)][TensorElement::right(key)].add(k, c);
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j) {
            da.set_product(i, j, mt[i][j].take(F));
            for (const auto& [k, c] : h.alg.mult(i, j))
                dd[k].add_term(F, i, j, c);
        }
    SparseVec unit;
    for (uint32_t i = 0; i < n; ++i)
        if (!h.eps[i].is_zero())
            unit.emplace_back(i, h.eps[i]);
    da.set_unit(unit);
    for (uint32_t i = 0; i < n; ++i)
        da.set_label(i, "(" + h.alg.label(i) + ")*");
    TableHopf dual{std::move(da), std::move(dd), {}, DenseMatrix(n, n), {}};
    dual.eps.resize(n);
    for (const auto& [i, c] : h.alg.unit())
        dual.eps[i] = c;
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c)
            dual.antipode.at(r, c) = h.antipode.at(c, r);
    return dual;
}

inline TableHopf dual_hopf(const PresentedHopf& h, size_t dim_cap = 2000) {
    return dual_hopf(materialize(h, dim_cap), dim_cap);
}

} // namespace nichols
