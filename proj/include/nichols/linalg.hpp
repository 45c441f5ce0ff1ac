#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "nichols/fq.hpp"

// Exact linear algebra over F_{p^m}: sparse vectors, dense matrices,
// echelon forms, rank, kernel and solving. Everything deterministic.

namespace nichols {

// sorted (index, coeff) pairs, no zeros
using SparseVec = std::vector<std::pair<uint32_t, Fq>>;

inline SparseVec sv_unit(uint32_t i, Fq c) { return c.is_zero() ? SparseVec{} : SparseVec{{i, c}}; }

inline SparseVec sv_add(const Field& F, const SparseVec& a, const SparseVec& b, Fq bscale) {
    SparseVec r;
    r.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            r.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            Fq c = F.mul(b[j].second, bscale);
            if (!c.is_zero())
                r.emplace_back(b[j].first, c);
            ++j;
        } else {
            Fq c = F.add(a[i].second, F.mul(b[j].second, bscale));
            if (!c.is_zero())
                r.emplace_back(a[i].first, c);
            ++i;
            ++j;
        }
    }
    return r;
}

inline SparseVec sv_scale(const Field& F, const SparseVec& a, Fq c) {
    if (c.is_zero())
        return {};
    SparseVec r = a;
    for (auto& [i, x] : r)
        x = F.mul(x, c);
    return r;
}

inline Fq sv_get(const SparseVec& a, uint32_t idx) {
    auto it = std::lower_bound(a.begin(), a.end(), idx,
                               [](const auto& p, uint32_t v) { return p.first < v; });
    return (it != a.end() && it->first == idx) ? it->second : Fq{};
}

// accumulate-then-sort builder for hot paths
class SvBuilder {
public:
    void add(uint32_t i, Fq c) {
        if (!c.is_zero())
            buf_.emplace_back(i, c);
    }
    SparseVec take(const Field& F) {
        std::sort(buf_.begin(), buf_.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        SparseVec r;
        r.reserve(buf_.size());
        for (auto& [i, c] : buf_) {
            if (!r.empty() && r.back().first == i) {
                r.back().second = F.add(r.back().second, c);
                if (r.back().second.is_zero())
                    r.pop_back();
            } else {
                r.emplace_back(i, c);
            }
        }
        buf_.clear();
        return r;
    }

private:
    std::vector<std::pair<uint32_t, Fq>> buf_;
};

// Incremental sparse echelon form: rows normalized to leading coefficient 1,
// indexed by pivot column. Supports membership tests and dimension tracking.
class SparseEchelon {
public:
    explicit SparseEchelon(const Field& F) : F_(&F) {}

    // reduces v against the current rows; returns the residue
    SparseVec residue(SparseVec v) const {
        while (!v.empty()) {
            auto it = rows_.find(v.front().first);
            if (it == rows_.end())
                return v;
            v = sv_add(*F_, v, it->second, F_->neg(v.front().second));
        }
        return v;
    }

    // inserts v if independent; returns true if the dimension grew
    bool insert(SparseVec v) {
        v = residue(std::move(v));
        if (v.empty())
            return false;
        Fq lead = v.front().second;
        rows_.emplace(v.front().first, sv_scale(*F_, v, F_->inv(lead)));
        return true;
    }

    bool contains(SparseVec v) const { return residue(std::move(v)).empty(); }
    size_t dim() const { return rows_.size(); }
    const std::map<uint32_t, SparseVec>& rows() const { return rows_; }

private:
    const Field* F_;
    std::map<uint32_t, SparseVec> rows_;
};

// Dense matrix, row major.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Fq& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
    Fq at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    void set_col(size_t c, const SparseVec& v) {
        for (auto& [i, x] : v)
            at(i, c) = x;
    }
    void set_row(size_t r, const SparseVec& v) {
        for (auto& [i, x] : v)
            at(r, i) = x;
    }

    SparseVec row_sparse(size_t r) const {
        SparseVec v;
        for (size_t c = 0; c < cols_; ++c)
            if (!at(r, c).is_zero())
                v.emplace_back(uint32_t(c), at(r, c));
        return v;
    }

    static DenseMatrix identity(const Field& F, size_t n) {
        DenseMatrix m(n, n);
        for (size_t i = 0; i < n; ++i)
            m.at(i, i) = F.one();
        return m;
    }

    DenseMatrix times(const Field& F, const DenseMatrix& o) const {
        require(cols_ == o.rows_, "matrix dimension mismatch");
        DenseMatrix r(rows_, o.cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k) {
                Fq a = at(i, k);
                if (a.is_zero())
                    continue;
                for (size_t j = 0; j < o.cols_; ++j) {
                    Fq b = o.at(k, j);
                    if (!b.is_zero())
                        r.at(i, j) = F.add(r.at(i, j), F.mul(a, b));
                }
            }
        return r;
    }

    SparseVec apply(const Field& F, const SparseVec& v) const {
        std::vector<Fq> acc(rows_);
        for (auto& [j, c] : v) {
            for (size_t i = 0; i < rows_; ++i) {
                Fq a = at(i, j);
                if (!a.is_zero())
                    acc[i] = F.add(acc[i], F.mul(a, c));
            }
        }
        SparseVec r;
        for (size_t i = 0; i < rows_; ++i)
            if (!acc[i].is_zero())
                r.emplace_back(uint32_t(i), acc[i]);
        return r;
    }

    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    // in-place row echelon; returns pivot columns
    std::vector<size_t> echelonize(const Field& F) {
        std::vector<size_t> pivots;
        size_t r = 0;
        for (size_t c = 0; c < cols_ && r < rows_; ++c) {
            size_t sel = r;
            while (sel < rows_ && at(sel, c).is_zero())
                ++sel;
            if (sel == rows_)
                continue;
            if (sel != r)
                for (size_t j = 0; j < cols_; ++j)
                    std::swap(at(sel, j), at(r, j));
            Fq invp = F.inv(at(r, c));
            for (size_t j = c; j < cols_; ++j)
                at(r, j) = F.mul(at(r, j), invp);
            for (size_t i = 0; i < rows_; ++i) {
                if (i == r)
                    continue;
                Fq f = at(i, c);
                if (f.is_zero())
                    continue;
                for (size_t j = c; j < cols_; ++j)
                    at(i, j) = F.sub(at(i, j), F.mul(f, at(r, j)));
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    size_t rank(const Field& F) const {
        DenseMatrix copy = *this;
        return copy.echelonize(F).size();
    }

    // basis of the right kernel {v : Mv = 0}, as dense columns
    std::vector<std::vector<Fq>> kernel(const Field& F) const {
        DenseMatrix e = *this;
        auto pivots = e.echelonize(F);
        std::vector<bool> is_pivot(cols_, false);
        for (auto c : pivots)
            is_pivot[c] = true;
        std::vector<std::vector<Fq>> basis;
        for (size_t fc = 0; fc < cols_; ++fc) {
            if (is_pivot[fc])
                continue;
            std::vector<Fq> v(cols_);
            v[fc] = F.one();
            for (size_t pr = 0; pr < pivots.size(); ++pr)
                v[pivots[pr]] = F.neg(e.at(pr, fc));
            basis.push_back(std::move(v));
        }
        return basis;
    }

    // solve Mx = b; returns empty optional if inconsistent
    std::optional<std::vector<Fq>> solve(const Field& F, const std::vector<Fq>& b) const {
        require(b.size() == rows_, "rhs size mismatch");
        DenseMatrix aug(rows_, cols_ + 1);
        for (size_t i = 0; i < rows_; ++i) {
            for (size_t j = 0; j < cols_; ++j)
                aug.at(i, j) = at(i, j);
            aug.at(i, cols_) = b[i];
        }
        auto pivots = aug.echelonize(F);
        if (!pivots.empty() && pivots.back() == cols_)
            return std::nullopt;
        std::vector<Fq> x(cols_);
        for (size_t pr = 0; pr < pivots.size(); ++pr)
            x[pivots[pr]] = aug.at(pr, cols_);
        return x;
    }

    std::optional<DenseMatrix> inverse(const Field& F) const {
        require(rows_ == cols_, "inverse of non-square matrix");
        DenseMatrix aug(rows_, 2 * cols_);
        for (size_t i = 0; i < rows_; ++i) {
            for (size_t j = 0; j < cols_; ++j)
                aug.at(i, j) = at(i, j);
            aug.at(i, cols_ + i) = F.one();
        }
        auto pivots = aug.echelonize(F);
        if (pivots.size() != rows_ || pivots.back() != rows_ - 1)
            return std::nullopt;
        DenseMatrix inv(rows_, cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j)
                inv.at(i, j) = aug.at(i, cols_ + j);
        return inv;
    }

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<Fq> data_;
};

} // namespace nichols
