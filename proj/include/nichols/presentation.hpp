#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <vector>

#include "nichols/poly.hpp"

namespace nichols {

// A presented algebra: generators with degrees, relations in the free algebra,
// optionally an expected dimension and an abelian multidegree grading.
struct Presentation {
    std::shared_ptr<const Field> field;
    std::shared_ptr<const Alphabet> alpha;
    std::vector<NcPoly> relations;
    std::optional<uint64_t> expected_dim;
    size_t grading_rank = 0;              // 0 = no declared multidegree grading
    std::vector<uint32_t> grading_moduli; // per coordinate; 0 = free (Z), f = Z/f
    std::optional<uint64_t> pbw_generators;  // PBW generator count when known
    std::optional<uint64_t> suggested_bound; // e.g. exact top degree + 2

    const Field& F() const { return *field; }
    const Alphabet& A() const { return *alpha; }

    std::vector<int64_t> multidegree(const Word& w) const {
        auto md = alpha->multidegree(w, grading_rank);
        for (size_t i = 0; i < md.size(); ++i) {
            if (i < grading_moduli.size() && grading_moduli[i] != 0) {
                md[i] %= int64_t(grading_moduli[i]);
                if (md[i] < 0)
                    md[i] += grading_moduli[i];
            }
        }
        return md;
    }

    bool relation_homogeneous(const NcPoly& rel) const {
        if (grading_rank == 0 || rel.is_zero())
            return true;
        auto ref = multidegree(rel.leading_word());
        for (const auto& [w, c] : rel.terms())
            if (multidegree(w) != ref)
                return false;
        return true;
    }

    void check_relations_homogeneous() const {
        for (const auto& r : relations)
            require(relation_homogeneous(r), "relation not homogeneous in the declared grading: " +
                                                 r.to_string(*field));
    }

    // default completion bound: 2(p-1) * (PBW generator count) + 2, raised to
    // the declared suggestion when the builder knows the exact top degree
    uint64_t default_degree_bound() const {
        uint64_t n = pbw_generators.value_or(alpha->size());
        uint64_t b = 2 * (field->p() - 1) * n + 2;
        if (suggested_bound)
            b = std::max(b, *suggested_bound);
        return b;
    }
};

class PresentationBuilder {
public:
    PresentationBuilder(uint32_t p, uint32_t m = 1,
                        std::optional<std::vector<uint32_t>> modulus = std::nullopt)
        : field_(std::make_shared<Field>(p, m, std::move(modulus))),
          alpha_(std::make_shared<Alphabet>()) {}

    explicit PresentationBuilder(std::shared_ptr<const Field> f)
        : field_(std::move(f)), alpha_(std::make_shared<Alphabet>()) {}

    uint32_t add_generator(std::string name, uint32_t degree = 1,
                           std::vector<int32_t> multidegree = {}) {
        return alpha_->add(std::move(name), degree, std::move(multidegree));
    }

    void add_relation(NcPoly rel) {
        if (!rel.is_zero())
            relations_.push_back(std::move(rel));
    }

    NcPoly poly() const { return NcPoly(*alpha_); }
    NcPoly mono(const Word& w, Fq c) const { return NcPoly::monomial(*alpha_, *field_, w, c); }
    NcPoly mono(const Word& w) const { return mono(w, field_->one()); }

    const Field& F() const { return *field_; }
    const Alphabet& A() const { return *alpha_; }
    std::shared_ptr<const Field> field_ptr() const { return field_; }

    Presentation build(std::optional<uint64_t> expected_dim = std::nullopt,
                       size_t grading_rank = 0, std::vector<uint32_t> grading_moduli = {}) {
        Presentation p;
        p.field = field_;
        p.alpha = alpha_;
        p.relations = std::move(relations_);
        p.expected_dim = expected_dim;
        p.grading_rank = grading_rank;
        p.grading_moduli = std::move(grading_moduli);
        if (grading_rank > 0)
            p.check_relations_homogeneous();
        return p;
    }

private:
    std::shared_ptr<const Field> field_;
    std::shared_ptr<Alphabet> alpha_;
    std::vector<NcPoly> relations_;
};

} // namespace nichols
