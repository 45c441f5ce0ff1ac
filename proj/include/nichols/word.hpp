#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nichols/fq.hpp"

// Free-monoid words over an indexed generator alphabet, with the
// degree-lexicographic order used to orient rewriting rules.

namespace nichols {

// a word is a sequence of generator indices; empty word = unit
using Word = std::basic_string<uint8_t>;

struct WordHash {
    size_t operator()(const Word& w) const {
        size_t h = 1469598103934665603ull;
        for (uint8_t c : w) {
            h ^= c;
            h *= 1099511628211ull;
        }
        return h;
    }
};

struct GeneratorInfo {
    std::string name;
    uint32_t degree = 1;               // algebra grading weight (0 for grouplikes)
    std::vector<int32_t> multidegree;  // optional abelian multidegree
};

// The alphabet: generator names, degrees and the precedence permutation.
// Precedence is by index: lower index = smaller in the order.
class Alphabet {
public:
    Alphabet() = default;

    uint32_t add(std::string name, uint32_t degree = 1, std::vector<int32_t> multidegree = {}) {
        require(gens_.size() < 250, "too many generators");
        gens_.push_back({std::move(name), degree, std::move(multidegree)});
        return uint32_t(gens_.size() - 1);
    }

    size_t size() const { return gens_.size(); }
    const GeneratorInfo& gen(uint32_t i) const { return gens_.at(i); }

    int32_t index_of(const std::string& name) const {
        for (size_t i = 0; i < gens_.size(); ++i)
            if (gens_[i].name == name)
                return int32_t(i);
        return -1;
    }

    uint64_t degree(const Word& w) const {
        uint64_t d = 0;
        for (uint8_t c : w)
            d += gens_[c].degree;
        return d;
    }

    std::vector<int64_t> multidegree(const Word& w, size_t rank) const {
        std::vector<int64_t> md(rank, 0);
        for (uint8_t c : w) {
            const auto& g = gens_[c].multidegree;
            for (size_t i = 0; i < rank && i < g.size(); ++i)
                md[i] += g[i];
        }
        return md;
    }

    // deglex: total generator-degree first, then lexicographic by precedence.
    // Multiplicative and a well-order as long as every generator has degree >= 1;
    // presentations with degree-0 generators fall back to (length, lex), which is
    // still multiplicative and well-founded.
    bool less(const Word& a, const Word& b) const {
        uint64_t da = key(a), db = key(b);
        if (da != db)
            return da < db;
        return a < b; // basic_string lexicographic = precedence order
    }

    std::string to_string(const Word& w) const {
        if (w.empty())
            return "1";
        std::string s;
        for (size_t i = 0; i < w.size(); ++i) {
            if (i)
                s += "*";
            s += gens_[w[i]].name;
        }
        return s;
    }

private:
    // (degree, length) packed so words of equal degree compare by length first
    uint64_t key(const Word& w) const { return (degree(w) << 20) | w.size(); }

    std::vector<GeneratorInfo> gens_;
};

inline Word word_of(std::initializer_list<uint8_t> gs) { return Word(gs); }

inline Word word_pow(uint8_t g, size_t e) { return Word(e, g); }

} // namespace nichols
