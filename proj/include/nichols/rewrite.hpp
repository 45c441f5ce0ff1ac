#pragma once

#include <algorithm>
#include <queue>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "nichols/presentation.hpp"

// Degree-bounded Buchberger-style completion for noncommutative presentations.
// Rules are oriented lead -> tail with lead the deglex-leading word; overlap
// (S-polynomial) closure runs until the pair queue empties, then the algebra is
// declared finite when a whole degree level carries no normal word.

namespace nichols {

struct Rule {
    Word lead;
    NcPoly tail; // lead rewrites to tail; rule polynomial is lead - tail
    bool active = true;
};

enum class CompletionStatus { Complete, Inconclusive };

// factor matcher over the current set of rule leads (Aho-Corasick)
class LeadMatcher {
public:
    void build(const std::vector<Rule>& rules, size_t alphabet_size) {
        nodes_.clear();
        nodes_.push_back(Node(alphabet_size));
        max_lead_ = 0;
        for (size_t r = 0; r < rules.size(); ++r) {
            if (!rules[r].active)
                continue;
            max_lead_ = std::max(max_lead_, rules[r].lead.size());
            int cur = 0;
            for (uint8_t c : rules[r].lead) {
                if (nodes_[cur].next[c] < 0) {
                    nodes_[cur].next[c] = int(nodes_.size());
                    nodes_.push_back(Node(alphabet_size));
                }
                cur = nodes_[cur].next[c];
            }
            nodes_[cur].rule = int(r);
        }
        // BFS fail links
        std::queue<int> q;
        for (size_t c = 0; c < alphabet_size; ++c) {
            int v = nodes_[0].next[c];
            if (v < 0)
                nodes_[0].next[c] = 0;
            else {
                nodes_[v].fail = 0;
                q.push(v);
            }
        }
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            if (nodes_[u].rule < 0 && nodes_[nodes_[u].fail].out >= 0)
                nodes_[u].out = nodes_[nodes_[u].fail].out;
            else if (nodes_[u].rule >= 0)
                nodes_[u].out = nodes_[u].rule;
            for (size_t c = 0; c < alphabet_size; ++c) {
                int v = nodes_[u].next[c];
                if (v < 0)
                    nodes_[u].next[c] = nodes_[nodes_[u].fail].next[c];
                else {
                    nodes_[v].fail = nodes_[nodes_[u].fail].next[c];
                    q.push(v);
                }
            }
        }
    }

    // leftmost match: returns (rule, end position) of the first lead occurrence, or rule = -1
    std::pair<int, size_t> find(const Word& w) const {
        int cur = 0;
        for (size_t i = 0; i < w.size(); ++i) {
            cur = nodes_[cur].next[w[i]];
            int r = nodes_[cur].out;
            if (r >= 0)
                return {r, i + 1};
        }
        return {-1, 0};
    }

    bool reducible(const Word& w) const { return find(w).first >= 0; }

    size_t max_lead() const { return max_lead_; }

private:
    struct Node {
        explicit Node(size_t a) : next(a, -1) {}
        std::vector<int> next;
        int fail = 0;
        int rule = -1; // rule whose lead ends exactly here
        int out = -1;  // shortest lead ending at this position (via fail chain)
    };
    std::vector<Node> nodes_;
    size_t max_lead_ = 0;
};

struct CompletionBudget {
    uint64_t max_pairs = 2'000'000;  // S-polynomials processed
    uint64_t max_rules = 20'000;
    uint64_t max_basis = 2'000'000;  // normal words enumerated
};

class RewriteSystem {
public:
    RewriteSystem(std::shared_ptr<const Field> f, std::shared_ptr<const Alphabet> a)
        : field_(std::move(f)), alpha_(std::move(a)) {}

    const Field& F() const { return *field_; }
    const Alphabet& A() const { return *alpha_; }
    std::shared_ptr<const Field> field_ptr() const { return field_; }
    std::shared_ptr<const Alphabet> alpha_ptr() const { return alpha_; }

    const std::vector<Rule>& rules() const { return rules_; }
    size_t active_rule_count() const {
        size_t n = 0;
        for (const auto& r : rules_)
            n += r.active;
        return n;
    }

    CompletionStatus status() const { return status_; }
    bool complete() const { return status_ == CompletionStatus::Complete; }
    const std::string& status_detail() const { return detail_; }
    uint64_t degree_bound() const { return bound_; }

    NcPoly reduce(const NcPoly& p) const {
        NcPoly work = p;
        NcPoly out(*alpha_);
        while (!work.is_zero()) {
            const Word w = work.leading_word();
            const Fq c = work.leading_coeff();
            auto [rid, end] = matcher_.find(w);
            if (rid < 0) {
                out.add_term(*field_, w, c);
                work.add_term(*field_, w, field_->neg(c)); // erase leading term
                continue;
            }
            const Rule& r = rules_[rid];
            Word left = w.substr(0, end - r.lead.size());
            Word right = w.substr(end);
            work.add_term(*field_, w, field_->neg(c));
            work.add(*field_, r.tail.framed(*field_, left, right), c);
        }
        return out;
    }

    NcPoly reduce_word(const Word& w) const {
        return reduce(NcPoly::monomial(*alpha_, *field_, w, field_->one()));
    }

    bool word_reducible(const Word& w) const { return matcher_.reducible(w); }
    size_t max_lead() const { return matcher_.max_lead(); }

    // --- completion driver -------------------------------------------------

    friend RewriteSystem complete(const Presentation& pres, std::optional<uint64_t> degree_bound,
                                  const CompletionBudget& budget);

    // normal words of each length until an empty level or the length cap;
    // returns per-length counts; words appended to `out` in deglex order
    std::vector<uint64_t> normal_words(uint64_t max_len, std::vector<Word>* out,
                                       uint64_t max_count = UINT64_MAX) const {
        std::vector<uint64_t> counts;
        std::vector<Word> level{Word{}};
        uint64_t total = 1;
        counts.push_back(1);
        if (out)
            out->push_back(Word{});
        const size_t ngen = alpha_->size();
        for (uint64_t len = 1; len <= max_len && !level.empty(); ++len) {
            std::vector<Word> next;
            for (const auto& w : level) {
                for (size_t g = 0; g < ngen; ++g) {
                    Word u = w;
                    u.push_back(uint8_t(g));
                    if (suffix_reducible(u))
                        continue;
                    next.push_back(std::move(u));
                    if (++total > max_count)
                        throw FieldError("normal word budget exceeded");
                }
            }
            counts.push_back(next.size());
            if (out)
                for (auto& w : next)
                    out->push_back(w);
            level = std::move(next);
            if (level.empty())
                break;
        }
        return counts;
    }

private:
    // a factor of u ending at the last letter equals some lead?
    bool suffix_reducible(const Word& u) const {
        size_t maxl = std::min(matcher_.max_lead(), u.size());
        for (size_t l = 1; l <= maxl; ++l)
            if (leads_.count(u.substr(u.size() - l)))
                return true;
        return false;
    }

    void rebuild_matcher() { matcher_.build(rules_, alpha_->size()); }

    // insert a reduced, nonzero polynomial as a rule; maintains inter-reduction
    // of lead words (no active lead is a factor of another)
    int insert_rule(NcPoly p, std::vector<NcPoly>& pending) {
        p.make_monic(*field_);
        Word lead = p.leading_word();
        NcPoly tail = p;
        tail.add_term(*field_, lead, field_->neg(field_->one()));
        tail.scale(*field_, field_->neg(field_->one())); // tail = lead - p
        int id = int(rules_.size());
        rules_.push_back({lead, tail, true});
        leads_.insert(lead);
        // deactivate rules whose lead contains the new lead as a proper factor
        for (size_t i = 0; i + 1 < rules_.size(); ++i) {
            if (!rules_[i].active)
                continue;
            if (rules_[i].lead.size() > lead.size() &&
                rules_[i].lead.find(lead) != Word::npos) {
                rules_[i].active = false;
                leads_.erase(rules_[i].lead);
                NcPoly repoly = NcPoly::monomial(*alpha_, *field_, rules_[i].lead, field_->one());
                repoly.sub(*field_, rules_[i].tail);
                pending.push_back(std::move(repoly));
            }
        }
        rebuild_matcher();
        return id;
    }

    std::shared_ptr<const Field> field_;
    std::shared_ptr<const Alphabet> alpha_;
    std::vector<Rule> rules_;
    std::unordered_set<Word, WordHash> leads_;
    LeadMatcher matcher_;
    CompletionStatus status_ = CompletionStatus::Inconclusive;
    std::string detail_ = "not completed";
    uint64_t bound_ = 0;

    friend class FinBasisAlgebra;
};

inline RewriteSystem complete(const Presentation& pres,
                              std::optional<uint64_t> degree_bound = std::nullopt,
                              const CompletionBudget& budget = {}) {
    RewriteSystem rs(pres.field, pres.alpha);
    const Field& F = rs.F();
    const Alphabet& A = rs.A();
    rs.bound_ = degree_bound.value_or(pres.default_degree_bound());
    rs.rebuild_matcher();

    // pair queue ordered by ambiguity word (deglex ascending, then rule ids)
    struct Pair {
        Word amb;
        int i, j;
        Word left, right; // amb = left + lead_j + right = lead_i + right (overlap)
    };
    auto cmp = [&A](const Pair& a, const Pair& b) {
        if (a.amb != b.amb)
            return A.less(b.amb, a.amb); // min-heap by deglex
        if (a.i != b.i)
            return a.i > b.i;
        return a.j > b.j;
    };
    std::priority_queue<Pair, std::vector<Pair>, decltype(cmp)> pairs(cmp);

    auto enqueue_overlaps = [&](int id) {
        const Word& u = rs.rules_[id].lead;
        for (int j = 0; j <= id; ++j) {
            if (!rs.rules_[j].active)
                continue;
            const Word& v = rs.rules_[j].lead;
            // suffix of u equals prefix of v: amb = u + v.substr(k); inclusions
            // cannot occur since active leads are mutually irreducible
            for (size_t k = 1; k < std::min(u.size(), v.size()); ++k) {
                if (u.compare(u.size() - k, k, v, 0, k) == 0)
                    pairs.push({u + v.substr(k), id, j, u.substr(0, u.size() - k), v.substr(k)});
                if (j != id && v.compare(v.size() - k, k, u, 0, k) == 0)
                    pairs.push({v + u.substr(k), j, id, v.substr(0, v.size() - k), u.substr(k)});
            }
        }
    };

    std::vector<NcPoly> pending;
    for (const auto& r : pres.relations)
        pending.push_back(r);
    // stack pops from the back: sort descending so small leads insert first
    std::sort(pending.begin(), pending.end(),
              [&A](const NcPoly& a, const NcPoly& b) { return A.less(b.leading_word(), a.leading_word()); });

    uint64_t processed = 0;
    auto flush_pending = [&]() {
        while (!pending.empty()) {
            NcPoly p = std::move(pending.back());
            pending.pop_back();
            p = rs.reduce(p);
            if (p.is_zero())
                continue;
            int id = rs.insert_rule(std::move(p), pending);
            enqueue_overlaps(id);
        }
    };

    flush_pending();
    while (!pairs.empty()) {
        if (++processed > budget.max_pairs || rs.rules_.size() > budget.max_rules) {
            rs.status_ = CompletionStatus::Inconclusive;
            rs.detail_ = "completion budget exhausted";
            return rs;
        }
        Pair pr = pairs.top();
        pairs.pop();
        if (!rs.rules_[pr.i].active || !rs.rules_[pr.j].active)
            continue;
        // S-polynomial: tail_i * right - left * tail_j
        NcPoly s = rs.rules_[pr.i].tail.framed(F, Word{}, pr.right);
        s.sub(F, rs.rules_[pr.j].tail.framed(F, pr.left, Word{}));
        s = rs.reduce(s);
        if (s.is_zero())
            continue;
        pending.push_back(std::move(s));
        flush_pending();
    }

    // final inter-reduction pass on tails
    for (auto& r : rs.rules_) {
        if (r.active)
            r.tail = rs.reduce(r.tail);
    }

    // exhaustion: look for an empty normal-word level at length <= bound
    try {
        auto counts = rs.normal_words(rs.bound_, nullptr, budget.max_basis);
        if (!counts.empty() && counts.back() == 0) {
            rs.status_ = CompletionStatus::Complete;
            rs.detail_ = "complete";
        } else {
            rs.status_ = CompletionStatus::Inconclusive;
            rs.detail_ = "inconclusive: normal words still present at the degree bound; raise bound";
        }
    } catch (const FieldError&) {
        rs.status_ = CompletionStatus::Inconclusive;
        rs.detail_ = "inconclusive: normal word budget exceeded";
    }
    return rs;
}

} // namespace nichols
