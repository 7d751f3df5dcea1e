#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "cotk/errors.hpp"
#include "cotk/hypergraph.hpp"
#include "cotk/rational.hpp"
#include "cotk/search.hpp"

namespace cotk {

/// Query for the codegree Turan number of the pattern at host size n.
struct ExCoQuery {
    int n = 0;
    int k = 2;
    Hypergraph pattern;
    SearchBudget budget;
};

/// Outcome of the decision problem "is there a pattern-free k-graph on n
/// labeled vertices with minimum codegree at least t".
struct ExCoDecision {
    SearchStatus status = SearchStatus::NotFoundExhausted;
    std::optional<Hypergraph> witness;
    long long nodes_explored = 0;
};

struct ExCoResult {
    long long value = 0;
    Hypergraph witness; // pattern-free with min codegree = value
    long long nodes_explored = 0;
    bool exact = false; // true iff certified by exhausted search
};

struct DensityPoint {
    int n = 0;
    long long value = 0;
    Rational ratio; // value / n, exact
    bool exact = false;
};

namespace detail {

inline void validate_exco_query(const ExCoQuery& q) {
    if (q.pattern.edge_count() < 1)
        throw InputError("pattern must have at least one edge");
    if (q.k != q.pattern.uniformity())
        throw InputError("query uniformity differs from the pattern's");
    if (q.n < q.k)
        throw InputError("host must have at least k vertices");
    validate_budget(q.budget);
}

/// DFS over the C(n,k) potential edges in lexicographic order, each decided
/// out (first) or in. A branch dies when a pattern copy appears among the
/// decided-in edges or when some (k-1)-set can no longer reach codegree t
/// even if every undecided incident edge is added. Out-before-in makes the
/// first leaf the minimum characteristic vector, hence a deterministic
/// witness.
class ExtremalSearcher {
public:
    ExtremalSearcher(const ExCoQuery& q, long long t, bool symmetry_breaking)
        : n_(q.n), k_(q.k), t_(t), pattern_(q.pattern),
          symmetry_(symmetry_breaking) {
        constexpr long long kMaxEdges = 1'000'000;
        if (binom_clamped(n_, k_, kMaxEdges) >= kMaxEdges)
            throw SizeError("edge-set search space too large");

        node_limit_ = q.budget.node_limit;
        if (q.budget.time_limit_seconds)
            deadline_ = std::chrono::steady_clock::now() +
                        std::chrono::duration_cast<
                            std::chrono::steady_clock::duration>(
                            std::chrono::duration<double>(
                                *q.budget.time_limit_seconds));

        for_each_combination(n_, k_, [&](const std::vector<Vertex>& c) {
            all_edges_.push_back(c);
        });
        int next_id = 0;
        std::map<CoSet, int> coset_id;
        for_each_combination(n_, k_ - 1, [&](const CoSet& s) {
            coset_id[s] = next_id++;
        });
        in_count_.assign(next_id, 0);
        undec_count_.assign(next_id, n_ - k_ + 1);

        edge_cosets_.resize(all_edges_.size());
        CoSet sub(k_ - 1);
        for (std::size_t ei = 0; ei < all_edges_.size(); ++ei) {
            const Edge& e = all_edges_[ei];
            for (int skip = 0; skip < k_; ++skip) {
                int pos = 0;
                for (int i = 0; i < k_; ++i)
                    if (i != skip)
                        sub[pos++] = e[i];
                edge_cosets_[ei].push_back(coset_id.at(sub));
            }
        }
        // Edges containing {0, ..., k-2} form the lexicographic prefix.
        s0_edge_count_ = n_ - k_ + 1;

        pattern_edges_with_.resize(pattern_.vertex_count());
        for (std::size_t i = 0; i < pattern_.edges().size(); ++i)
            for (Vertex v : pattern_.edges()[i])
                pattern_edges_with_[v].push_back(static_cast<int>(i));
    }

    ExCoDecision run() {
        ExCoDecision decision;
        const bool found = dfs(0, false);
        decision.nodes_explored = nodes_;
        if (budget_hit_) {
            decision.status = SearchStatus::BudgetExceeded;
        } else if (found) {
            decision.status = SearchStatus::Found;
            decision.witness = Hypergraph(k_, n_, chosen_);
        } else {
            decision.status = SearchStatus::NotFoundExhausted;
        }
        return decision;
    }

private:
    bool over_budget() {
        if (node_limit_ && nodes_ >= *node_limit_)
            return true;
        if (deadline_ && (nodes_ & 1023) == 0 &&
            std::chrono::steady_clock::now() > *deadline_)
            return true;
        return false;
    }

    bool dfs(std::size_t i, bool s0_out_seen) {
        ++nodes_;
        if (over_budget()) {
            budget_hit_ = true;
            return false;
        }
        if (i == all_edges_.size())
            return true;
        const bool is_s0_edge = symmetry_ && i < static_cast<std::size_t>(s0_edge_count_);

        // Out branch first: prune when a co-set of this edge loses its last
        // chance to reach t.
        {
            bool feasible = true;
            for (int sid : edge_cosets_[i]) {
                --undec_count_[sid];
                if (in_count_[sid] + undec_count_[sid] < t_)
                    feasible = false;
            }
            if (feasible &&
                dfs(i + 1, s0_out_seen || is_s0_edge))
                return true;
            for (int sid : edge_cosets_[i])
                ++undec_count_[sid];
            if (budget_hit_)
                return false;
        }

        // In branch: prune when the new edge completes a pattern copy.
        if (!(is_s0_edge && s0_out_seen)) {
            for (int sid : edge_cosets_[i]) {
                ++in_count_[sid];
                --undec_count_[sid];
            }
            chosen_.push_back(all_edges_[i]);
            chosen_set_.insert(all_edges_[i]);
            if (!completes_pattern_copy(all_edges_[i]) && dfs(i + 1, s0_out_seen))
                return true;
            chosen_set_.erase(all_edges_[i]);
            chosen_.pop_back();
            for (int sid : edge_cosets_[i]) {
                --in_count_[sid];
                ++undec_count_[sid];
            }
        }
        return false;
    }

    // Only copies through the most recently added edge are sought: some
    // pattern edge is mapped onto it, in every vertex order, and the rest of
    // the pattern is extended over the decided-in edges.
    bool completes_pattern_copy(const Edge& new_edge) {
        const int fv = pattern_.vertex_count();
        std::vector<int> assignment(fv, -1);
        std::vector<char> used(n_, 0);
        std::vector<int> order(new_edge.begin(), new_edge.end());
        std::sort(order.begin(), order.end());
        for (std::size_t pi = 0; pi < pattern_.edges().size(); ++pi) {
            const Edge& pe = pattern_.edges()[pi];
            do {
                for (int i = 0; i < k_; ++i) {
                    assignment[pe[i]] = order[i];
                    used[order[i]] = 1;
                }
                if (images_consistent(assignment) &&
                    extend_copy(assignment, used, 0))
                    return true;
                for (int i = 0; i < k_; ++i) {
                    used[order[i]] = 0;
                    assignment[pe[i]] = -1;
                }
            } while (std::next_permutation(order.begin(), order.end()));
        }
        return false;
    }

    // Pattern edges already fully assigned must map into the chosen set.
    bool images_consistent(const std::vector<int>& assignment) const {
        Edge image(k_);
        for (const Edge& pe : pattern_.edges()) {
            bool complete = true;
            for (int i = 0; i < k_; ++i) {
                if (assignment[pe[i]] < 0) {
                    complete = false;
                    break;
                }
                image[i] = assignment[pe[i]];
            }
            if (!complete)
                continue;
            Edge sorted(image);
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                return false;
            if (!chosen_set_.count(sorted))
                return false;
        }
        return true;
    }

    bool extend_copy(std::vector<int>& assignment, std::vector<char>& used,
                     int u) {
        const int fv = pattern_.vertex_count();
        while (u < fv && assignment[u] >= 0)
            ++u;
        if (u == fv)
            return true;
        Edge image(k_);
        for (Vertex w = 0; w < n_; ++w) {
            if (used[w])
                continue;
            assignment[u] = w;
            bool ok = true;
            for (int ei : pattern_edges_with_[u]) {
                const Edge& pe = pattern_.edges()[ei];
                bool complete = true;
                for (int i = 0; i < k_; ++i) {
                    if (assignment[pe[i]] < 0) {
                        complete = false;
                        break;
                    }
                    image[i] = assignment[pe[i]];
                }
                if (!complete)
                    continue;
                Edge sorted(image);
                std::sort(sorted.begin(), sorted.end());
                if (!chosen_set_.count(sorted)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                used[w] = 1;
                if (extend_copy(assignment, used, u + 1))
                    return true;
                used[w] = 0;
            }
            assignment[u] = -1;
        }
        return false;
    }

    int n_;
    int k_;
    long long t_;
    const Hypergraph& pattern_;
    bool symmetry_;
    std::vector<Edge> all_edges_;
    std::vector<std::vector<int>> edge_cosets_;
    std::vector<long long> in_count_;
    std::vector<long long> undec_count_;
    std::vector<Edge> chosen_;
    std::set<Edge> chosen_set_;
    std::vector<std::vector<int>> pattern_edges_with_;
    int s0_edge_count_ = 0;
    long long nodes_ = 0;
    bool budget_hit_ = false;
    std::optional<long long> node_limit_;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
};

} // namespace detail

/// Decision form: is there a pattern-free k-graph on n labeled vertices with
/// minimum codegree at least t. NotFoundExhausted certifies none exists;
/// BudgetExceeded is never conflated with NotFound.
inline ExCoDecision exists_free_with_min_codegree(const ExCoQuery& q,
                                                  long long t,
                                                  bool symmetry_breaking =
                                                      false) {
    detail::validate_exco_query(q);
    if (t < 0 || t > q.n - q.k + 1)
        throw InputError("codegree target out of range");
    return detail::ExtremalSearcher(q, t, symmetry_breaking).run();
}

/// Exact codegree Turan number: the maximum t admitting a pattern-free host
/// with minimum codegree >= t, computed by descending t. The query budget
/// applies to each decision level separately. When a budget trips, the result
/// carries the best certified lower bound and exact = false; an unproven
/// upper bound is never reported.
inline ExCoResult ex_co_exact(const ExCoQuery& q,
                              bool symmetry_breaking = false) {
    detail::validate_exco_query(q);
    long long total_nodes = 0;
    bool tripped = false;
    for (long long t = q.n - q.k + 1; t >= 0; --t) {
        ExCoDecision decision =
            exists_free_with_min_codegree(q, t, symmetry_breaking);
        total_nodes += decision.nodes_explored;
        if (decision.status == SearchStatus::Found)
            return ExCoResult{t, *decision.witness, total_nodes, !tripped};
        if (decision.status == SearchStatus::BudgetExceeded)
            tripped = true;
    }
    // t = 0 always succeeds with the edgeless host unless the budget is tiny.
    return ExCoResult{0, Hypergraph::edgeless(q.k, q.n), total_nodes, false};
}

/// Finite density profile: exact ratios value/n for each requested host size.
inline std::vector<DensityPoint> density_profile(
    const Hypergraph& pattern, const std::vector<int>& n_list,
    const SearchBudget& budget = {}, bool symmetry_breaking = false) {
    std::vector<DensityPoint> profile;
    profile.reserve(n_list.size());
    for (int n : n_list) {
        ExCoQuery q{n, pattern.uniformity(), pattern, budget};
        const ExCoResult r = ex_co_exact(q, symmetry_breaking);
        profile.push_back(
            DensityPoint{n, r.value, Rational(r.value, n), r.exact});
    }
    return profile;
}

} // namespace cotk
