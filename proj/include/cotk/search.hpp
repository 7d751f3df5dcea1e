#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "cotk/errors.hpp"
#include "cotk/hypergraph.hpp"

namespace cotk {

enum class MapMode { Injective, Homomorphism };

/// Pattern-vertex -> host-vertex assignment. Under either mode the image of
/// every pattern edge must be k distinct vertices forming a host edge;
/// Injective additionally forbids repeated host vertices globally.
struct VertexMap {
    std::vector<Vertex> assignment;
    MapMode mode = MapMode::Injective;
};

struct SearchBudget {
    std::optional<long long> node_limit;
    std::optional<double> time_limit_seconds;
};

enum class SearchStatus { Found, NotFoundExhausted, BudgetExceeded };

struct SearchOutcome {
    SearchStatus status = SearchStatus::NotFoundExhausted;
    std::optional<VertexMap> witness;
    long long nodes_explored = 0;
};

/// Independent validity check for a vertex map: sizes, ranges, injectivity
/// where required, and every pattern edge carried onto a host edge by k
/// distinct images.
inline bool validate_vertex_map(const Hypergraph& f, const Hypergraph& h,
                                const VertexMap& map) {
    if (f.uniformity() != h.uniformity())
        return false;
    if (static_cast<int>(map.assignment.size()) != f.vertex_count())
        return false;
    for (Vertex w : map.assignment)
        if (w < 0 || w >= h.vertex_count())
            return false;
    if (map.mode == MapMode::Injective) {
        std::vector<Vertex> sorted(map.assignment);
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            return false;
    }
    Edge image;
    for (const Edge& e : f.edges()) {
        image.clear();
        for (Vertex v : e)
            image.push_back(map.assignment[v]);
        std::sort(image.begin(), image.end());
        if (std::adjacent_find(image.begin(), image.end()) != image.end())
            return false;
        if (!h.has_edge(image))
            return false;
    }
    return true;
}

namespace detail {

inline bool oracle_is_prime(std::int64_t p) {
    if (p < 2)
        return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

inline void validate_budget(const SearchBudget& budget) {
    if (budget.node_limit && *budget.node_limit <= 0)
        throw InputError("node limit must be positive");
    if (budget.time_limit_seconds && *budget.time_limit_seconds <= 0)
        throw InputError("time limit must be positive");
}

/// Backtracking matcher. Pattern vertices are assigned in natural ascending
/// order with host candidates ascending, so the first solution is the
/// lexicographically least map. Every pattern edge is checked exactly once,
/// at its largest vertex, where the candidate domain is the host common
/// neighborhood of the already placed k-1 images.
class Matcher {
public:
    Matcher(const Hypergraph& f, const Hypergraph& h, MapMode mode,
            const SearchBudget& budget)
        : f_(f), h_(h), mode_(mode) {
        validate_budget(budget);
        node_limit_ = budget.node_limit;
        if (budget.time_limit_seconds)
            deadline_ = std::chrono::steady_clock::now() +
                        std::chrono::duration_cast<
                            std::chrono::steady_clock::duration>(
                            std::chrono::duration<double>(
                                *budget.time_limit_seconds));

        for (const Edge& e : h_.edges()) {
            CoSet sub(e.size() - 1);
            for (std::size_t skip = 0; skip < e.size(); ++skip) {
                std::size_t t = 0;
                for (std::size_t i = 0; i < e.size(); ++i)
                    if (i != skip)
                        sub[t++] = e[i];
                extensions_[sub].push_back(e[skip]);
            }
        }
        for (auto& [coset, exts] : extensions_)
            std::sort(exts.begin(), exts.end());

        const int fv = f_.vertex_count();
        edges_with_.resize(fv);
        edges_ending_at_.resize(fv);
        for (std::size_t i = 0; i < f_.edges().size(); ++i) {
            for (Vertex v : f_.edges()[i])
                edges_with_[v].push_back(static_cast<int>(i));
            edges_ending_at_[f_.edges()[i].back()].push_back(
                static_cast<int>(i));
        }
        assignment_.assign(fv, -1);
        used_.assign(h_.vertex_count(), 0);
    }

    SearchOutcome run() {
        SearchOutcome outcome;
        const bool found = dfs(0);
        outcome.nodes_explored = nodes_;
        if (budget_hit_) {
            outcome.status = SearchStatus::BudgetExceeded;
        } else if (found) {
            outcome.status = SearchStatus::Found;
            outcome.witness = VertexMap{assignment_, mode_};
        } else {
            outcome.status = SearchStatus::NotFoundExhausted;
        }
        return outcome;
    }

private:
    bool over_budget() {
        if (node_limit_ && nodes_ >= *node_limit_)
            return true;
        if (deadline_ && (nodes_ & 2047) == 0 &&
            std::chrono::steady_clock::now() > *deadline_)
            return true;
        return false;
    }

    // Intersection of the host common neighborhoods over all pattern edges
    // whose remaining free vertex is u. Empty optional means unconstrained.
    std::optional<std::vector<Vertex>> constrained_domain(int u) {
        std::optional<std::vector<Vertex>> domain;
        CoSet images;
        for (int ei : edges_ending_at_[u]) {
            const Edge& pe = f_.edges()[ei];
            images.clear();
            for (Vertex v : pe)
                if (v != u)
                    images.push_back(assignment_[v]);
            std::sort(images.begin(), images.end());
            if (std::adjacent_find(images.begin(), images.end()) !=
                images.end())
                return std::vector<Vertex>{}; // collapsed images, dead branch
            const auto it = extensions_.find(images);
            if (it == extensions_.end())
                return std::vector<Vertex>{};
            if (!domain) {
                domain = it->second;
            } else {
                std::vector<Vertex> next;
                std::set_intersection(domain->begin(), domain->end(),
                                      it->second.begin(), it->second.end(),
                                      std::back_inserter(next));
                domain = std::move(next);
            }
            if (domain->empty())
                break;
        }
        return domain;
    }

    bool rejected(int u, Vertex w) const {
        if (mode_ == MapMode::Injective)
            return used_[w] != 0;
        // Homomorphic images may collide unless a shared edge forces the two
        // vertices apart.
        for (int ei : edges_with_[u])
            for (Vertex v : f_.edges()[ei])
                if (v != u && assignment_[v] == w)
                    return true;
        return false;
    }

    bool dfs(int u) {
        if (u == f_.vertex_count())
            return true;
        const auto domain = constrained_domain(u);

        // used_ is meaningful only under injectivity; homomorphic images may
        // legally collide.
        auto try_candidate = [&](Vertex w) -> int {
            if (rejected(u, w))
                return 0;
            ++nodes_;
            if (over_budget()) {
                budget_hit_ = true;
                return -1;
            }
            assignment_[u] = w;
            if (mode_ == MapMode::Injective)
                used_[w] = 1;
            if (dfs(u + 1))
                return 1;
            assignment_[u] = -1;
            if (mode_ == MapMode::Injective)
                used_[w] = 0;
            return budget_hit_ ? -1 : 0;
        };

        if (domain) {
            for (Vertex w : *domain) {
                const int res = try_candidate(w);
                if (res != 0)
                    return res == 1;
            }
        } else {
            for (Vertex w = 0; w < h_.vertex_count(); ++w) {
                const int res = try_candidate(w);
                if (res != 0)
                    return res == 1;
            }
        }
        return false;
    }

    const Hypergraph& f_;
    const Hypergraph& h_;
    MapMode mode_;
    std::map<CoSet, std::vector<Vertex>> extensions_;
    std::vector<std::vector<int>> edges_with_;
    std::vector<std::vector<int>> edges_ending_at_;
    std::vector<int> assignment_;
    std::vector<char> used_;
    long long nodes_ = 0;
    bool budget_hit_ = false;
    std::optional<long long> node_limit_;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
};

} // namespace detail

/// Searches for an injective edge-preserving map of F into H. Found implies
/// the witness is the lexicographically least embedding under ascending
/// pattern-vertex order with ascending host candidates; NotFoundExhausted
/// certifies that no embedding exists.
inline SearchOutcome find_embedding(const Hypergraph& f, const Hypergraph& h,
                                    const SearchBudget& budget = {}) {
    if (f.uniformity() != h.uniformity())
        throw InputError("uniformity mismatch");
    if (f.vertex_count() > h.vertex_count()) {
        detail::validate_budget(budget);
        return SearchOutcome{SearchStatus::NotFoundExhausted, std::nullopt, 0};
    }
    return detail::Matcher(f, h, MapMode::Injective, budget).run();
}

/// Same as find_embedding with the global injectivity constraint dropped;
/// each pattern edge must still map onto k distinct vertices forming a host
/// edge.
inline SearchOutcome find_homomorphism(const Hypergraph& f,
                                       const Hypergraph& h,
                                       const SearchBudget& budget = {}) {
    if (f.uniformity() != h.uniformity())
        throw InputError("uniformity mismatch");
    return detail::Matcher(f, h, MapMode::Homomorphism, budget).run();
}

/// Label-space oracle for zycle containment in the modular construction.
/// Since modular edges depend only on part labels, the zycle of length ell
/// embeds into the construction (with all parts of size >= ell*(k-1)) iff
/// some assignment of labels in [0, p) to the ell*(k-1) zycle vertices makes
/// every zycle edge satisfy the modular edge rule. Enumerates all
/// p^(ell*(k-1)) assignments.
inline bool zycle_in_fp_by_labels(int k, int ell, std::int64_t p,
                                  std::int64_t assignment_budget =
                                      100'000'000) {
    if (k < 3 || ell < k)
        throw ParamError("label oracle requires ell >= k >= 3");
    if (!detail::oracle_is_prime(p))
        throw ParamError("p must be prime");
    const int nv = ell * (k - 1);
    std::int64_t space = 1;
    for (int i = 0; i < nv; ++i) {
        if (space > assignment_budget / p)
            throw SizeError("label assignment space exceeds the budget");
        space *= p;
    }

    // The zycle's edges, written directly from its definition.
    std::vector<std::vector<int>> edges;
    for (int i = 0; i < ell; ++i) {
        const int next = (i + 1) % ell;
        for (int j = 0; j < k - 1; ++j) {
            std::vector<int> e;
            for (int b = 0; b < k - 1; ++b)
                e.push_back(i * (k - 1) + b);
            e.push_back(next * (k - 1) + j);
            edges.push_back(std::move(e));
        }
    }

    std::vector<int> labels(nv, 0);
    while (true) {
        bool all_ok = true;
        for (const auto& e : edges) {
            std::int64_t sum = 0;
            int nonzero = 0;
            int ones = 0;
            for (int v : e) {
                sum += labels[v];
                if (labels[v] != 0)
                    ++nonzero;
                if (labels[v] == 1)
                    ++ones;
            }
            const bool edge_ok =
                (sum % p == 0 && nonzero > 0) || (nonzero == 1 && ones == 1);
            if (!edge_ok) {
                all_ok = false;
                break;
            }
        }
        if (all_ok)
            return true;
        int i = nv - 1;
        while (i >= 0 && labels[i] == p - 1)
            labels[i--] = 0;
        if (i < 0)
            return false;
        ++labels[i];
    }
}

} // namespace cotk
