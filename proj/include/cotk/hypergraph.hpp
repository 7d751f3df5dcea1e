#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <future>
#include <map>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include "cotk/errors.hpp"

namespace cotk {

using Vertex = int;

/// An edge is a strictly increasing tuple of k vertex indices.
using Edge = std::vector<Vertex>;

/// A co-set is a strictly increasing tuple of k-1 vertex indices; codegrees
/// are evaluated for co-sets.
using CoSet = std::vector<Vertex>;

namespace detail {

/// Binomial coefficient saturated at `cap`.
inline long long binom_clamped(long long n, long long r, long long cap) {
    if (r < 0 || n < 0 || r > n)
        return 0;
    r = std::min(r, n - r);
    unsigned __int128 acc = 1;
    for (long long i = 1; i <= r; ++i) {
        acc = acc * static_cast<unsigned long long>(n - r + i) /
              static_cast<unsigned long long>(i);
        if (acc >= static_cast<unsigned __int128>(cap))
            return cap;
    }
    return static_cast<long long>(acc);
}

/// Calls fn(combo) for every r-subset of [0, n) in lexicographic order.
template <typename Fn>
void for_each_combination(int n, int r, Fn&& fn) {
    if (r < 0 || r > n)
        return;
    std::vector<Vertex> combo(r);
    std::iota(combo.begin(), combo.end(), 0);
    while (true) {
        fn(const_cast<const std::vector<Vertex>&>(combo));
        int i = r - 1;
        while (i >= 0 && combo[i] == n - r + i)
            --i;
        if (i < 0)
            break;
        ++combo[i];
        for (int j = i + 1; j < r; ++j)
            combo[j] = combo[j - 1] + 1;
    }
}

inline int env_thread_count() {
    if (const char* v = std::getenv("COTK_THREADS")) {
        const int t = std::atoi(v);
        if (t >= 1)
            return t;
    }
    return 1;
}

/// Thread count for internally parallel counting operations. Defaults to 1;
/// set COTK_THREADS to opt in.
inline int default_thread_count() {
    static const int t = env_thread_count();
    return t;
}

} // namespace detail

/// Immutable k-uniform hypergraph on vertices {0, ..., n-1}. Edges are stored
/// as strictly increasing k-tuples in lexicographic order; equality is
/// structural on (k, n, edge set).
class Hypergraph {
public:
    /// Validates and canonicalizes: every edge must consist of k distinct
    /// in-range indices (any input order), and edges must be pairwise distinct.
    Hypergraph(int k, int n, std::vector<Edge> edges) : k_(k), n_(n) {
        if (k < 2)
            throw InputError("uniformity must be at least 2");
        if (n < 0)
            throw InputError("vertex count must be nonnegative");
        for (Edge& e : edges) {
            if (static_cast<int>(e.size()) != k)
                throw InputError("edge arity differs from uniformity");
            std::sort(e.begin(), e.end());
            if (std::adjacent_find(e.begin(), e.end()) != e.end())
                throw InputError("edge with repeated vertex");
            if (e.front() < 0 || e.back() >= n)
                throw InputError("edge vertex out of range");
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw InputError("duplicate edge");
        edges_ = std::move(edges);
    }

    static Hypergraph edgeless(int k, int n) { return Hypergraph(k, n, {}); }

    static Hypergraph complete(int k, int n) {
        std::vector<Edge> edges;
        detail::for_each_combination(n, k, [&](const std::vector<Vertex>& c) {
            edges.push_back(c);
        });
        return Hypergraph(k, n, std::move(edges));
    }

    int uniformity() const { return k_; }
    int vertex_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    long long edge_count() const { return static_cast<long long>(edges_.size()); }

    /// Membership test for a sorted k-tuple.
    bool has_edge(const Edge& sorted_edge) const {
        return std::binary_search(edges_.begin(), edges_.end(), sorted_edge);
    }

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
    int k_;
    int n_;
    std::vector<Edge> edges_;
};

/// Exact codegree statistics over all (k-1)-subsets of the vertex set.
struct CodegreeReport {
    long long min_codegree = 0;
    long long max_codegree = 0;
    std::map<long long, long long> histogram; // codegree value -> count of co-sets
    CoSet argmin;                             // lexicographically first minimizer
};

namespace detail {

inline void validate_coset(const Hypergraph& h, const CoSet& s) {
    if (static_cast<int>(s.size()) != h.uniformity() - 1)
        throw InputError("co-set size must be uniformity - 1");
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= h.vertex_count())
            throw InputError("co-set vertex out of range");
        if (i > 0 && s[i] <= s[i - 1])
            throw InputError("co-set must be strictly increasing");
    }
}

} // namespace detail

/// Number of edges containing the co-set S.
inline long long codegree(const Hypergraph& h, const CoSet& s) {
    detail::validate_coset(h, s);
    long long d = 0;
    for (const Edge& e : h.edges())
        if (std::includes(e.begin(), e.end(), s.begin(), s.end()))
            ++d;
    return d;
}

/// Vertices v with S + v an edge; sorted ascending, disjoint from S.
inline std::vector<Vertex> neighborhood(const Hypergraph& h, const CoSet& s) {
    detail::validate_coset(h, s);
    std::vector<Vertex> result;
    for (const Edge& e : h.edges()) {
        if (!std::includes(e.begin(), e.end(), s.begin(), s.end()))
            continue;
        for (Vertex v : e)
            if (!std::binary_search(s.begin(), s.end(), v))
                result.push_back(v);
    }
    std::sort(result.begin(), result.end());
    return result;
}

/// Intersection of the neighborhoods of the given co-sets. The list must be
/// nonempty.
inline std::vector<Vertex> common_neighborhood(const Hypergraph& h,
                                               const std::vector<CoSet>& sets) {
    if (sets.empty())
        throw InputError("common neighborhood of an empty co-set list");
    std::vector<Vertex> acc = neighborhood(h, sets.front());
    for (std::size_t i = 1; i < sets.size() && !acc.empty(); ++i) {
        const std::vector<Vertex> nb = neighborhood(h, sets[i]);
        std::vector<Vertex> next;
        std::set_intersection(acc.begin(), acc.end(), nb.begin(), nb.end(),
                              std::back_inserter(next));
        acc = std::move(next);
    }
    return acc;
}

/// Full codegree census. Every (k-1)-subset is enumerated directly, so
/// zero-codegree co-sets show up in the histogram.
inline CodegreeReport min_codegree_report(const Hypergraph& h) {
    const int k = h.uniformity();
    const int n = h.vertex_count();
    if (n < k - 1)
        throw InputError("vertex count below uniformity - 1");
    constexpr long long kMaxSets = 50'000'000;
    if (detail::binom_clamped(n, k - 1, kMaxSets) >= kMaxSets)
        throw SizeError("codegree report would enumerate too many co-sets");

    // One pass over the edges fills the nonzero counts; the sweep below
    // visits every co-set so zeros are included.
    std::map<CoSet, long long> counts;
    CoSet sub(k - 1);
    for (const Edge& e : h.edges()) {
        for (int skip = 0; skip < k; ++skip) {
            int t = 0;
            for (int i = 0; i < k; ++i)
                if (i != skip)
                    sub[t++] = e[i];
            ++counts[sub];
        }
    }

    CodegreeReport report;
    bool first = true;
    detail::for_each_combination(n, k - 1, [&](const CoSet& s) {
        const auto it = counts.find(s);
        const long long d = it == counts.end() ? 0 : it->second;
        ++report.histogram[d];
        if (first || d < report.min_codegree) {
            report.min_codegree = d;
            report.argmin = s;
        }
        if (first || d > report.max_codegree)
            report.max_codegree = d;
        first = false;
    });
    return report;
}

/// t-blow-up: vertex v becomes copies v*t .. v*t+t-1, every edge becomes all
/// t^k transversal k-sets picking one copy per original vertex.
inline Hypergraph blow_up(const Hypergraph& f, int t) {
    if (t <= 0)
        throw InputError("blow-up factor must be positive");
    const int k = f.uniformity();
    long long expected = f.edge_count();
    for (int i = 0; i < k && expected < 200'000'000; ++i)
        expected *= t;
    if (expected >= 200'000'000)
        throw SizeError("blow-up would exceed the edge budget");

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(expected));
    std::vector<int> choice(k);
    for (const Edge& e : f.edges()) {
        std::fill(choice.begin(), choice.end(), 0);
        while (true) {
            Edge image(k);
            for (int i = 0; i < k; ++i)
                image[i] = e[i] * t + choice[i];
            edges.push_back(std::move(image));
            int i = k - 1;
            while (i >= 0 && choice[i] == t - 1)
                choice[i--] = 0;
            if (i < 0)
                break;
            ++choice[i];
        }
    }
    return Hypergraph(k, f.vertex_count() * t, std::move(edges));
}

/// Restriction to `keep` (set semantics), vertices reindexed by ascending
/// original index. Keeps exactly the edges fully inside `keep`.
inline Hypergraph induced_subgraph(const Hypergraph& h,
                                   std::vector<Vertex> keep) {
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    if (!keep.empty() && (keep.front() < 0 || keep.back() >= h.vertex_count()))
        throw InputError("kept vertex out of range");

    std::vector<int> remap(h.vertex_count(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i)
        remap[keep[i]] = static_cast<int>(i);

    std::vector<Edge> edges;
    for (const Edge& e : h.edges()) {
        Edge image;
        image.reserve(e.size());
        for (Vertex v : e) {
            if (remap[v] < 0)
                break;
            image.push_back(remap[v]);
        }
        if (image.size() == e.size())
            edges.push_back(std::move(image));
    }
    return Hypergraph(h.uniformity(), static_cast<int>(keep.size()),
                      std::move(edges));
}

/// Complement of induced_subgraph: equals restriction to V minus `drop`.
inline Hypergraph remove_vertices(const Hypergraph& h,
                                  std::vector<Vertex> drop) {
    std::sort(drop.begin(), drop.end());
    drop.erase(std::unique(drop.begin(), drop.end()), drop.end());
    if (!drop.empty() && (drop.front() < 0 || drop.back() >= h.vertex_count()))
        throw InputError("dropped vertex out of range");
    std::vector<Vertex> keep;
    keep.reserve(h.vertex_count() - drop.size());
    for (Vertex v = 0; v < h.vertex_count(); ++v)
        if (!std::binary_search(drop.begin(), drop.end(), v))
            keep.push_back(v);
    return induced_subgraph(h, std::move(keep));
}

namespace detail {

/// Counts injective edge-preserving maps extending `assignment` by placing
/// pattern vertices u, u+1, ... in natural order.
inline long long count_embeddings_from(const Hypergraph& f, const Hypergraph& h,
                                       std::vector<int>& assignment,
                                       std::vector<char>& used, int u,
                                       const std::vector<std::vector<int>>& edges_ending_at) {
    const int fv = f.vertex_count();
    if (u == fv)
        return 1;
    long long total = 0;
    for (Vertex w = 0; w < h.vertex_count(); ++w) {
        if (used[w])
            continue;
        assignment[u] = w;
        bool ok = true;
        Edge image(f.uniformity());
        for (int ei : edges_ending_at[u]) {
            const Edge& pe = f.edges()[ei];
            for (std::size_t i = 0; i < pe.size(); ++i)
                image[i] = assignment[pe[i]];
            std::sort(image.begin(), image.end());
            if (!h.has_edge(image)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            used[w] = 1;
            total += count_embeddings_from(f, h, assignment, used, u + 1,
                                           edges_ending_at);
            used[w] = 0;
        }
    }
    assignment[u] = -1;
    return total;
}

} // namespace detail

/// Number of injective edge-preserving maps V(F) -> V(H), counted labeled
/// (not up to automorphism). Deterministic for any thread count; threads = 0
/// takes the COTK_THREADS default.
inline long long count_labeled_embeddings(const Hypergraph& f,
                                          const Hypergraph& h,
                                          int threads = 0) {
    if (f.uniformity() != h.uniformity())
        throw InputError("uniformity mismatch");
    const int fv = f.vertex_count();
    if (fv > h.vertex_count())
        return 0;
    if (fv == 0)
        return 1;

    // Each pattern edge is checked once, at its largest vertex.
    std::vector<std::vector<int>> edges_ending_at(fv);
    for (std::size_t i = 0; i < f.edges().size(); ++i)
        edges_ending_at[f.edges()[i].back()].push_back(static_cast<int>(i));

    if (threads <= 0)
        threads = detail::default_thread_count();
    threads = std::min(threads, h.vertex_count());
    // No edge ends at pattern vertex 0 (k >= 2), so the root placement is free.
    auto count_root = [&](Vertex first) {
        std::vector<int> assignment(fv, -1);
        std::vector<char> used(h.vertex_count(), 0);
        assignment[0] = first;
        used[first] = 1;
        return detail::count_embeddings_from(f, h, assignment, used, 1,
                                             edges_ending_at);
    };

    if (threads <= 1) {
        long long total = 0;
        for (Vertex w = 0; w < h.vertex_count(); ++w)
            total += count_root(w);
        return total;
    }
    // Strided root split; integer addition keeps the total independent of
    // the schedule.
    auto count_stride = [&](Vertex start) {
        long long subtotal = 0;
        for (Vertex w = start; w < h.vertex_count(); w += threads)
            subtotal += count_root(w);
        return subtotal;
    };
    std::vector<std::future<long long>> parts;
    parts.reserve(threads);
    for (int s = 0; s < threads; ++s)
        parts.push_back(std::async(std::launch::async, count_stride, s));
    long long total = 0;
    for (auto& p : parts)
        total += p.get();
    return total;
}

} // namespace cotk
