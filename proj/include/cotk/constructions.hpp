#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cotk/errors.hpp"
#include "cotk/hypergraph.hpp"
#include "cotk/rational.hpp"

namespace cotk {

/// Vertex -> part index map for partitioned constructions. For the modular
/// construction part i is the label class f(v) = i; for layer hosts parts
/// 0..r-1 are the layers V_1..V_r.
struct PartLabeling {
    std::vector<int> part_of;
    int part_count = 0;

    int part(Vertex v) const { return part_of.at(static_cast<std::size_t>(v)); }

    std::vector<Vertex> part_vertices(int i) const {
        std::vector<Vertex> vs;
        for (std::size_t v = 0; v < part_of.size(); ++v)
            if (part_of[v] == i)
                vs.push_back(static_cast<Vertex>(v));
        return vs;
    }
};

/// Parameters of the layer host H^r(eta, n), optionally with a modular core
/// inside the last layer. eta is exact; every floor below is exact integer
/// arithmetic.
struct HostParams {
    int k = 3;
    int r = 1;
    Rational eta;
    std::int64_t n = 0;
    std::optional<std::int64_t> p;

    /// |V_i| for i in [1, r-1]: floor((1 - eta) * n / r).
    std::int64_t layer_size() const {
        return (((Rational(1, 1) - eta) * n) / r).floor();
    }

    /// |V_r| = n - (r-1) * layer_size().
    std::int64_t last_layer_size() const {
        return n - static_cast<std::int64_t>(r - 1) * layer_size();
    }
};

/// Parameters after peeling one layer off a host: n' = n - layer, and eta'
/// chosen so the remaining layer sizes are preserved exactly.
struct ReducedParams {
    std::int64_t n_prime = 0;
    Rational eta_prime;
};

/// Per-vertex role inside a recursive zycle pattern G_ell^r.
struct GRole {
    enum class Kind { BlowupCopy, ZycleBlock };
    Kind kind = Kind::BlowupCopy;
    Vertex original = -1; // BlowupCopy: vertex of the previous level
    int copy_index = -1;  // BlowupCopy: which of the k-1 copies
    int block = -1;       // ZycleBlock: index into block_subsets
    int position = -1;    // ZycleBlock: offset within the block's zycle layout
};

/// Deterministic layout of G_ell^r: the (k-1)-fold blow-up of the previous
/// level occupies indices 0 .. (k-1)*base_vertex_count - 1 grouped by original
/// vertex; one fresh zycle block per (r-1)-subset S of the previous level's
/// vertices follows, blocks in lexicographic order of S. For r = 1 the whole
/// graph is a single zycle block attached to the empty subset.
struct GLayout {
    int base_vertex_count = 0;
    int copies = 1;
    int block_size = 0;
    std::vector<std::vector<Vertex>> block_subsets;
    std::vector<GRole> role_of;

    int block_start(int b) const {
        return base_vertex_count * copies + b * block_size;
    }
};

namespace detail {

inline bool is_prime(std::int64_t p) {
    if (p < 2)
        return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

inline void guard_combination_count(std::int64_t n, int k) {
    constexpr long long kMaxEnumeration = 20'000'000;
    if (binom_clamped(n, k, kMaxEnumeration) >= kMaxEnumeration)
        throw SizeError("construction would enumerate too many k-sets");
}

/// Modular edge rule on part labels: the labels sum to 0 mod p with some
/// label nonzero, or exactly one label equals 1 and the rest are 0.
inline bool modular_edge(const std::vector<int>& labels, std::int64_t p) {
    std::int64_t sum = 0;
    int nonzero = 0;
    int ones = 0;
    for (int l : labels) {
        sum += l;
        if (l != 0)
            ++nonzero;
        if (l == 1)
            ++ones;
    }
    if (sum % p == 0 && nonzero > 0)
        return true;
    return nonzero == 1 && ones == 1;
}

} // namespace detail

/// The k-uniform zycle of length ell: ell groups of k-1 vertices arranged
/// cyclically; group i occupies indices (i-1)(k-1) .. i(k-1)-1, and each edge
/// is a full group plus one vertex of the next group (indices mod ell).
inline Hypergraph make_zycle(int k, int ell) {
    if (k < 2 || ell < k)
        throw ParamError("zycle requires ell >= k >= 2");
    const int n = ell * (k - 1);
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < ell; ++i) {
        const int next = (i + 1) % ell;
        for (int j = 0; j < k - 1; ++j) {
            Edge e;
            e.reserve(k);
            for (int b = 0; b < k - 1; ++b)
                e.push_back(i * (k - 1) + b);
            e.push_back(next * (k - 1) + j);
            edges.push_back(std::move(e));
        }
    }
    return Hypergraph(k, n, std::move(edges));
}

/// The modular construction on p parts of size n/p: part V_i occupies indices
/// i*(n/p) .. (i+1)*(n/p)-1 and carries label i; a k-set is an edge iff its
/// labels sum to 0 mod p with some label nonzero, or exactly one label is 1
/// and the other k-1 labels are 0.
inline std::pair<Hypergraph, PartLabeling> make_fp(int k, std::int64_t p,
                                                   std::int64_t n) {
    if (k < 2)
        throw ParamError("uniformity must be at least 2");
    if (!detail::is_prime(p))
        throw ParamError("p must be prime");
    if (n % p != 0)
        throw ParamError("p must divide n");
    if (n / p < k)
        throw ParamError("part size n/p must be at least k");
    detail::guard_combination_count(n, k);

    const std::int64_t part = n / p;
    PartLabeling labeling;
    labeling.part_count = static_cast<int>(p);
    labeling.part_of.resize(static_cast<std::size_t>(n));
    for (std::int64_t v = 0; v < n; ++v)
        labeling.part_of[static_cast<std::size_t>(v)] =
            static_cast<int>(v / part);

    std::vector<Edge> edges;
    std::vector<int> labels(k);
    detail::for_each_combination(static_cast<int>(n), k,
                                 [&](const std::vector<Vertex>& c) {
                                     for (int i = 0; i < k; ++i)
                                         labels[i] = labeling.part_of[c[i]];
                                     if (detail::modular_edge(labels, p))
                                         edges.push_back(c);
                                 });
    return {Hypergraph(k, static_cast<int>(n), std::move(edges)),
            std::move(labeling)};
}

/// Layer host: layers V_1 .. V_{r-1} of size floor((1-eta)n/r) laid out
/// consecutively, V_r the remainder; edges are all k-sets not inside a single
/// layer, plus (if p is given) the modular construction placed canonically
/// inside V_r.
inline std::pair<Hypergraph, PartLabeling> make_host(const HostParams& params) {
    const int k = params.k;
    const int r = params.r;
    if (k < 2)
        throw ParamError("uniformity must be at least 2");
    if (r < 1)
        throw ParamError("layer count must be at least 1");
    if (!(Rational(0, 1) < params.eta && params.eta < Rational(1, 1)))
        throw ParamError("eta must lie strictly between 0 and 1");
    if (params.n < 0)
        throw ParamError("vertex count must be nonnegative");

    const std::int64_t m = params.layer_size();
    const std::int64_t last = params.last_layer_size();
    if (r >= 2 && m < k - 1)
        throw ParamError("layer size floor((1-eta)n/r) must be at least k-1");
    if (last < 0)
        throw ParamError("last layer has negative size");
    detail::guard_combination_count(params.n, k);

    PartLabeling labeling;
    labeling.part_count = r;
    labeling.part_of.resize(static_cast<std::size_t>(params.n));
    for (std::int64_t v = 0; v < params.n; ++v) {
        const std::int64_t layer = (r >= 2 && v < (r - 1) * m) ? v / m : r - 1;
        labeling.part_of[static_cast<std::size_t>(v)] = static_cast<int>(layer);
    }

    std::vector<Edge> edges;
    detail::for_each_combination(
        static_cast<int>(params.n), k, [&](const std::vector<Vertex>& c) {
            const int first_part = labeling.part_of[c.front()];
            for (Vertex v : c)
                if (labeling.part_of[v] != first_part) {
                    edges.push_back(c);
                    return;
                }
        });

    if (params.p) {
        // The core inside V_r is exactly make_fp(k, p, |V_r|) shifted by the
        // offset of V_r, so restricting the host to V_r reproduces it verbatim.
        const std::int64_t offset = (r - 1) * m;
        auto [core, core_labeling] = make_fp(k, *params.p, last);
        for (const Edge& e : core.edges()) {
            Edge shifted(e);
            for (Vertex& v : shifted)
                v += static_cast<Vertex>(offset);
            edges.push_back(std::move(shifted));
        }
    }
    return {Hypergraph(k, static_cast<int>(params.n), std::move(edges)),
            std::move(labeling)};
}

inline std::pair<Hypergraph, PartLabeling> make_host(
    int k, int r, const Rational& eta, std::int64_t n,
    std::optional<std::int64_t> p = std::nullopt) {
    return make_host(HostParams{k, r, eta, n, p});
}

/// Peels one layer: n' = n - floor((1-eta)n/r) and eta' = 1 - (r-1)m/n', so
/// that floor((1-eta')n'/(r-1)) equals the original layer size exactly.
inline ReducedParams reduce_host_params(int r, const Rational& eta,
                                        std::int64_t n) {
    if (r < 2)
        throw ParamError("reduction requires at least two layers");
    if (!(Rational(0, 1) < eta && eta < Rational(1, 1)))
        throw ParamError("eta must lie strictly between 0 and 1");
    const std::int64_t m = (((Rational(1, 1) - eta) * n) / r).floor();
    if (m < 1)
        throw ParamError("layer size must be positive");
    const std::int64_t n_prime = n - m;
    const Rational eta_prime =
        Rational(1, 1) - Rational((r - 1) * m, n_prime);
    if (!(Rational(0, 1) < eta_prime && eta_prime < Rational(1, 1)))
        throw ParamError("reduced eta leaves (0,1)");
    return ReducedParams{n_prime, eta_prime};
}

/// Recursive zycle pattern. G^1 is the zycle itself; G^r is the (k-1)-fold
/// blow-up of G^{r-1} plus, for every (r-1)-subset S of the previous level's
/// vertices, a fresh zycle block V_S joined to the copy tuples of S: for each
/// v in S, all edges {x_v^1, ..., x_v^{k-1}, y} with y in V_S.
inline std::pair<Hypergraph, GLayout> make_g(int k, int ell, int r,
                                             std::int64_t vertex_budget =
                                                 100'000) {
    if (k < 3 || ell < k)
        throw ParamError("recursive pattern requires ell >= k >= 3");
    if (r < 1)
        throw ParamError("level must be at least 1");

    if (r == 1) {
        Hypergraph z = make_zycle(k, ell);
        GLayout layout;
        layout.base_vertex_count = 0;
        layout.copies = k - 1;
        layout.block_size = z.vertex_count();
        layout.block_subsets = {std::vector<Vertex>{}};
        layout.role_of.resize(static_cast<std::size_t>(z.vertex_count()));
        for (int v = 0; v < z.vertex_count(); ++v)
            layout.role_of[v] = GRole{GRole::Kind::ZycleBlock, -1, -1, 0, v};
        if (z.vertex_count() > vertex_budget)
            throw SizeError("pattern exceeds the vertex budget");
        return {std::move(z), std::move(layout)};
    }

    auto [prev, prev_layout] = make_g(k, ell, r - 1, vertex_budget);
    const std::int64_t base = prev.vertex_count();
    const std::int64_t block_size = static_cast<std::int64_t>(ell) * (k - 1);
    const std::int64_t block_count =
        detail::binom_clamped(base, r - 1, vertex_budget + 1);
    const std::int64_t total =
        base * (k - 1) + block_count * block_size;
    if (block_count > vertex_budget || total > vertex_budget)
        throw SizeError("pattern exceeds the vertex budget");

    Hypergraph blown = blow_up(prev, k - 1);
    std::vector<Edge> edges = blown.edges();
    const Hypergraph zycle = make_zycle(k, ell);

    GLayout layout;
    layout.base_vertex_count = static_cast<int>(base);
    layout.copies = k - 1;
    layout.block_size = static_cast<int>(block_size);
    layout.role_of.resize(static_cast<std::size_t>(total));
    for (int v = 0; v < base; ++v)
        for (int j = 0; j < k - 1; ++j)
            layout.role_of[v * (k - 1) + j] =
                GRole{GRole::Kind::BlowupCopy, v, j, -1, -1};

    int offset = static_cast<int>(base) * (k - 1);
    int block_index = 0;
    detail::for_each_combination(
        static_cast<int>(base), r - 1, [&](const std::vector<Vertex>& s) {
            layout.block_subsets.push_back(s);
            for (int pos = 0; pos < layout.block_size; ++pos)
                layout.role_of[offset + pos] =
                    GRole{GRole::Kind::ZycleBlock, -1, -1, block_index, pos};
            for (const Edge& e : zycle.edges()) {
                Edge shifted(e);
                for (Vertex& v : shifted)
                    v += offset;
                edges.push_back(std::move(shifted));
            }
            for (Vertex v : s) {
                Edge body;
                for (int j = 0; j < k - 1; ++j)
                    body.push_back(v * (k - 1) + j);
                for (int y = offset; y < offset + layout.block_size; ++y) {
                    Edge e(body);
                    e.push_back(y);
                    edges.push_back(std::move(e));
                }
            }
            offset += layout.block_size;
            ++block_index;
        });

    return {Hypergraph(k, static_cast<int>(total), std::move(edges)),
            std::move(layout)};
}

} // namespace cotk
