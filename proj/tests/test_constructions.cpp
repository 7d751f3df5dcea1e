#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "cotk/constructions.hpp"
#include "cotk/hypergraph.hpp"

using namespace cotk;

namespace {

std::vector<Vertex> range(Vertex lo, Vertex hi) {
    std::vector<Vertex> out;
    for (Vertex v = lo; v < hi; ++v)
        out.push_back(v);
    return out;
}

// Test-side oracle: minimum codegree by direct enumeration.
long long naive_min_codegree(const Hypergraph& h) {
    long long best = -1;
    detail::for_each_combination(
        h.vertex_count(), h.uniformity() - 1, [&](const CoSet& s) {
            long long d = 0;
            for (const Edge& e : h.edges())
                if (std::includes(e.begin(), e.end(), s.begin(), s.end()))
                    ++d;
            if (best < 0 || d < best)
                best = d;
        });
    return best;
}

} // namespace

TEST_CASE("zycle shape") {
    const Hypergraph z33 = make_zycle(3, 3);
    REQUIRE(z33.vertex_count() == 6);
    REQUIRE(z33.edge_count() == 6);
    REQUIRE(z33.edges() == std::vector<Edge>{{0, 1, 2},
                                             {0, 1, 3},
                                             {0, 4, 5},
                                             {1, 4, 5},
                                             {2, 3, 4},
                                             {2, 3, 5}});

    const Hypergraph z44 = make_zycle(4, 4);
    REQUIRE(z44.vertex_count() == 12);
    REQUIRE(z44.edge_count() == 12);

    REQUIRE_THROWS_AS(make_zycle(3, 2), ParamError);
    REQUIRE_THROWS_AS(make_zycle(1, 5), ParamError);

    SECTION("body codegree is k-1 for several parameters") {
        for (const auto& [k, ell] : std::vector<std::pair<int, int>>{
                 {3, 3}, {3, 5}, {4, 4}, {4, 6}}) {
            const Hypergraph z = make_zycle(k, ell);
            REQUIRE(z.vertex_count() == ell * (k - 1));
            REQUIRE(z.edge_count() == ell * (k - 1));
            for (int i = 0; i < ell; ++i) {
                CoSet body;
                for (int j = 0; j < k - 1; ++j)
                    body.push_back(i * (k - 1) + j);
                REQUIRE(codegree(z, body) == k - 1);
            }
        }
    }
}

TEST_CASE("modular construction") {
    SECTION("label rule on 9 vertices") {
        const auto [fp, labeling] = make_fp(3, 3, 9);
        REQUIRE(fp.vertex_count() == 9);
        REQUIRE(fp.edge_count() == 38);
        REQUIRE(labeling.part_count == 3);
        REQUIRE(labeling.part_vertices(1) == std::vector<Vertex>{3, 4, 5});

        // All-ones labels sum to 3: an edge.
        REQUIRE(fp.has_edge({3, 4, 5}));
        // All-zero labels: not an edge.
        REQUIRE_FALSE(fp.has_edge({0, 1, 2}));
        // Exactly one label 1, rest 0: an edge.
        REQUIRE(fp.has_edge({0, 1, 3}));
        // Sum 0 mod 3 with mixed labels: an edge.
        REQUIRE(fp.has_edge({0, 3, 6}));
    }

    SECTION("minimum codegrees at small primes fall short of n/p") {
        // The extension class of a co-set can collide with the co-set's own
        // parts: for p = 3 the all-ones pair forces a third vertex from the
        // same part (deficit 2), for p >= 5 the pair {1, p-2} forces a vertex
        // from V_1 (deficit 1).
        const auto cases = std::vector<std::tuple<long long, long long, long long>>{
            {3, 9, 1}, {3, 18, 4}, {5, 15, 2}, {7, 21, 2}};
        for (const auto& [p, n, expected] : cases) {
            const auto [fp, labeling] = make_fp(3, p, n);
            REQUIRE(min_codegree_report(fp).min_codegree == expected);
            REQUIRE(naive_min_codegree(fp) == expected);
        }
    }

    SECTION("p = 2 attains n/p exactly") {
        const auto [fp, labeling] = make_fp(3, 2, 8);
        REQUIRE(min_codegree_report(fp).min_codegree == 4);
    }

    SECTION("parameter errors") {
        REQUIRE_THROWS_AS(make_fp(3, 4, 8), ParamError);  // 4 not prime
        REQUIRE_THROWS_AS(make_fp(3, 3, 10), ParamError); // 3 does not divide 10
        REQUIRE_THROWS_AS(make_fp(3, 5, 10), ParamError); // part size 2 < k
        REQUIRE_THROWS_AS(make_fp(1, 3, 9), ParamError);
    }
}

TEST_CASE("layer host") {
    SECTION("two layers, no core") {
        const auto [host, parts] = make_host(3, 2, Rational(1, 5), 30);
        REQUIRE(host.vertex_count() == 30);
        REQUIRE(parts.part_vertices(0) == range(0, 12));
        REQUIRE(parts.part_vertices(1) == range(12, 30));
        // C(30,3) - C(12,3) - C(18,3)
        REQUIRE(host.edge_count() == 4060 - 220 - 816);

        // Co-sets inside a layer see exactly the complement of that layer;
        // the largest layer bounds the minimum codegree at 30 - 18 = 12.
        REQUIRE(neighborhood(host, {0, 1}) == range(12, 30));
        REQUIRE(codegree(host, {12, 13}) == 12);
        REQUIRE(min_codegree_report(host).min_codegree == 12);
    }

    SECTION("two layers with a modular core") {
        const auto [host, parts] = make_host(3, 2, Rational(1, 5), 30, 3);
        REQUIRE(host.edge_count() == 3024 + 346);
        // Inside V_2 the host contributes 12 extensions and the core at least
        // its own minimum 4, so the overall minimum is 16.
        REQUIRE(min_codegree_report(host).min_codegree == 16);

        // For S inside V_r, codegree decomposes into host part plus core part.
        const auto [core, core_parts] = make_fp(3, 3, 18);
        detail::for_each_combination(18, 2, [&, &host = host,
                                             &core = core](const CoSet& s) {
            CoSet shifted{s[0] + 12, s[1] + 12};
            REQUIRE(codegree(host, shifted) == 12 + codegree(core, s));
        });
    }

    SECTION("one layer with core degenerates to the modular construction") {
        const auto [host, parts] = make_host(3, 1, Rational(2, 7), 9, 3);
        const auto [fp, fparts] = make_fp(3, 3, 9);
        REQUIRE(host == fp);
        REQUIRE(parts.part_count == 1);
    }

    SECTION("restriction to the last layer reproduces the core") {
        const auto [host, parts] = make_host(3, 2, Rational(1, 5), 30, 3);
        const auto [fp, fparts] = make_fp(3, 3, 18);
        REQUIRE(induced_subgraph(host, range(12, 30)) == fp);
        REQUIRE(remove_vertices(host, range(0, 12)) == fp);
    }

    SECTION("three layers: common neighborhood of layer co-sets") {
        const auto [host, parts] = make_host(3, 3, Rational(1, 10), 30, 3);
        REQUIRE(parts.part_vertices(2) == range(18, 30));
        REQUIRE(common_neighborhood(host, {CoSet{0, 1}, CoSet{9, 10}}) ==
                range(18, 30));
        REQUIRE(induced_subgraph(host, range(18, 30)) ==
                make_fp(3, 3, 12).first);
    }

    SECTION("parameter errors") {
        REQUIRE_THROWS_AS(make_host(3, 2, Rational(1, 5), 30, 5),
                          ParamError); // 5 does not divide 18
        REQUIRE_THROWS_AS(make_host(3, 2, Rational(6, 5), 30), ParamError);
        REQUIRE_THROWS_AS(make_host(3, 0, Rational(1, 5), 30), ParamError);
        REQUIRE_THROWS_AS(make_host(3, 9, Rational(1, 5), 18),
                          ParamError); // layer size 1 < k-1
    }
}

TEST_CASE("host reduction arithmetic") {
    SECTION("fixtures") {
        const ReducedParams a = reduce_host_params(2, Rational(1, 5), 30);
        REQUIRE(a.n_prime == 18);
        REQUIRE(a.eta_prime == Rational(1, 3));

        const ReducedParams b = reduce_host_params(3, Rational(1, 10), 30);
        REQUIRE(b.n_prime == 21);
        REQUIRE(b.eta_prime == Rational(1, 7));
    }

    SECTION("layer sizes are preserved") {
        for (const auto& [r, eta, n] :
             std::vector<std::tuple<int, Rational, std::int64_t>>{
                 {2, Rational(1, 5), 30},
                 {3, Rational(1, 10), 30},
                 {4, Rational(1, 7), 56},
                 {2, Rational(2, 9), 45}}) {
            const std::int64_t m = (((Rational(1, 1) - eta) * n) / r).floor();
            const ReducedParams red = reduce_host_params(r, eta, n);
            const std::int64_t m_prime =
                (((Rational(1, 1) - red.eta_prime) * red.n_prime) / (r - 1))
                    .floor();
            REQUIRE(m_prime == m);
            REQUIRE(Rational(0, 1) < red.eta_prime);
            REQUIRE(red.eta_prime < Rational(1, 1));
        }
    }

    SECTION("requires r >= 2") {
        REQUIRE_THROWS_AS(reduce_host_params(1, Rational(1, 5), 30),
                          ParamError);
    }
}

TEST_CASE("host reduction isomorphism") {
    // Removing any of the first r-1 layers matches the reduced host exactly
    // under the canonical order-preserving relabeling.
    SECTION("r = 2") {
        const auto [host, parts] = make_host(3, 2, Rational(1, 5), 30, 3);
        const ReducedParams red = reduce_host_params(2, Rational(1, 5), 30);
        const auto [reduced, rparts] =
            make_host(3, 1, red.eta_prime, red.n_prime, 3);
        REQUIRE(remove_vertices(host, range(0, 12)) == reduced);
    }

    SECTION("r = 3, either removable layer") {
        const auto [host, parts] = make_host(3, 3, Rational(1, 10), 30, 3);
        const ReducedParams red = reduce_host_params(3, Rational(1, 10), 30);
        const auto [reduced, rparts] =
            make_host(3, 2, red.eta_prime, red.n_prime, 3);
        REQUIRE(remove_vertices(host, range(0, 9)) == reduced);
        REQUIRE(remove_vertices(host, range(9, 18)) == reduced);
    }
}

TEST_CASE("recursive pattern") {
    SECTION("level 1 is the zycle") {
        const auto [g, layout] = make_g(3, 3, 1);
        REQUIRE(g == make_zycle(3, 3));
        REQUIRE(layout.block_subsets.size() == 1);
        REQUIRE(layout.block_subsets[0].empty());
        REQUIRE(layout.block_start(0) == 0);
        REQUIRE(layout.role_of[0].kind == GRole::Kind::ZycleBlock);
    }

    SECTION("level 2 counts") {
        const auto [g, layout] = make_g(3, 3, 2);
        REQUIRE(g.vertex_count() == 48);
        REQUIRE(g.edge_count() == 120);
        REQUIRE(layout.base_vertex_count == 6);
        REQUIRE(layout.copies == 2);
        REQUIRE(layout.block_subsets.size() == 6);
        REQUIRE(layout.block_size == 6);

        // Closed form: (k-1)|V| + C(|V|, r-1) * ell*(k-1) vertices and
        // (k-1)^k |E| + C(|V|, r-1) * ell*(k-1) * (1 + (r-1)) edges.
        REQUIRE(g.vertex_count() == 2 * 6 + 6 * 6);
        REQUIRE(g.edge_count() == 8 * 6 + 6 * 6 * 2);
    }

    SECTION("every block induces the zycle") {
        const auto [g, layout] = make_g(3, 3, 2);
        const Hypergraph z = make_zycle(3, 3);
        for (std::size_t b = 0; b < layout.block_subsets.size(); ++b) {
            const int start = layout.block_start(static_cast<int>(b));
            REQUIRE(induced_subgraph(g, range(start, start + layout.block_size)) ==
                    z);
        }
    }

    SECTION("roles are consistent with the layout") {
        const auto [g, layout] = make_g(3, 3, 2);
        for (Vertex v = 0; v < 12; ++v) {
            REQUIRE(layout.role_of[v].kind == GRole::Kind::BlowupCopy);
            REQUIRE(layout.role_of[v].original == v / 2);
            REQUIRE(layout.role_of[v].copy_index == v % 2);
        }
        for (Vertex v = 12; v < 48; ++v) {
            REQUIRE(layout.role_of[v].kind == GRole::Kind::ZycleBlock);
            REQUIRE(layout.role_of[v].block == (v - 12) / 6);
            REQUIRE(layout.role_of[v].position == (v - 12) % 6);
        }
    }

    SECTION("connecting edges join copy tuples to whole blocks") {
        const auto [g, layout] = make_g(3, 3, 2);
        // Block 0 belongs to S = {0}: edges {x_0^1, x_0^2, y} for y in block.
        REQUIRE(layout.block_subsets[0] == std::vector<Vertex>{0});
        for (int y = 12; y < 18; ++y)
            REQUIRE(g.has_edge({0, 1, y}));
        // No connecting edges from vertex 1's copies into block 0.
        REQUIRE_FALSE(g.has_edge({2, 3, 12}));
    }

    SECTION("guards") {
        REQUIRE_THROWS_AS(make_g(3, 3, 0), ParamError);
        REQUIRE_THROWS_AS(make_g(2, 3, 1), ParamError);
        REQUIRE_THROWS_AS(make_g(3, 3, 3, 1000), SizeError);
    }

    SECTION("uniformity 4 counts match the closed form") {
        const auto [g, layout] = make_g(4, 4, 2);
        // 3*12 blow-up vertices plus C(12,1) blocks of 12.
        REQUIRE(g.vertex_count() == 36 + 12 * 12);
        // 81*12 blow-up edges, 12 zycle edges and 12 connecting edges per
        // block.
        REQUIRE(g.edge_count() == 972 + 12 * 12 + 12 * 12);
        const Hypergraph z = make_zycle(4, 4);
        const int start = layout.block_start(0);
        std::vector<Vertex> block;
        for (int v = start; v < start + layout.block_size; ++v)
            block.push_back(v);
        REQUIRE(induced_subgraph(g, block) == z);
    }
}

TEST_CASE("exact rationals") {
    REQUIRE(Rational::parse("1/5") == Rational(1, 5));
    REQUIRE(Rational::parse("-2/6") == Rational(-1, 3));
    REQUIRE(Rational::parse("7") == Rational(7, 1));
    REQUIRE(Rational(3, -9) == Rational(-1, 3));
    REQUIRE((Rational(1, 2) + Rational(1, 10)) * 30 == Rational(18, 1));
    REQUIRE(((Rational(1, 1) - Rational(1, 5)) * 30 / 2).floor() == 12);
    REQUIRE(Rational(-7, 2).floor() == -4);
    REQUIRE(Rational(1, 3) < Rational(2, 5));
    REQUIRE(Rational(1, 5).str() == "1/5");

    REQUIRE_THROWS_AS(Rational(1, 0), ParamError);
    REQUIRE_THROWS_AS(Rational::parse("0.2"), ParamError);
    REQUIRE_THROWS_AS(Rational::parse(""), ParamError);
    REQUIRE_THROWS_AS(Rational::parse("a/b"), ParamError);
}
