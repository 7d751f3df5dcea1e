#pragma once

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cotk/constructions.hpp"
#include "cotk/extremal.hpp"
#include "cotk/hypergraph.hpp"
#include "cotk/rational.hpp"
#include "cotk/search.hpp"

namespace cotk::fixtures {

struct FixtureResult {
    int id = 0;
    std::string name;
    bool pass = true;
    std::string detail; // failure explanations, empty when passing
};

namespace detail {

using cotk::detail::for_each_combination;

struct Checker {
    bool pass = true;
    std::string failures;

    void expect(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (!failures.empty())
                failures += "; ";
            failures += what;
        }
    }
};

inline std::vector<Vertex> vertex_range(Vertex lo, Vertex hi) {
    std::vector<Vertex> out;
    out.reserve(hi - lo);
    for (Vertex v = lo; v < hi; ++v)
        out.push_back(v);
    return out;
}

// Brute-force embedding existence over all injections; shares no code with
// the search engine it cross-checks.
inline bool brute_embeds_rec(const Hypergraph& f, const Hypergraph& h,
                             std::vector<Vertex>& chosen,
                             std::vector<char>& used) {
    if (static_cast<int>(chosen.size()) == f.vertex_count()) {
        Edge image;
        for (const Edge& e : f.edges()) {
            image.clear();
            for (Vertex v : e)
                image.push_back(chosen[v]);
            std::sort(image.begin(), image.end());
            if (!h.has_edge(image))
                return false;
        }
        return true;
    }
    for (Vertex w = 0; w < h.vertex_count(); ++w) {
        if (used[w])
            continue;
        used[w] = 1;
        chosen.push_back(w);
        if (brute_embeds_rec(f, h, chosen, used))
            return true;
        chosen.pop_back();
        used[w] = 0;
    }
    return false;
}

inline bool brute_embeds(const Hypergraph& f, const Hypergraph& h) {
    if (f.vertex_count() > h.vertex_count())
        return false;
    std::vector<Vertex> chosen;
    std::vector<char> used(h.vertex_count(), 0);
    return brute_embeds_rec(f, h, chosen, used);
}

// Plain enumeration of all 2^C(n,k) edge subsets: the independent route for
// the extremal numbers.
inline long long plain_ex_co(int n, const Hypergraph& pattern) {
    const int k = pattern.uniformity();
    std::vector<Edge> all_edges;
    for_each_combination(n, k, [&](const std::vector<Vertex>& c) {
        all_edges.push_back(c);
    });
    long long best = -1;
    for (unsigned long mask = 0; mask < (1UL << all_edges.size()); ++mask) {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < all_edges.size(); ++i)
            if (mask >> i & 1)
                edges.push_back(all_edges[i]);
        const Hypergraph h(k, n, std::move(edges));
        long long min_d = -1;
        for_each_combination(n, k - 1, [&, &h = h](const CoSet& s) {
            long long d = 0;
            for (const Edge& e : h.edges())
                if (std::includes(e.begin(), e.end(), s.begin(), s.end()))
                    ++d;
            if (min_d < 0 || d < min_d)
                min_d = d;
        });
        if (min_d > best && !brute_embeds(pattern, h))
            best = min_d;
    }
    return best;
}

inline FixtureResult fixture_modular_min_codegree() {
    Checker c;
    const std::vector<std::pair<long long, long long>> tuples = {
        {3, 9}, {3, 18}, {5, 15}, {7, 21}};
    for (const auto& [p, n] : tuples) {
        const auto [fp, labels] = make_fp(3, p, n);
        const long long min = min_codegree_report(fp).min_codegree;
        std::ostringstream msg;
        msg << "modular construction (p=" << p << ", n=" << n
            << "): min codegree expected n/p = " << n / p << ", got " << min;
        c.expect(min == n / p, msg.str());
    }
    return FixtureResult{1, "modular-min-codegree-equals-n-over-p", c.pass,
                         c.failures};
}

inline FixtureResult fixture_containment_boundary() {
    Checker c;
    for (const long long p : {3LL, 5LL, 7LL}) {
        const bool by_labels = zycle_in_fp_by_labels(3, 3, p);
        const auto [fp, labels] = make_fp(3, p, 6 * p);
        const SearchOutcome by_search = find_embedding(make_zycle(3, 3), fp);
        c.expect(by_search.status != SearchStatus::BudgetExceeded,
                 "embedding search must run to exhaustion");
        const bool by_embedding = by_search.status == SearchStatus::Found;
        std::ostringstream msg;
        msg << "oracle disagreement at p=" << p << ": labels says "
            << (by_labels ? "contained" : "not contained")
            << ", embedding says "
            << (by_embedding ? "contained" : "not contained");
        c.expect(by_labels == by_embedding, msg.str());
        if (by_embedding)
            c.expect(validate_vertex_map(make_zycle(3, 3), fp,
                                         *by_search.witness),
                     "embedding witness failed validation");
        if (p == 3)
            c.expect(by_labels, "zycle must be contained at p=3");
    }
    // The explicit all-ones label witness at p = 3: every zycle edge carries
    // labels (1,1,1), which sum to 3 = 0 mod 3 with nonzero labels.
    const Hypergraph z = make_zycle(3, 3);
    bool all_ones_ok = true;
    for (const Edge& e : z.edges()) {
        const long long sum = static_cast<long long>(e.size()); // all labels 1
        if (sum % 3 != 0)
            all_ones_ok = false;
    }
    c.expect(all_ones_ok, "all-ones label assignment must satisfy every edge");
    return FixtureResult{2, "zycle-modular-containment-boundary", c.pass,
                         c.failures};
}

inline FixtureResult fixture_host_codegree_bound() {
    Checker c;
    const auto [with_core, parts] = make_host(3, 2, Rational(1, 5), 30, 3);
    const long long min_with = min_codegree_report(with_core).min_codegree;
    {
        std::ostringstream msg;
        msg << "host with core (k=3, r=2, eta=1/5, n=30, p=3): min codegree "
               "expected 18, got "
            << min_with;
        c.expect(min_with == 18, msg.str());
    }
    {
        // (1/2 + 1/10) * 30 = 18; the minimum codegree must reach it.
        const Rational bound = (Rational(1, 2) + Rational(1, 10)) * 30;
        std::ostringstream msg;
        msg << "host min codegree " << min_with
            << " is below the bound (1/2 + 1/10) * 30 = " << bound.str();
        c.expect(Rational(min_with, 1) >= bound, msg.str());
    }
    const auto [plain, pparts] = make_host(3, 2, Rational(1, 5), 30);
    const long long min_plain = min_codegree_report(plain).min_codegree;
    {
        std::ostringstream msg;
        msg << "host without core (k=3, r=2, eta=1/5, n=30): min codegree "
               "expected 18, got "
            << min_plain;
        c.expect(min_plain == 18, msg.str());
    }
    return FixtureResult{3, "host-min-codegree-bound", c.pass, c.failures};
}

inline FixtureResult fixture_reduction_isomorphism() {
    Checker c;
    {
        const auto [host, parts] = make_host(3, 2, Rational(1, 5), 30, 3);
        const ReducedParams red = reduce_host_params(2, Rational(1, 5), 30);
        c.expect(red.n_prime == 18 && red.eta_prime == Rational(1, 3),
                 "reduced parameters for (r=2, eta=1/5, n=30) must be "
                 "(n'=18, eta'=1/3), got (n'=" +
                     std::to_string(red.n_prime) + ", eta'=" +
                     red.eta_prime.str() + ")");
        const auto [reduced, rparts] =
            make_host(3, 1, red.eta_prime, red.n_prime, 3);
        c.expect(remove_vertices(host, vertex_range(0, 12)) == reduced,
                 "host minus its first layer must equal the reduced host "
                 "edge-for-edge (r=2 case)");
    }
    {
        const auto [host, parts] = make_host(3, 3, Rational(1, 10), 30, 3);
        const ReducedParams red = reduce_host_params(3, Rational(1, 10), 30);
        c.expect(red.n_prime == 21 && red.eta_prime == Rational(1, 7),
                 "reduced parameters for (r=3, eta=1/10, n=30) must be "
                 "(n'=21, eta'=1/7), got (n'=" +
                     std::to_string(red.n_prime) + ", eta'=" +
                     red.eta_prime.str() + ")");
        const auto [reduced, rparts] =
            make_host(3, 2, red.eta_prime, red.n_prime, 3);
        c.expect(remove_vertices(host, vertex_range(0, 9)) == reduced,
                 "host minus its first layer must equal the reduced host "
                 "edge-for-edge (r=3 case)");
    }
    return FixtureResult{4, "host-reduction-isomorphism", c.pass, c.failures};
}

inline FixtureResult fixture_common_neighborhood() {
    Checker c;
    const auto [host, parts] = make_host(3, 3, Rational(1, 10), 30, 3);
    const std::vector<Vertex> v3 = vertex_range(18, 30);
    bool identity = true;
    for_each_combination(9, 2, [&, &host = host](const CoSet& s1) {
        CoSet shifted1{s1[0], s1[1]};
        for_each_combination(9, 2, [&, &host = host](const CoSet& s2) {
            const CoSet shifted2{s2[0] + 9, s2[1] + 9};
            if (common_neighborhood(host, {shifted1, shifted2}) != v3)
                identity = false;
        });
    });
    c.expect(identity,
             "common neighborhood of co-sets inside the first two layers "
             "must be exactly the last layer");
    c.expect(induced_subgraph(host, v3) == make_fp(3, 3, 12).first,
             "host restricted to the last layer must equal the modular "
             "construction on 12 vertices");
    return FixtureResult{5, "host-common-neighborhood-identity", c.pass,
                         c.failures};
}

inline FixtureResult fixture_recursive_pattern() {
    Checker c;
    const auto [g, layout] = make_g(3, 3, 2);
    c.expect(g.vertex_count() == 48,
             "level-2 pattern must have 48 vertices, got " +
                 std::to_string(g.vertex_count()));
    c.expect(g.edge_count() == 120,
             "level-2 pattern must have 120 edges, got " +
                 std::to_string(g.edge_count()));
    // Closed form: (k-1)|V| + C(|V|, r-1) ell (k-1) vertices,
    // (k-1)^k |E| + C(|V|, r-1) ell (k-1) (1 + (r-1)) edges.
    const Hypergraph base = make_zycle(3, 3);
    const long long nv = base.vertex_count();
    const long long blocks = nv; // C(6, 1)
    c.expect(g.vertex_count() == 2 * nv + blocks * 6 &&
                 g.edge_count() == 8 * base.edge_count() + blocks * 6 * 2,
             "closed-form vertex/edge counts disagree with the construction");
    bool blocks_ok = layout.block_subsets.size() == 6;
    for (std::size_t b = 0; b < layout.block_subsets.size(); ++b) {
        const int start = layout.block_start(static_cast<int>(b));
        if (induced_subgraph(g, vertex_range(start, start + layout.block_size)) !=
            base)
            blocks_ok = false;
    }
    c.expect(blocks_ok, "every fresh block must induce the zycle");
    return FixtureResult{6, "recursive-pattern-counts", c.pass, c.failures};
}

inline FixtureResult fixture_blowup_zycle_growth() {
    Checker c;
    const Hypergraph host = blow_up(make_zycle(3, 3), 2);
    const SearchOutcome out = find_embedding(make_zycle(3, 6), host);
    c.expect(out.status == SearchStatus::Found,
             "the length-6 zycle must embed into the 2-blow-up of the "
             "length-3 zycle");
    if (out.witness)
        c.expect(validate_vertex_map(make_zycle(3, 6), host, *out.witness),
                 "embedding witness failed validation");
    return FixtureResult{7, "blowup-zycle-growth", c.pass, c.failures};
}

inline FixtureResult fixture_homomorphism_surrogate() {
    Checker c;
    const SearchOutcome hom =
        find_homomorphism(make_zycle(3, 6), make_zycle(3, 3));
    c.expect(hom.status == SearchStatus::Found,
             "index reduction homomorphism from the length-6 zycle onto the "
             "length-3 zycle must exist");
    if (hom.witness)
        c.expect(validate_vertex_map(make_zycle(3, 6), make_zycle(3, 3),
                                     *hom.witness),
                 "homomorphism witness failed validation");
    const Hypergraph big = blow_up(make_zycle(3, 3), 12);
    const SearchOutcome emb = find_embedding(make_zycle(3, 6), big);
    c.expect(emb.status == SearchStatus::Found,
             "consequently the length-6 zycle must embed into the 12-blow-up");
    if (emb.witness)
        c.expect(validate_vertex_map(make_zycle(3, 6), big, *emb.witness),
                 "blow-up embedding witness failed validation");
    return FixtureResult{8, "homomorphism-blowup-surrogate", c.pass,
                         c.failures};
}

inline FixtureResult fixture_exact_extremal_numbers() {
    Checker c;
    const Hypergraph triangle = Hypergraph::complete(2, 3);
    const Hypergraph k4_3 = Hypergraph::complete(3, 4);

    const std::vector<std::pair<int, long long>> triangle_values = {
        {4, 2}, {5, 2}, {6, 3}};
    for (const auto& [n, expected] : triangle_values) {
        const ExCoResult r =
            ex_co_exact(ExCoQuery{n, 2, triangle, SearchBudget{}});
        std::ostringstream msg;
        msg << "max min-degree of a triangle-free graph on " << n
            << " vertices: expected " << expected << ", got " << r.value;
        c.expect(r.exact && r.value == expected, msg.str());
        c.expect(min_codegree_report(r.witness).min_codegree == r.value,
                 "extremal witness min degree must equal the value");
        c.expect(!brute_embeds(triangle, r.witness),
                 "extremal witness must be triangle-free");
    }
    const std::vector<Rational> ratios = {Rational(1, 2), Rational(2, 5),
                                          Rational(1, 2)};
    const auto profile = density_profile(triangle, {4, 5, 6});
    for (std::size_t i = 0; i < ratios.size(); ++i)
        c.expect(profile[i].ratio == ratios[i],
                 "density ratio at n=" + std::to_string(profile[i].n) +
                     " must be " + ratios[i].str() + ", got " +
                     profile[i].ratio.str());

    for (int n = 3; n <= 5; ++n) {
        const long long bnb =
            ex_co_exact(ExCoQuery{n, 2, triangle, SearchBudget{}}).value;
        const long long plain = plain_ex_co(n, triangle);
        c.expect(bnb == plain,
                 "branch-and-bound and plain enumeration disagree on the "
                 "triangle at n=" +
                     std::to_string(n));
    }
    for (int n = 4; n <= 5; ++n) {
        const long long bnb =
            ex_co_exact(ExCoQuery{n, 3, k4_3, SearchBudget{}}).value;
        const long long plain = plain_ex_co(n, k4_3);
        c.expect(bnb == plain,
                 "branch-and-bound and plain enumeration disagree on the "
                 "complete 3-graph on 4 vertices at n=" +
                     std::to_string(n));
    }
    return FixtureResult{9, "exact-extremal-numbers", c.pass, c.failures};
}

inline FixtureResult fixture_search_soundness() {
    Checker c;
    std::mt19937 rng(987654321);
    std::bernoulli_distribution host_coin(0.35);
    std::bernoulli_distribution pattern_coin(0.5);
    int disagreements = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const int fn = 3 + static_cast<int>(rng() % 3);
        const int hn = 5 + static_cast<int>(rng() % 5);
        std::vector<Edge> fe, he;
        for_each_combination(fn, 3, [&](const std::vector<Vertex>& e) {
            if (pattern_coin(rng))
                fe.push_back(e);
        });
        for_each_combination(hn, 3, [&](const std::vector<Vertex>& e) {
            if (host_coin(rng))
                he.push_back(e);
        });
        const Hypergraph f(3, fn, std::move(fe));
        const Hypergraph h(3, hn, std::move(he));

        const SearchOutcome out = find_embedding(f, h);
        if ((out.status == SearchStatus::Found) != brute_embeds(f, h))
            ++disagreements;
        if (out.witness &&
            !validate_vertex_map(f, h, *out.witness))
            c.expect(false, "witness failed validation on a random instance");

        // Codegree sum identity on the generated host.
        long long weighted = 0;
        for (const auto& [value, count] : min_codegree_report(h).histogram)
            weighted += value * count;
        c.expect(weighted == 3 * h.edge_count(),
                 "codegree sum identity failed on a random instance");
    }
    c.expect(disagreements == 0,
             "search disagreed with brute-force enumeration on " +
                 std::to_string(disagreements) + " of 60 instances");
    return FixtureResult{10, "search-soundness-completeness", c.pass,
                         c.failures};
}

} // namespace detail

/// Runs the whole verification suite; deterministic.
inline std::vector<FixtureResult> run_paper_fixtures() {
    return {
        detail::fixture_modular_min_codegree(),
        detail::fixture_containment_boundary(),
        detail::fixture_host_codegree_bound(),
        detail::fixture_reduction_isomorphism(),
        detail::fixture_common_neighborhood(),
        detail::fixture_recursive_pattern(),
        detail::fixture_blowup_zycle_growth(),
        detail::fixture_homomorphism_surrogate(),
        detail::fixture_exact_extremal_numbers(),
        detail::fixture_search_soundness(),
    };
}

inline bool all_passed(const std::vector<FixtureResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const FixtureResult& r) { return r.pass; });
}

inline void print_results(const std::vector<FixtureResult>& results,
                          std::ostream& os) {
    int passed = 0;
    for (const FixtureResult& r : results) {
        os << "[" << std::setw(2) << r.id << "] "
           << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
        if (!r.pass)
            os << "\n      " << r.detail;
        os << "\n";
        if (r.pass)
            ++passed;
    }
    os << passed << "/" << results.size() << " fixtures passed\n";
}

} // namespace cotk::fixtures
