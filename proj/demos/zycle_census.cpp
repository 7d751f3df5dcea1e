// Small tour of the library: builds each family, prints codegree reports,
// and probes zycle containment in the modular construction for a few primes.

#include <iostream>

#include "cotk/cotk.hpp"

int main() {
    using namespace cotk;

    for (int ell = 3; ell <= 6; ++ell) {
        const Hypergraph z = make_zycle(3, ell);
        const CodegreeReport r = min_codegree_report(z);
        std::cout << "zycle(3," << ell << "): " << z.vertex_count()
                  << " vertices, " << z.edge_count()
                  << " edges, min codegree " << r.min_codegree << "\n";
    }

    for (const long long p : {2LL, 3LL, 5LL, 7LL}) {
        const auto [fp, labels] = make_fp(3, p, 6 * p);
        const CodegreeReport r = min_codegree_report(fp);
        std::cout << "modular(p=" << p << ", n=" << 6 * p
                  << "): min codegree " << r.min_codegree << " (n/p = " << 6
                  << "), zycle(3,3) "
                  << (zycle_in_fp_by_labels(3, 3, p) ? "contained"
                                                     : "not contained")
                  << "\n";
    }

    const auto [host, parts] = make_host(3, 2, Rational(1, 5), 30, 3);
    std::cout << "host(3, r=2, eta=1/5, n=30, p=3): min codegree "
              << min_codegree_report(host).min_codegree << "\n";

    const Hypergraph triangle = Hypergraph::complete(2, 3);
    for (const auto& point : density_profile(triangle, {4, 5, 6}))
        std::cout << "ex_co(" << point.n << ", triangle) = " << point.value
                  << "  ratio " << point.ratio.str() << "\n";
    return 0;
}
