// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero if any blocking
// criterion fails; the last criterion is reported but never affects the status.

#include <gpcert/bounds.hh>
#include <gpcert/construct.hh>
#include <gpcert/exact.hh>
#include <gpcert/transform.hh>
#include <gpcert/verify.hh>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <thread>

using namespace gpcert;
using std::size_t;
using std::string;

namespace
{
    struct Outcome
    {
        bool pass = false;
        string detail;
    };

    struct Criterion
    {
        int id;
        string title;
        double limit_seconds;
        bool blocking;
        std::function<Outcome()> run;
    };

    auto edges_of(std::initializer_list<std::pair<Vertex, Vertex>> list) -> std::vector<Edge>
    {
        std::vector<Edge> out;
        for (auto [a, b] : list)
            out.push_back(make_edge(a, b));
        std::sort(out.begin(), out.end());
        return out;
    }

    auto base_certificate() -> Outcome
    {
        auto cert = base_k4k6();
        auto report = verify_product_partition(cert);
        std::ostringstream s;
        s << cert.blocks.size() << " blocks, " << report.host_size << " pairs, exact=" << report.is_exact_partition;
        return {cert.blocks.size() == 14 && report.host_size == 90 && report.is_exact_partition, s.str()};
    }

    auto odd_cover() -> Outcome
    {
        auto cover = odd_cover_k8();
        auto report = cover_multiplicities(Graph::complete(8), cover);
        bool mults_ok = true;
        for (auto & [e, c] : report.counts)
            mults_ok = mults_ok && (c == 1 || c == 3);

        auto restricted = relabel_bicliques(restrict_bicliques(cover, {1, 2, 3, 4, 5, 7}), {{7, 6}});
        // The restricted family is the union of partitions of g0 u g1, g0 u g2, g0 u g3.
        const std::array<std::vector<Edge>, 3> expected{
            edges_of({{1, 2}, {3, 4}, {1, 4}, {2, 3}, {2, 5}, {4, 5}}),
            edges_of({{1, 2}, {3, 4}, {1, 3}, {2, 4}, {2, 6}, {3, 6}}),
            edges_of({{1, 2}, {3, 4}, {1, 5}, {1, 6}, {3, 5}, {4, 6}, {5, 6}})};
        // The restriction must be exactly the witness families of g0 u g1, g0 u g2, g0 u g3,
        // and those graphs must be the expected ones.
        auto scheme = odd_cover_k6_scheme();
        std::vector<Biclique> witnesses;
        bool graphs_ok = true;
        for (size_t i = 1; i <= 3; ++i) {
            auto & w = scheme.union_witness[i - 1];
            witnesses.insert(witnesses.end(), w.begin(), w.end());
            graphs_ok = graphs_ok && scheme.union_graph(i).edges() == expected[i - 1]
                && is_biclique_partition(scheme.union_graph(i), w);
        }
        std::sort(witnesses.begin(), witnesses.end());
        std::sort(restricted.begin(), restricted.end());
        graphs_ok = graphs_ok && witnesses == restricted;

        std::ostringstream s;
        s << "odd=" << report.is_odd_cover << ", multiplicities in {1,3}=" << mults_ok
          << ", restriction matches g0 u gi=" << graphs_ok;
        return {report.is_odd_cover && mults_ok && graphs_ok, s.str()};
    }

    auto blowup() -> Outcome
    {
        auto cert = blowup_product(base_k4k6(), 2, 2);
        auto report = verify_product_partition(cert);
        std::ostringstream s;
        s << cert.blocks.size() << " blocks on (K_" << cert.left.vertex_count() << ", K_"
          << cert.right.vertex_count() << "), exact=" << report.is_exact_partition;
        return {cert.blocks.size() == 56 && cert.left == Graph::complete(7) && cert.right == Graph::complete(11)
                && report.is_exact_partition,
            s.str()};
    }

    auto recursive_f4() -> Outcome
    {
        auto count = count_f4_recursive(32);
        auto cert = f4_recursive(32);
        auto report = verify_partition(cert);
        std::ostringstream s;
        s << "count=" << count << " vs trivial " << trivial_upper(32, 4) << ", certificate " << cert.blocks.size()
          << " blocks over " << report.host_size << " edges, exact=" << report.is_exact_partition;
        return {count == 420 && trivial_upper(32, 4) == 435 && cert.blocks.size() == 420 && report.host_size == 35960
                && report.is_exact_partition,
            s.str()};
    }

    auto solver_oracles() -> Outcome
    {
        std::ostringstream s;
        bool ok = true;
        double slowest = 0;
        auto timed = [&](auto && f) {
            auto start = std::chrono::steady_clock::now();
            auto v = f();
            slowest = std::max(slowest, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
            return v;
        };
        for (size_t n = 2; n <= 7; ++n) {
            auto r = timed([&] { return min_biclique_partition(Graph::complete(n)); });
            bool good = r.optimum == n - 1 && is_biclique_partition(Graph::complete(n), r.certificate);
            ok = ok && good;
            if (! good)
                s << "f2(K" << n << ") wrong; ";
        }
        for (size_t n = 4; n <= 6; ++n) {
            auto host = HypergraphHost::complete(n, 3);
            auto r = timed([&] { return min_multipartite_partition(host); });
            bool good = r.optimum == n - 2
                && verify_partition(HypergraphCertificate{host, r.certificate, {}}).is_exact_partition;
            ok = ok && good;
            if (! good)
                s << "f3(" << n << ") wrong; ";
        }
        auto g33 = timed([&] { return min_product_block_partition(Graph::complete(3), Graph::complete(3)); });
        bool g_ok = g33.optimum == 4
            && verify_product_partition(ProductCertificate{Graph::complete(3), Graph::complete(3), g33.certificate, {}})
                   .is_exact_partition;
        auto weak = weak_product(Graph::complete(3), Graph::complete(3));
        auto w = timed([&] { return min_biclique_partition(weak); });
        bool w_ok = w.optimum == 5 && is_biclique_partition(weak, w.certificate);
        ok = ok && g_ok && w_ok;
        s << "f2(K2..K7), f3(4..6), g(K3,K3)=" << (g33.optimum ? std::to_string(*g33.optimum) : "?")
          << ", f2(K3*K3)=" << (w.optimum ? std::to_string(*w.optimum) : "?") << ", slowest run "
          << slowest << " s";
        return {ok && slowest < 120, s.str()};
    }

    auto bounds_consistency() -> Outcome
    {
        bool ok = true;
        std::ostringstream s;
        auto check_value = [&](const Quantity & q, size_t value) {
            auto table = bound_table(q);
            bool good = table.consistent() && table.contains(Integer(value));
            // Every individual row must also be on the right side of the value.
            for (auto & row : table.rows)
                good = good
                    && (row.direction == Direction::lower ? row.bound.value <= value : value <= row.bound.value);
            if (! good)
                s << table.quantity << " does not bracket " << value << "; ";
            ok = ok && good;
        };
        for (size_t n = 2; n <= 7; ++n)
            check_value(Quantity::f(n, 2), n - 1);
        for (size_t n = 4; n <= 6; ++n)
            check_value(Quantity::f(n, 3), n - 2);
        check_value(Quantity::g(3, 3), 4);

        auto [lo, hi] = g_k4_bounds(6);
        auto certified = base_k4k6().blocks.size();
        bool k4_ok = lo.value == 12 && hi.value == 15 && lo.value <= certified && certified <= hi.value;
        auto wp = g_weakproduct_lower(6);
        bool wp_ok = wp.value == 13;
        s << "g_k4_bounds(6)=(" << lo.value << ", " << hi.value << ") around " << certified
          << ", g_weakproduct_lower(6)=" << wp.value;
        return {ok && k4_ok && wp_ok, s.str()};
    }

    auto weighted_decomposition() -> Outcome
    {
        auto scheme = odd_cover_k6_scheme();
        auto host = Graph::complete(6);
        std::ostringstream s;
        bool ok = true;
        int passed = 0, total = 0;
        auto run = [&](const WeightedGraphList & list, const string & name) {
            ++total;
            bool good = verify_weighted_decomposition(host, list);
            passed += good;
            ok = ok && good;
            if (! good)
                s << name << " failed; ";
        };
        for (size_t k = 1; k <= 3; ++k) {
            size_t i = k % 3 + 1, j = (k + 1) % 3 + 1;
            run({{scheme.union_graph(i), 1}, {scheme.union_graph(j), 1}, {scheme.union_graph(k), -1},
                    {scheme.parts[k], 2}},
                "k=" + std::to_string(k));
        }
        run({{scheme.parts[0], 1}, {scheme.parts[1], 1}, {scheme.parts[2], 1}, {scheme.parts[3], 1}}, "plain");
        s << passed << "/" << total << " combinations are weighted decompositions of K_6";
        return {ok && total == 4, s.str()};
    }

    auto property_suite() -> Outcome
    {
        std::mt19937_64 rng(20240607);
        size_t accepted = 0, formula_ok = 0, inequality_ok = 0;
        const size_t instances = 1000;
        for (size_t t = 0; t < instances; ++t) {
            size_t n = 2 + rng() % 7;
            std::array<std::vector<Edge>, 4> parts;
            auto complete = Graph::complete(n);
            for (auto & e : complete.edges())
                parts[rng() % 4].push_back(e);
            std::array<Graph, 4> graphs;
            for (size_t p = 0; p < 4; ++p)
                graphs[p] = Graph::from_edges(parts[p]);
            auto scheme = scheme_with_optimal_witnesses(n, graphs);

            auto k3 = k3_scheme(scheme);
            auto k4 = k4_scheme(scheme);
            accepted += verify_product_partition(k3).is_exact_partition && verify_product_partition(k4).is_exact_partition;

            size_t f_part = 0, f_union = 0;
            for (size_t i = 0; i < 3; ++i) {
                f_part += scheme.part_witness[i].size();
                f_union += scheme.union_witness[i].size();
            }
            formula_ok += k3.blocks.size() == f_part + f_union && k4.blocks.size() == f_part + 2 * f_union;

            // Weighted Graham-Pollak: each signed combination needs at least n-1 bicliques.
            bool ineq = true;
            for (size_t k = 1; k <= 3; ++k)
                ineq = ineq
                    && f_union + scheme.part_witness[k - 1].size() >= n - 1;
            inequality_ok += ineq;
        }
        std::ostringstream s;
        s << accepted << "/" << instances << " verified, " << formula_ok << " match the count formulas, "
          << inequality_ok << " satisfy the weighted bound";
        return {accepted == instances && formula_ok == instances && inequality_ok == instances, s.str()};
    }

    constexpr double stretch_budget_seconds = 120;

    auto stretch_f4_7() -> Outcome
    {
        auto host = HypergraphHost::complete(7, 4);
        SolveOptions<MultipartiteBlock> options;
        options.budget.max_seconds = std::chrono::duration<double>(stretch_budget_seconds);
        options.threads = std::max(1u, std::thread::hardware_concurrency());
        options.incumbent = trivial_decomposition(7, 4).blocks;
        auto r = min_multipartite_partition(host, options);
        bool witness_ok = verify_partition(HypergraphCertificate{host, r.certificate, {}}).is_exact_partition
            && r.certificate.size() == r.best_count;
        std::ostringstream s;
        if (r.resolved())
            s << "resolved to " << *r.optimum;
        else
            s << "unresolved (best <= " << r.best_count << ")";
        s << " after " << r.nodes_explored << " nodes, budget " << stretch_budget_seconds << " s";
        bool pass = r.resolved() ? *r.optimum == 9 && witness_ok : false;
        if (! r.resolved() && (r.best_count > 10 || ! witness_ok))
            s << "; invalid unresolved report";
        return {pass, s.str()};
    }
}

auto main() -> int
{
    std::vector<Criterion> criteria{
        {1, "base certificate", 1, true, base_certificate},
        {2, "odd cover", 1, true, odd_cover},
        {3, "blow-up", 5, true, blowup},
        {4, "recursive f4 beats trivial", 60, true, recursive_f4},
        {5, "exact solver oracles", 600, true, solver_oracles},
        {6, "bounds consistency", 60, true, bounds_consistency},
        {7, "weighted decomposition", 60, true, weighted_decomposition},
        {8, "property suite", 600, true, property_suite},
        {9, "stretch: f4(7)", 180, false, stretch_f4_7}};

    bool blocking_failed = false;
    for (auto & c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        }
        catch (const std::exception & e) {
            outcome = {false, string{"exception: "} + e.what()};
        }
        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool pass = outcome.pass && elapsed < c.limit_seconds;
        if (outcome.pass && ! pass)
            outcome.detail += "; over the time limit";
        std::printf("criterion %d %s: %s (%.3f s, limit %.0f s%s) %s\n", c.id, c.title.c_str(), pass ? "PASS" : "FAIL",
            elapsed, c.limit_seconds, c.blocking ? "" : ", non-blocking", outcome.detail.c_str());
        std::fflush(stdout);
        if (c.blocking && ! pass)
            blocking_failed = true;
    }
    return blocking_failed ? 1 : 0;
}
