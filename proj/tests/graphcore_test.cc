#include <gpcert/construct.hh>
#include <gpcert/verify.hh>

#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

using namespace gpcert;
using std::size_t;
using std::vector;

namespace
{
    // Independent oracle: an r-set lies in a block iff it meets every class exactly once.
    auto brute_counts(const HypergraphCertificate & cert) -> std::map<Hyperedge, unsigned>
    {
        std::map<Hyperedge, unsigned> counts;
        for (auto & e : cert.host.edges()) {
            unsigned c = 0;
            for (auto & b : cert.blocks) {
                bool transversal = true;
                for (auto & cls : b.classes)
                    transversal = transversal && intersect(cls, e).size() == 1;
                c += transversal;
            }
            counts[e] = c;
        }
        return counts;
    }

    auto random_partition(std::mt19937_64 & rng, size_t n) -> std::array<Graph, 4>
    {
        std::array<vector<Edge>, 4> parts;
        auto complete = Graph::complete(n);
        for (auto & e : complete.edges())
            parts[rng() % 4].push_back(e);
        std::array<Graph, 4> graphs;
        for (size_t p = 0; p < 4; ++p)
            graphs[p] = Graph{complete.vertices(), parts[p]};
        return graphs;
    }
}

TEST_CASE("complete graphs")
{
    CHECK(Graph::complete(1).edge_count() == 0);
    CHECK(Graph::complete(4).edge_count() == 6);
    CHECK(Graph::complete(6).edge_count() == 15);
    CHECK(Graph::complete(6).is_complete());
    CHECK_FALSE(Graph::from_edges({{1, 2}, {2, 3}}).is_complete());
}

TEST_CASE("graphs reject loops, duplicates and foreign endpoints")
{
    CHECK_THROWS_AS(Graph({1, 2}, {{1, 1}}), StructuralError);
    CHECK_THROWS_AS(Graph({1, 2}, {{1, 2}, {2, 1}}), StructuralError);
    CHECK_THROWS_AS(Graph({1, 2}, {{1, 3}}), StructuralError);
}

TEST_CASE("biclique canonical form")
{
    auto b = Biclique::make({5, 2}, {1, 4});
    CHECK(b.x == VertexSet{1, 4});
    CHECK(b.y == VertexSet{2, 5});
    CHECK(b.edge_count() == 4);
    CHECK(b.contains(make_edge(4, 5)));
    CHECK_FALSE(b.contains(make_edge(1, 4)));
    CHECK_THROWS_AS((void) Biclique::make({1, 2}, {2, 3}), StructuralError);
}

TEST_CASE("multipartite block edge count matches enumeration")
{
    // Every class-size vector of rank 1..4 with sizes up to 10 (up to 6 at rank 4).
    size_t checked = 0;
    for (size_t rank = 1; rank <= 4; ++rank) {
        size_t largest = rank == 4 ? 6 : 10;
        vector<size_t> sizes(rank, 1);
        while (true) {
            vector<vector<Vertex>> classes;
            Vertex next = 1;
            for (auto s : sizes) {
                vector<Vertex> c;
                for (size_t t = 0; t < s; ++t)
                    c.push_back(next++);
                classes.push_back(c);
            }
            auto block = MultipartiteBlock::make(classes);
            vector<Hyperedge> seen;
            block.for_each_edge([&](const Hyperedge & e) { seen.push_back(e); });
            std::sort(seen.begin(), seen.end());
            seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
            auto product = std::accumulate(sizes.begin(), sizes.end(), std::uint64_t{1}, std::multiplies<>{});
            REQUIRE(seen.size() == product);
            REQUIRE(block.edge_count() == product);
            ++checked;

            size_t c = 0;
            while (c < rank && ++sizes[c] > largest)
                sizes[c++] = 1;
            if (c == rank)
                break;
        }
    }
    CHECK(checked == 10 + 100 + 1000 + 1296);
}

TEST_CASE("complete host indexing round-trips")
{
    for (size_t n = 1; n <= 9; ++n)
        for (size_t r = 1; r <= n; ++r) {
            auto host = HypergraphHost::complete(n, r);
            auto edges = host.edges();
            REQUIRE(edges.size() == host.size());
            for (std::uint64_t i = 0; i < edges.size(); ++i) {
                REQUIRE(host.index_of(edges[i]) == i);
                REQUIRE(host.edge_at(i) == edges[i]);
            }
        }
    auto host = HypergraphHost::complete(6, 3);
    CHECK_FALSE(host.index_of({1, 2, 7}));
    CHECK_FALSE(host.index_of({1, 2}));
}

TEST_CASE("explicit hosts are validated")
{
    CHECK_THROWS_AS((void) HypergraphHost::explicit_edges(3, {1, 2, 3}, {{1, 2}}), StructuralError);
    CHECK_THROWS_AS((void) HypergraphHost::explicit_edges(2, {1, 2, 3}, {{1, 2}, {1, 2}}), StructuralError);
    CHECK_THROWS_AS((void) HypergraphHost::explicit_edges(2, {1, 2}, {{1, 3}}), StructuralError);
    auto host = HypergraphHost::explicit_edges(2, {1, 2, 3}, {{2, 3}, {1, 2}});
    CHECK(host.size() == 2);
    CHECK(host.index_of({1, 2}) == 0);
}

TEST_CASE("verify_partition examples")
{
    auto trivial = trivial_decomposition(6, 4);
    CHECK(trivial.blocks.size() == 6);
    CHECK(verify_partition(trivial).is_exact_partition);

    auto one = MultipartiteBlock::make({{1}, {2}, {3}, {4}});
    HypergraphCertificate single{HypergraphHost::complete(4, 4), {one}, {}};
    CHECK(verify_partition(single).is_exact_partition);

    HypergraphCertificate twice{HypergraphHost::complete(4, 4), {one, one}, {}};
    auto report = verify_partition(twice);
    CHECK_FALSE(report.is_exact_partition);
    CHECK(report.multiplicity({1, 2, 3, 4}) == 2);
    CHECK(report.is_uniform_cover);
    CHECK(report.uniform_value == 2u);
}

TEST_CASE("verify_partition names the offending block")
{
    HypergraphCertificate cert{HypergraphHost::complete(5, 3), trivial_decomposition(5, 3).blocks, {}};
    cert.blocks.push_back(MultipartiteBlock{{{1}, {2}}});
    try {
        (void) verify_partition(cert);
        FAIL("expected a structural error");
    }
    catch (const StructuralError & e) {
        CHECK(e.block_index() == 3u);
    }

    cert.blocks.back() = MultipartiteBlock{{{1}, {2}, {9}}};
    CHECK_THROWS_AS((void) verify_partition(cert), StructuralError);
    cert.blocks.back() = MultipartiteBlock{{{1}, {1, 2}, {3}}};
    CHECK_THROWS_AS((void) verify_partition(cert), StructuralError);
}

TEST_CASE("verify_partition agrees with a brute-force counter on random block families")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        size_t n = 3 + rng() % 5, r = 2 + rng() % (n - 2);
        HypergraphCertificate cert{HypergraphHost::complete(n, r), {}, {}};
        size_t blocks = rng() % 6;
        for (size_t b = 0; b < blocks; ++b) {
            vector<Vertex> labels(n);
            std::iota(labels.begin(), labels.end(), 1);
            std::shuffle(labels.begin(), labels.end(), rng);
            vector<vector<Vertex>> classes(r);
            for (size_t c = 0; c < r; ++c)
                classes[c].push_back(labels[c]);
            for (size_t v = r; v < n; ++v)
                if (rng() % 2)
                    classes[rng() % r].push_back(labels[v]);
            cert.blocks.push_back(MultipartiteBlock::make(classes));
        }
        auto oracle = brute_counts(cert);
        auto report = verify_partition(cert);
        bool exact = true;
        for (auto & [e, c] : oracle) {
            REQUIRE(report.multiplicity(e) == c);
            exact = exact && c == 1;
        }
        REQUIRE(report.is_exact_partition == exact);
    }
}

TEST_CASE("streaming verification reports the same multiplicities as dense verification")
{
    VerifyOptions streaming{0};
    SUBCASE("hypergraph")
    {
        auto cert = trivial_decomposition(9, 4);
        auto dense = verify_partition(cert);
        auto sparse = verify_partition(cert, streaming);
        CHECK(dense.dense);
        CHECK_FALSE(sparse.dense);
        CHECK(sparse.is_exact_partition);
        CHECK(sparse.counts.empty());
        CHECK(sparse.incidences() == dense.incidences());

        cert.blocks.push_back(cert.blocks.front());
        cert.blocks.erase(cert.blocks.begin() + 3);
        dense = verify_partition(cert);
        sparse = verify_partition(cert, streaming);
        CHECK_FALSE(sparse.is_exact_partition);
        CHECK(sparse.anomalies() == dense.anomalies());
        for (auto & e : cert.host.edges())
            REQUIRE(sparse.multiplicity(e) == dense.multiplicity(e));
    }
    SUBCASE("product")
    {
        auto cert = blowup_product(base_k4k6(), 1, 2);
        cert.blocks.pop_back();
        auto dense = verify_product_partition(cert);
        auto sparse = verify_product_partition(cert, streaming);
        CHECK(sparse.anomalies() == dense.anomalies());
        CHECK(sparse.incidences() == dense.incidences());
        CHECK(sparse.is_exact_partition == dense.is_exact_partition);
    }
}

TEST_CASE("exact partitions: block sizes sum to the host size")
{
    vector<HypergraphCertificate> certs{trivial_decomposition(10, 4), trivial_decomposition(9, 5), f4_recursive(20)};
    for (auto & cert : certs) {
        REQUIRE(verify_partition(cert).is_exact_partition);
        std::uint64_t total = 0;
        for (auto & b : cert.blocks)
            total += b.edge_count();
        CHECK(total == cert.host.size());
    }
    auto product = blowup_product(base_k4k6(), 2, 1);
    std::uint64_t pairs = 0;
    for (auto & b : product.blocks)
        pairs += b.pair_count();
    CHECK(pairs == product.left.edge_count() * product.right.edge_count());
}

TEST_CASE("verify_product_partition examples")
{
    auto base = base_k4k6();
    auto report = verify_product_partition(base);
    CHECK(report.is_exact_partition);
    CHECK(report.host_size == 90);

    ProductCertificate tiny{Graph::complete(2), Graph::complete(2),
        {{Biclique::make({1}, {2}), Biclique::make({1}, {2})}}, {}};
    CHECK(verify_product_partition(tiny).is_exact_partition);

    auto dropped = base.blocks[5].pair_count();
    base.blocks.erase(base.blocks.begin() + 5);
    report = verify_product_partition(base);
    CHECK_FALSE(report.is_exact_partition);
    CHECK(report.anomalies().size() == dropped);
    for (auto & [pair, c] : report.anomalies())
        CHECK(c == 0);
}

TEST_CASE("cover multiplicities of the K_8 odd cover")
{
    auto cover = odd_cover_k8();
    auto report = cover_multiplicities(Graph::complete(8), cover);
    CHECK(report.is_odd_cover);
    CHECK_FALSE(report.is_exact_partition);
    CHECK(report.multiplicity(make_edge(1, 2)) == 3);
    CHECK(report.incidences() == 36);
    for (auto & [e, c] : report.counts)
        CHECK((c == 1 || c == 3));

    auto single = cover_multiplicities(Graph::complete(2), vector{Biclique::make({1}, {2})});
    CHECK(single.is_uniform_cover);
    CHECK(single.uniform_value == 1u);

    CHECK_THROWS_AS(
        (void) cover_multiplicities(Graph::from_edges({{1, 2}}), vector{Biclique::make({1}, {2, 3})}), StructuralError);
}

TEST_CASE("weighted decompositions use exact rationals")
{
    auto k5 = Graph::complete(5);
    CHECK(verify_weighted_decomposition(k5, {{k5, 1}}));
    CHECK_FALSE(verify_weighted_decomposition(k5, {{k5, 2}}));
    CHECK(verify_weighted_decomposition(k5, {{k5, Rational(1, 3)}, {k5, Rational(2, 3)}}));
    CHECK_FALSE(verify_weighted_decomposition(k5, {{k5, Rational(1, 3)}, {k5, Rational(1, 3)}, {k5, Rational(1, 3) + Rational(1, 1000000)}}));

    auto scheme = odd_cover_k6_scheme();
    CHECK(verify_weighted_decomposition(Graph::complete(6),
        {{scheme.union_graph(1), 1}, {scheme.union_graph(2), 1}, {scheme.union_graph(3), -1}, {scheme.parts[3], 2}}));
}

TEST_CASE("every signed combination of a random partition is a weighted decomposition")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        size_t n = 2 + rng() % 8;
        auto parts = random_partition(rng, n);
        auto host = Graph::complete(n);
        auto with_g0 = [&](size_t i) { return graph_union(parts[0], parts[i]); };
        for (size_t k = 1; k <= 3; ++k) {
            size_t i = k % 3 + 1, j = (k + 1) % 3 + 1;
            REQUIRE(verify_weighted_decomposition(
                host, {{with_g0(i), 1}, {with_g0(j), 1}, {with_g0(k), -1}, {parts[k], 2}}));
            // Dropping the correction term breaks it whenever g_k has an edge.
            REQUIRE(verify_weighted_decomposition(host, {{with_g0(i), 1}, {with_g0(j), 1}, {with_g0(k), -1}})
                == (parts[k].edge_count() == 0));
        }
    }
}
