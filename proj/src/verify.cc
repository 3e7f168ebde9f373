#include <gpcert/verify.hh>

#include <algorithm>
#include <limits>

using std::optional;
using std::size_t;
using std::string;
using std::uint32_t;
using std::uint64_t;
using std::vector;

namespace gpcert
{
    namespace
    {
        auto check_class(const VertexSet & c, const VertexSet & universe, size_t block, const char * what) -> void
        {
            if (c.empty())
                throw StructuralError(string{"empty "} + what, block);
            if (! std::is_sorted(c.begin(), c.end()) || std::adjacent_find(c.begin(), c.end()) != c.end())
                throw StructuralError(string{what} + " " + to_string(c) + " is not a sorted set", block);
            for (auto v : c)
                if (! contains(universe, v))
                    throw StructuralError("vertex " + std::to_string(v) + " is outside the host", block);
        }

        auto check_biclique(const Biclique & b, const VertexSet & universe, size_t block) -> void
        {
            check_class(b.x, universe, block, "biclique class");
            check_class(b.y, universe, block, "biclique class");
            if (! intersect(b.x, b.y).empty())
                throw StructuralError("biclique classes overlap", block);
        }

        /// Counts hits on host indices 0..host_size-1. `visit(hit, miss)` must call hit(index)
        /// for every block element inside the host and miss(element) otherwise.
        template <typename Element, typename ElementAt, typename Visit>
        auto tally(uint64_t host_size, ElementAt && element_at, Visit && visit, uint64_t dense_limit)
            -> MultiplicityReport<Element>
        {
            MultiplicityReport<Element> report;
            report.host_size = host_size;
            auto miss = [&](const Element & e) { report.outside_host.push_back(e); };

            if (host_size <= dense_limit) {
                vector<uint32_t> counts(host_size, 0);
                visit([&](uint64_t index) { ++counts[index]; }, miss);
                report.counts.reserve(host_size);
                for (uint64_t i = 0; i < host_size; ++i)
                    report.counts.emplace_back(element_at(i), counts[i]);
            }
            else {
                report.dense = false;
                vector<uint64_t> hits;
                visit([&](uint64_t index) { hits.push_back(index); }, miss);
                std::sort(hits.begin(), hits.end());
                auto it = hits.begin();
                for (uint64_t i = 0; i < host_size; ++i) {
                    uint32_t c = 0;
                    while (it != hits.end() && *it == i) {
                        ++c;
                        ++it;
                    }
                    if (c != 1)
                        report.counts.emplace_back(element_at(i), c);
                }
            }
            std::sort(report.outside_host.begin(), report.outside_host.end());
            report.summarize();
            return report;
        }
    }

    auto verify_partition(const HypergraphCertificate & cert, const VerifyOptions & options)
        -> MultiplicityReport<Hyperedge>
    {
        auto & host = cert.host;
        for (size_t b = 0; b < cert.blocks.size(); ++b) {
            auto & block = cert.blocks[b];
            if (block.rank() != host.rank())
                throw StructuralError("rank " + std::to_string(block.rank()) + " block in a rank "
                        + std::to_string(host.rank()) + " host", b);
            vector<Vertex> all;
            for (auto & c : block.classes) {
                check_class(c, host.vertices(), b, "class");
                all.insert(all.end(), c.begin(), c.end());
            }
            auto total = all.size();
            if (make_vertex_set(std::move(all)).size() != total)
                throw StructuralError("classes overlap", b);
        }

        return tally<Hyperedge>(
            host.size(), [&](uint64_t i) { return host.edge_at(i); },
            [&](auto && hit, auto && miss) {
                for (auto & block : cert.blocks)
                    block.for_each_edge([&](const Hyperedge & e) {
                        if (auto index = host.index_of(e))
                            hit(*index);
                        else
                            miss(e);
                    });
            },
            options.dense_limit);
    }

    auto verify_product_partition(const ProductCertificate & cert, const VerifyOptions & options)
        -> MultiplicityReport<EdgePair>
    {
        for (size_t b = 0; b < cert.blocks.size(); ++b) {
            check_biclique(cert.blocks[b].left, cert.left.vertices(), b);
            check_biclique(cert.blocks[b].right, cert.right.vertices(), b);
        }

        uint64_t right_edges = cert.right.edge_count();
        uint64_t host_size = uint64_t{cert.left.edge_count()} * right_edges;

        return tally<EdgePair>(
            host_size,
            [&](uint64_t i) { return EdgePair{cert.left.edges()[i / right_edges], cert.right.edges()[i % right_edges]}; },
            [&](auto && hit, auto && miss) {
                for (auto & block : cert.blocks) {
                    auto right = block.right.edges();
                    vector<optional<size_t>> right_index;
                    right_index.reserve(right.size());
                    for (auto & f : right)
                        right_index.push_back(cert.right.edge_index(f));
                    for (auto & e : block.left.edges()) {
                        auto ei = cert.left.edge_index(e);
                        for (size_t k = 0; k < right.size(); ++k) {
                            if (ei && right_index[k])
                                hit(*ei * right_edges + *right_index[k]);
                            else
                                miss(EdgePair{e, right[k]});
                        }
                    }
                }
            },
            options.dense_limit);
    }

    auto cover_multiplicities(const Graph & host, std::span<const Biclique> bicliques) -> MultiplicityReport<Edge>
    {
        for (size_t b = 0; b < bicliques.size(); ++b) {
            check_biclique(bicliques[b], host.vertices(), b);
            for (auto & e : bicliques[b].edges())
                if (! host.has_edge(e))
                    throw StructuralError("edge " + to_string(e) + " is not a host edge", b);
        }

        return tally<Edge>(
            host.edge_count(), [&](uint64_t i) { return host.edges()[i]; },
            [&](auto && hit, auto &&) {
                for (auto & b : bicliques)
                    for (auto & e : b.edges())
                        hit(*host.edge_index(e));
            },
            std::numeric_limits<uint64_t>::max());
    }

    auto is_biclique_partition(const Graph & g, std::span<const Biclique> bicliques) -> bool
    {
        try {
            return cover_multiplicities(g, bicliques).is_exact_partition;
        }
        catch (const StructuralError &) {
            return false;
        }
    }

    auto verify_weighted_decomposition(const Graph & host, const WeightedGraphList & list) -> bool
    {
        for (auto & e : host.edges()) {
            Rational sum = 0;
            for (auto & entry : list)
                if (entry.graph.has_edge(e))
                    sum += entry.weight;
            if (sum != 1)
                return false;
        }
        return true;
    }

    namespace
    {
        template <typename Element>
        auto describe(const MultiplicityReport<Element> & report, bool odd_claim, Verdict & verdict, size_t limit)
            -> void
        {
            verdict.host_size = report.host_size;
            verdict.ok = odd_claim ? report.is_odd_cover : report.is_exact_partition;
            auto push = [&](string s) {
                if (verdict.violations.size() < limit)
                    verdict.violations.push_back(std::move(s));
            };
            for (auto & e : report.outside_host)
                push("not in host: " + to_string(e));
            for (auto & [e, c] : report.counts) {
                bool bad = odd_claim ? c % 2 == 0 : c != 1;
                if (! bad)
                    continue;
                if (c == 0)
                    push("uncovered: " + to_string(e));
                else
                    push("covered " + std::to_string(c) + " times: " + to_string(e));
            }
        }
    }

    auto check(const Certificate & cert, size_t max_violations) -> Verdict
    {
        Verdict verdict;
        verdict.blocks = block_count(cert);
        std::visit(
            [&](const auto & c) {
                using T = std::decay_t<decltype(c)>;
                if constexpr (std::is_same_v<T, HypergraphCertificate>)
                    describe(verify_partition(c), false, verdict, max_violations);
                else if constexpr (std::is_same_v<T, ProductCertificate>)
                    describe(verify_product_partition(c), false, verdict, max_violations);
                else
                    describe(cover_multiplicities(c.host, c.blocks), c.claim == CoverClaim::odd_cover, verdict,
                        max_violations);
            },
            cert);
        return verdict;
    }
}
