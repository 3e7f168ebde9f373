#include <gpcert/construct.hh>
#include <gpcert/verify.hh>

#include <algorithm>
#include <map>
#include <numeric>

using std::size_t;
using std::string;
using std::vector;

namespace gpcert
{
    namespace
    {
        auto range_set(size_t first, size_t last) -> VertexSet
        {
            VertexSet result;
            for (size_t v = first; v <= last; ++v)
                result.push_back(static_cast<Vertex>(v));
            return result;
        }

        auto shifted(const VertexSet & c, size_t offset) -> VertexSet
        {
            VertexSet result = c;
            for (auto & v : result)
                v += static_cast<Vertex>(offset);
            return result;
        }

        auto ceil_div(size_t a, size_t b) -> size_t
        {
            return (a + b - 1) / b;
        }

        auto require_complete_on_1_to_n(const Graph & g, const char * side) -> size_t
        {
            auto n = g.vertex_count();
            if (! g.is_complete() || (n > 0 && (g.vertices().front() != 1 || g.vertices().back() != n)))
                throw InvalidArguments(string{side} + " factor must be a complete graph on labels 1..n");
            return n;
        }
    }

    auto PartitionScheme::union_graph(size_t i) const -> Graph
    {
        return graph_union(parts[0], parts.at(i));
    }

    auto validate(const PartitionScheme & scheme) -> void
    {
        auto host = Graph::complete(scheme.n);
        std::map<Edge, int> seen;
        for (size_t p = 0; p < 4; ++p)
            for (auto & e : scheme.parts[p].edges()) {
                if (! host.has_edge(e))
                    throw StructuralError("part g" + std::to_string(p) + " edge " + to_string(e) + " is not in K_n");
                if (! seen.emplace(e, p).second)
                    throw StructuralError("edge " + to_string(e) + " lies in two parts");
            }
        if (seen.size() != host.edge_count())
            throw StructuralError("parts do not cover K_n");
        for (size_t i = 1; i <= 3; ++i) {
            if (! is_biclique_partition(scheme.parts[i], scheme.part_witness[i - 1]))
                throw StructuralError("witness for g" + std::to_string(i) + " is not a biclique partition");
            if (! is_biclique_partition(scheme.union_graph(i), scheme.union_witness[i - 1]))
                throw StructuralError("witness for g0 u g" + std::to_string(i) + " is not a biclique partition");
        }
    }

    auto star_partition(const Graph & g) -> vector<Biclique>
    {
        std::map<Vertex, vector<Vertex>> later;
        for (auto & e : g.edges())
            later[e.u].push_back(e.v);
        vector<Biclique> result;
        for (auto & [v, nbrs] : later)
            result.push_back(Biclique::make({v}, nbrs));
        return result;
    }

    auto scheme_with_star_witnesses(size_t n, std::array<Graph, 4> parts) -> PartitionScheme
    {
        PartitionScheme scheme;
        scheme.n = n;
        auto vertices = Graph::complete(n).vertices();
        for (size_t p = 0; p < 4; ++p)
            scheme.parts[p] = Graph{vertices, parts[p].edges()};
        for (size_t i = 1; i <= 3; ++i) {
            scheme.part_witness[i - 1] = star_partition(scheme.parts[i]);
            scheme.union_witness[i - 1] = star_partition(scheme.union_graph(i));
        }
        validate(scheme);
        return scheme;
    }

    auto star_scheme(size_t n) -> PartitionScheme
    {
        return scheme_with_star_witnesses(n, {Graph{}, Graph::complete(n), Graph{}, Graph{}});
    }

    auto odd_cover_k6_scheme() -> PartitionScheme
    {
        auto edges = [](std::initializer_list<std::pair<Vertex, Vertex>> list) {
            vector<Edge> result;
            for (auto [a, b] : list)
                result.push_back(make_edge(a, b));
            return Graph{Graph::complete(6).vertices(), std::move(result)};
        };

        PartitionScheme scheme;
        scheme.n = 6;
        scheme.parts = {
            edges({{1, 2}, {3, 4}}),
            edges({{1, 4}, {2, 3}, {2, 5}, {4, 5}}),
            edges({{1, 3}, {2, 4}, {2, 6}, {3, 6}}),
            edges({{1, 5}, {1, 6}, {3, 5}, {4, 6}, {5, 6}})};
        scheme.part_witness = {{
            {Biclique::make({4}, {1, 5}), Biclique::make({2}, {3, 5})},
            {Biclique::make({2}, {4, 6}), Biclique::make({3}, {1, 6})},
            {Biclique::make({5}, {1, 3, 6}), Biclique::make({6}, {1, 4})}}};
        scheme.union_witness = {{
            {Biclique::make({1, 3, 5}, {2, 4})},
            {Biclique::make({1, 4, 6}, {2, 3})},
            {Biclique::make({3, 6}, {4, 5}), Biclique::make({1}, {2, 5, 6})}}};
        validate(scheme);
        return scheme;
    }

    auto trivial_decomposition(size_t n, size_t r) -> HypergraphCertificate
    {
        if (r < 1 || n < r)
            throw InvalidArguments("trivial decomposition needs n >= r >= 1, got n=" + std::to_string(n)
                    + " r=" + std::to_string(r));

        HypergraphCertificate cert{HypergraphHost::complete(n, r), {},
            {{"construction", "trivial"}, {"n", std::to_string(n)}, {"r", std::to_string(r)}}};

        size_t fixed_count = r / 2;
        bool odd = r % 2 == 1;
        // Largest allowed label for the last fixed vertex: an odd rank needs one more class after it.
        size_t last_limit = odd ? n - 1 : n;
        vector<size_t> fixed;

        auto emit = [&]() {
            vector<vector<Vertex>> classes;
            size_t previous = 0;
            for (auto p : fixed) {
                classes.push_back(range_set(previous + 1, p - 1));
                classes.push_back({static_cast<Vertex>(p)});
                previous = p;
            }
            if (odd)
                classes.push_back(range_set(previous + 1, n));
            cert.blocks.push_back(MultipartiteBlock::make(std::move(classes)));
        };

        auto choose = [&](auto & self, size_t lowest) -> void {
            if (fixed.size() == fixed_count) {
                emit();
                return;
            }
            // Room for the remaining fixed vertices, each preceded by a nonempty gap.
            size_t remaining = fixed_count - fixed.size();
            for (size_t p = lowest; p + 2 * (remaining - 1) <= last_limit; ++p) {
                fixed.push_back(p);
                self(self, p + 2);
                fixed.pop_back();
            }
        };
        choose(choose, 2);
        return cert;
    }

    namespace
    {
        auto scheme_certificate(const PartitionScheme & scheme, size_t k) -> ProductCertificate
        {
            validate(scheme);
            ProductCertificate cert{Graph::complete(k), Graph::complete(scheme.n), {},
                {{"construction", k == 3 ? "k3-scheme" : "k4-scheme"}, {"n", std::to_string(scheme.n)}}};

            // Per part i: the biclique paired with g_i, and the single edges paired with g0 u g_i.
            std::array<Biclique, 3> large;
            std::array<vector<Biclique>, 3> singles;
            if (k == 3) {
                for (Vertex i = 1; i <= 3; ++i) {
                    vector<Vertex> others;
                    for (Vertex v = 1; v <= 3; ++v)
                        if (v != i)
                            others.push_back(v);
                    large[i - 1] = Biclique::make({i}, others);
                    singles[i - 1] = {Biclique::make({others[0]}, {others[1]})};
                }
            }
            else {
                // The three 4-cycles of K_4, each the biclique between two complementary pairs.
                const std::array<std::pair<vector<Vertex>, vector<Vertex>>, 3> cycles{
                    {{{1, 2}, {3, 4}}, {{1, 3}, {2, 4}}, {{1, 4}, {2, 3}}}};
                for (size_t c = 0; c < 3; ++c) {
                    auto & [p, q] = cycles[c];
                    large[c] = Biclique::make(p, q);
                    singles[c] = {Biclique::make({p[0]}, {p[1]}), Biclique::make({q[0]}, {q[1]})};
                }
            }

            for (size_t i = 0; i < 3; ++i) {
                for (auto & b : scheme.part_witness[i])
                    cert.blocks.push_back({large[i], b});
                for (auto & s : singles[i])
                    for (auto & b : scheme.union_witness[i])
                        cert.blocks.push_back({s, b});
            }
            return cert;
        }
    }

    auto k3_scheme(const PartitionScheme & scheme) -> ProductCertificate
    {
        return scheme_certificate(scheme, 3);
    }

    auto k4_scheme(const PartitionScheme & scheme) -> ProductCertificate
    {
        return scheme_certificate(scheme, 4);
    }

    auto k3_scheme_count(const PartitionScheme & scheme) -> size_t
    {
        size_t total = 0;
        for (size_t i = 0; i < 3; ++i)
            total += scheme.part_witness[i].size() + scheme.union_witness[i].size();
        return total;
    }

    auto k4_scheme_count(const PartitionScheme & scheme) -> size_t
    {
        size_t total = 0;
        for (size_t i = 0; i < 3; ++i)
            total += scheme.part_witness[i].size() + 2 * scheme.union_witness[i].size();
        return total;
    }

    auto base_k4k6() -> ProductCertificate
    {
        auto cert = k4_scheme(odd_cover_k6_scheme());
        cert.metadata = {{"construction", "base-k4k6"}};
        return cert;
    }

    namespace
    {
        // Copy t (1-based) of K_base inside K_{1+(base-1)copies}: vertex 1 stays 1 and k >= 2 goes
        // to the t-th run of base-1 fresh labels. Vertex 1 also absorbs the runs of every later
        // copy, which is the blow-up that the later copies perform.
        auto copy_class(const VertexSet & c, size_t base, size_t t, size_t copies) -> VertexSet
        {
            vector<Vertex> result;
            for (auto k : c) {
                if (k == 1) {
                    result.push_back(1);
                    for (size_t later = t + 1; later <= copies; ++later)
                        for (size_t s = 2; s <= base; ++s)
                            result.push_back(static_cast<Vertex>(1 + (later - 1) * (base - 1) + (s - 1)));
                }
                else
                    result.push_back(static_cast<Vertex>(1 + (t - 1) * (base - 1) + (k - 1)));
            }
            return make_vertex_set(std::move(result));
        }

        auto copy_biclique(const Biclique & b, size_t base, size_t t, size_t copies) -> Biclique
        {
            return Biclique::make(copy_class(b.x, base, t, copies), copy_class(b.y, base, t, copies));
        }

        // Whether a copied class meets {1..keep}. Its smallest label is 1 if it holds 1, and the
        // image of its smallest base label otherwise.
        auto copy_meets_prefix(const VertexSet & c, size_t base, size_t t, size_t keep) -> bool
        {
            if (c.front() == 1)
                return true;
            return 1 + (t - 1) * (base - 1) + (c.front() - 1) <= keep;
        }

        auto surviving_copies(const Biclique & b, size_t base, size_t copies, size_t keep) -> size_t
        {
            size_t count = 0;
            for (size_t t = 1; t <= copies; ++t)
                if (copy_meets_prefix(b.x, base, t, keep) && copy_meets_prefix(b.y, base, t, keep))
                    ++count;
            return count;
        }

        auto checked_base(const ProductCertificate & base, size_t i, size_t j) -> std::pair<size_t, size_t>
        {
            if (i < 1 || j < 1)
                throw InvalidArguments("blow-up multipliers must be positive");
            auto a = require_complete_on_1_to_n(base.left, "left");
            auto b = require_complete_on_1_to_n(base.right, "right");
            if (a < 2 || b < 2)
                throw InvalidArguments("blow-up base factors need at least two vertices");
            if (! verify_product_partition(base).is_exact_partition)
                throw InvalidArguments("blow-up base is not an exact partition");
            return {a, b};
        }
    }

    auto blowup_product(const ProductCertificate & base, size_t i, size_t j) -> ProductCertificate
    {
        auto [a, b] = checked_base(base, i, j);
        ProductCertificate cert{Graph::complete(1 + (a - 1) * i), Graph::complete(1 + (b - 1) * j), {},
            {{"construction", "blowup"}, {"i", std::to_string(i)}, {"j", std::to_string(j)},
                {"base_blocks", std::to_string(base.blocks.size())}}};
        cert.blocks.reserve(base.blocks.size() * i * j);
        for (size_t s = 1; s <= i; ++s)
            for (size_t t = 1; t <= j; ++t)
                for (auto & block : base.blocks)
                    cert.blocks.push_back({copy_biclique(block.left, a, s, i), copy_biclique(block.right, b, t, j)});
        return cert;
    }

    auto blowup_restricted_count(const ProductCertificate & base, size_t i, size_t j, size_t m1, size_t m2) -> size_t
    {
        auto [a, b] = checked_base(base, i, j);
        size_t total = 0;
        for (auto & block : base.blocks)
            total += surviving_copies(block.left, a, i, m1) * surviving_copies(block.right, b, j, m2);
        return total;
    }

    auto restrict_product(const ProductCertificate & cert, const VertexSet & keep_left, const VertexSet & keep_right)
        -> ProductCertificate
    {
        ProductCertificate result{
            induced_subgraph(cert.left, keep_left), induced_subgraph(cert.right, keep_right), {}, cert.metadata};
        for (auto & block : cert.blocks) {
            auto lx = intersect(block.left.x, keep_left), ly = intersect(block.left.y, keep_left);
            auto rx = intersect(block.right.x, keep_right), ry = intersect(block.right.y, keep_right);
            if (lx.empty() || ly.empty() || rx.empty() || ry.empty())
                continue;
            result.blocks.push_back({Biclique::make(lx, ly), Biclique::make(rx, ry)});
        }
        return result;
    }

    auto trivial_product(size_t m1, size_t m2) -> ProductCertificate
    {
        ProductCertificate cert{Graph::complete(m1), Graph::complete(m2), {},
            {{"construction", "star-product"}, {"m1", std::to_string(m1)}, {"m2", std::to_string(m2)}}};
        auto left = star_partition(cert.left), right = star_partition(cert.right);
        for (auto & l : left)
            for (auto & r : right)
                cert.blocks.push_back({l, r});
        return cert;
    }

    namespace
    {
        auto cached_base() -> const ProductCertificate &
        {
            static const ProductCertificate base = base_k4k6();
            return base;
        }

        auto cached_base_transposed() -> const ProductCertificate &
        {
            static const ProductCertificate base = transpose(base_k4k6());
            return base;
        }
    }

    auto best_g_plan(size_t m1, size_t m2) -> GPlan
    {
        if (m1 < 2 || m2 < 2)
            throw InvalidArguments("best_g needs both factors with at least two vertices");
        GPlan best{GStrategy::trivial, 1, 1, (m1 - 1) * (m2 - 1)};

        auto consider = [&](GStrategy strategy, const ProductCertificate & base) {
            auto a = base.left.vertex_count(), b = base.right.vertex_count();
            auto i = ceil_div(m1 - 1, a - 1), j = ceil_div(m2 - 1, b - 1);
            auto count = blowup_restricted_count(base, i, j, m1, m2);
            if (count < best.blocks)
                best = GPlan{strategy, i, j, count};
        };
        consider(GStrategy::blowup, cached_base());
        consider(GStrategy::blowup_transposed, cached_base_transposed());
        return best;
    }

    auto best_g_certificate(size_t m1, size_t m2) -> ProductCertificate
    {
        auto plan = best_g_plan(m1, m2);
        ProductCertificate cert;
        if (plan.strategy == GStrategy::trivial)
            cert = trivial_product(m1, m2);
        else {
            auto & base = plan.strategy == GStrategy::blowup ? cached_base() : cached_base_transposed();
            cert = restrict_product(blowup_product(base, plan.i, plan.j), range_set(1, m1), range_set(1, m2));
            cert.metadata = {{"construction", "best-g"},
                {"strategy", plan.strategy == GStrategy::blowup ? "blowup" : "blowup-transposed"},
                {"i", std::to_string(plan.i)}, {"j", std::to_string(plan.j)}};
        }
        cert.metadata["m1"] = std::to_string(m1);
        cert.metadata["m2"] = std::to_string(m2);
        return cert;
    }

    auto f4_recursive(size_t n) -> HypergraphCertificate
    {
        if (n < 4)
            throw InvalidArguments("f4_recursive needs n >= 4, got " + std::to_string(n));

        HypergraphCertificate cert;
        if (n <= f4_recursion_cutoff)
            cert = trivial_decomposition(n, 4);
        else {
            size_t a = (n + 1) / 2, b = n - a;
            auto side_a = range_set(1, a), side_b = range_set(a + 1, n);
            cert.host = HypergraphHost::complete(n, 4);

            auto add_shifted = [&](const HypergraphCertificate & part, size_t offset, const VertexSet * extra) {
                for (auto & block : part.blocks) {
                    vector<vector<Vertex>> classes;
                    for (auto & c : block.classes)
                        classes.push_back(shifted(c, offset));
                    if (extra)
                        classes.push_back(*extra);
                    cert.blocks.push_back(MultipartiteBlock::make(std::move(classes)));
                }
            };

            add_shifted(f4_recursive(a), 0, nullptr);
            add_shifted(f4_recursive(b), a, nullptr);
            add_shifted(trivial_decomposition(a, 3), 0, &side_b);
            add_shifted(trivial_decomposition(b, 3), a, &side_a);

            for (auto & block : best_g_certificate(a, b).blocks)
                cert.blocks.push_back(MultipartiteBlock::make(
                    {block.left.x, block.left.y, shifted(block.right.x, a), shifted(block.right.y, a)}));
        }
        cert.metadata = {{"construction", "f4-recursive"}, {"n", std::to_string(n)}};
        return cert;
    }

    auto count_f4_recursive(size_t n) -> Integer
    {
        if (n < 4)
            throw InvalidArguments("count_f4_recursive needs n >= 4, got " + std::to_string(n));
        static std::map<size_t, Integer> memo;
        if (n <= f4_recursion_cutoff)
            return binomial(static_cast<std::int64_t>(n - 2), 2);
        if (auto it = memo.find(n); it != memo.end())
            return it->second;
        size_t a = (n + 1) / 2, b = n - a;
        Integer result = count_f4_recursive(a) + count_f4_recursive(b) + best_g_plan(a, b).blocks + (a - 2) + (b - 2);
        memo.emplace(n, result);
        return result;
    }

    auto f2k_lift(const UniformBuilder & base, size_t k, size_t n) -> HypergraphCertificate
    {
        if (k < 1 || n < 2 * k + 2)
            throw InvalidArguments("f2k_lift needs k >= 1 and n >= 2k+2, got k=" + std::to_string(k)
                    + " n=" + std::to_string(n));
        HypergraphCertificate cert{HypergraphHost::complete(n, 2 * k + 2), {},
            {{"construction", "f2k-lift"}, {"k", std::to_string(k + 1)}, {"n", std::to_string(n)}}};
        for (size_t i = 2; i <= n - 2 * k; ++i) {
            auto part = base(n - i);
            if (part.host != HypergraphHost::complete(n - i, 2 * k))
                throw InvalidArguments("f2k_lift base builder returned the wrong host");
            auto first = range_set(1, i - 1);
            for (auto & block : part.blocks) {
                vector<vector<Vertex>> classes{first, {static_cast<Vertex>(i)}};
                for (auto & c : block.classes)
                    classes.push_back(shifted(c, i));
                cert.blocks.push_back(MultipartiteBlock::make(std::move(classes)));
            }
        }
        return cert;
    }

    auto count_f2k_lift(const UniformCounter & base, size_t k, size_t n) -> Integer
    {
        if (k < 1 || n < 2 * k + 2)
            throw InvalidArguments("count_f2k_lift needs k >= 1 and n >= 2k+2");
        Integer total = 0;
        for (size_t i = 2; i <= n - 2 * k; ++i)
            total += base(n - i);
        return total;
    }

    auto lifted_recursive(size_t k, size_t n) -> HypergraphCertificate
    {
        if (k < 2)
            throw InvalidArguments("lifted_recursive needs k >= 2");
        if (k == 2)
            return f4_recursive(n);
        return f2k_lift([k](size_t m) { return lifted_recursive(k - 1, m); }, k - 1, n);
    }

    auto count_lifted_recursive(size_t k, size_t n) -> Integer
    {
        if (k < 2)
            throw InvalidArguments("count_lifted_recursive needs k >= 2");
        if (k == 2)
            return count_f4_recursive(n);
        return count_f2k_lift([k](size_t m) { return count_lifted_recursive(k - 1, m); }, k - 1, n);
    }

    auto odd_cover_k8() -> vector<Biclique>
    {
        return {Biclique::make({1, 3, 5}, {2, 4, 6}), Biclique::make({1, 4, 7}, {2, 3, 8}),
            Biclique::make({2, 5, 7}, {1, 6, 8}), Biclique::make({3, 6, 7}, {4, 5, 8})};
    }

    auto restrict_bicliques(const vector<Biclique> & bicliques, const VertexSet & keep) -> vector<Biclique>
    {
        vector<Biclique> result;
        for (auto & b : bicliques) {
            auto x = intersect(b.x, keep), y = intersect(b.y, keep);
            if (! x.empty() && ! y.empty())
                result.push_back(Biclique::make(x, y));
        }
        return result;
    }

    auto relabel_bicliques(const vector<Biclique> & bicliques, const std::map<Vertex, Vertex> & map)
        -> vector<Biclique>
    {
        auto apply = [&](const VertexSet & c) {
            vector<Vertex> out;
            for (auto v : c) {
                auto it = map.find(v);
                out.push_back(it == map.end() ? v : it->second);
            }
            return out;
        };
        vector<Biclique> result;
        for (auto & b : bicliques)
            result.push_back(Biclique::make(apply(b.x), apply(b.y)));
        return result;
    }
}
