#ifndef GPCERT_GRAPH_HH
#define GPCERT_GRAPH_HH 1

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gpcert
{
    using Vertex = std::uint32_t;

    /// Sorted, duplicate-free list of vertex labels.
    using VertexSet = std::vector<Vertex>;

    /// Sorted list of r distinct vertex labels.
    using Hyperedge = std::vector<Vertex>;

    using Metadata = std::map<std::string, std::string>;

    class InvalidArguments : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    /// A block or host that breaks a structural invariant. block_index() names the
    /// offending block when the error is attributable to one.
    class StructuralError : public std::runtime_error
    {
    private:
        std::optional<std::size_t> _block_index;

    public:
        explicit StructuralError(const std::string & what, std::optional<std::size_t> block_index = std::nullopt);

        [[nodiscard]] auto block_index() const -> std::optional<std::size_t> { return _block_index; }
    };

    struct Edge
    {
        Vertex u = 0, v = 0;

        auto operator<=>(const Edge &) const = default;
    };

    /// Orders the endpoints; rejects loops.
    [[nodiscard]] auto make_edge(Vertex a, Vertex b) -> Edge;

    [[nodiscard]] auto make_vertex_set(std::vector<Vertex> labels) -> VertexSet;

    [[nodiscard]] auto contains(const VertexSet & set, Vertex v) -> bool;

    [[nodiscard]] auto intersect(const VertexSet & a, const VertexSet & b) -> VertexSet;

    [[nodiscard]] auto to_string(const Edge & e) -> std::string;

    [[nodiscard]] auto to_string(std::span<const Vertex> labels) -> std::string;

    /// Finite simple graph. Edges are kept sorted so that lookups are binary searches
    /// and iteration order is canonical.
    class Graph
    {
    private:
        VertexSet _vertices;
        std::vector<Edge> _edges;

    public:
        Graph() = default;

        /// Throws StructuralError on loops, duplicate edges, or endpoints outside the vertex set.
        Graph(VertexSet vertices, std::vector<Edge> edges);

        /// K_n on labels 1..n.
        [[nodiscard]] static auto complete(std::size_t n) -> Graph;

        /// Vertex set taken as the union of endpoints.
        [[nodiscard]] static auto from_edges(std::vector<Edge> edges) -> Graph;

        [[nodiscard]] auto vertices() const -> const VertexSet & { return _vertices; }
        [[nodiscard]] auto edges() const -> const std::vector<Edge> & { return _edges; }
        [[nodiscard]] auto vertex_count() const -> std::size_t { return _vertices.size(); }
        [[nodiscard]] auto edge_count() const -> std::size_t { return _edges.size(); }

        [[nodiscard]] auto has_vertex(Vertex v) const -> bool;
        [[nodiscard]] auto has_edge(const Edge & e) const -> bool;
        [[nodiscard]] auto edge_index(const Edge & e) const -> std::optional<std::size_t>;

        /// True when every pair of distinct vertices is an edge.
        [[nodiscard]] auto is_complete() const -> bool;

        auto operator==(const Graph &) const -> bool = default;
    };

    [[nodiscard]] auto graph_union(const Graph & a, const Graph & b) -> Graph;

    [[nodiscard]] auto induced_subgraph(const Graph & g, const VertexSet & keep) -> Graph;

    /// Complete bipartite graph between two disjoint nonempty classes. Canonical form:
    /// both classes sorted and x.front() < y.front().
    struct Biclique
    {
        VertexSet x, y;

        [[nodiscard]] static auto make(std::vector<Vertex> x, std::vector<Vertex> y) -> Biclique;

        [[nodiscard]] auto edge_count() const -> std::size_t { return x.size() * y.size(); }
        [[nodiscard]] auto contains(const Edge & e) const -> bool;
        [[nodiscard]] auto edges() const -> std::vector<Edge>;

        auto operator<=>(const Biclique &) const = default;
    };

    /// The edge set of a biclique as a graph on the union of its classes.
    [[nodiscard]] auto as_graph(const Biclique & b) -> Graph;

    /// Complete r-partite r-graph given by r pairwise disjoint nonempty classes. Canonical
    /// form: each class sorted, classes ordered by their minimum element.
    struct MultipartiteBlock
    {
        std::vector<VertexSet> classes;

        [[nodiscard]] static auto make(std::vector<std::vector<Vertex>> classes) -> MultipartiteBlock;

        [[nodiscard]] auto rank() const -> std::size_t { return classes.size(); }
        [[nodiscard]] auto edge_count() const -> std::uint64_t;

        /// Calls f(const Hyperedge &) for every transversal, in lexicographic order of class choices.
        template <typename F>
        auto for_each_edge(F && f) const -> void;

        auto operator<=>(const MultipartiteBlock &) const = default;
    };

    /// E(left) x E(right).
    struct ProductBlock
    {
        Biclique left, right;

        [[nodiscard]] auto pair_count() const -> std::uint64_t
        {
            return std::uint64_t{left.edge_count()} * right.edge_count();
        }

        auto operator<=>(const ProductBlock &) const = default;
    };

    /// An element of E(G) x E(H).
    struct EdgePair
    {
        Edge left, right;

        auto operator<=>(const EdgePair &) const = default;
    };

    [[nodiscard]] auto to_string(const EdgePair & p) -> std::string;

    template <typename F>
    auto MultipartiteBlock::for_each_edge(F && f) const -> void
    {
        if (classes.empty())
            return;
        std::vector<std::size_t> pos(classes.size(), 0);
        Hyperedge scratch(classes.size());
        while (true) {
            for (std::size_t c = 0; c < classes.size(); ++c)
                scratch[c] = classes[c][pos[c]];
            Hyperedge sorted = scratch;
            std::sort(sorted.begin(), sorted.end());
            f(static_cast<const Hyperedge &>(sorted));

            std::size_t c = classes.size();
            while (c > 0) {
                --c;
                if (++pos[c] < classes[c].size())
                    break;
                pos[c] = 0;
                if (c == 0)
                    return;
            }
        }
    }
}

#endif
