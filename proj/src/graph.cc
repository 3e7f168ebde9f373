#include <gpcert/certificate.hh>
#include <gpcert/graph.hh>
#include <gpcert/numeric.hh>

#include <algorithm>
#include <sstream>

using std::optional;
using std::size_t;
using std::string;
using std::vector;

namespace gpcert
{
    StructuralError::StructuralError(const string & what, optional<size_t> block_index) :
        std::runtime_error(block_index ? "block " + std::to_string(*block_index) + ": " + what : what),
        _block_index(block_index)
    {
    }

    auto make_edge(Vertex a, Vertex b) -> Edge
    {
        if (a == b)
            throw StructuralError("loop at vertex " + std::to_string(a));
        return a < b ? Edge{a, b} : Edge{b, a};
    }

    auto make_vertex_set(vector<Vertex> labels) -> VertexSet
    {
        std::sort(labels.begin(), labels.end());
        labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
        return labels;
    }

    auto contains(const VertexSet & set, Vertex v) -> bool
    {
        return std::binary_search(set.begin(), set.end(), v);
    }

    auto intersect(const VertexSet & a, const VertexSet & b) -> VertexSet
    {
        VertexSet result;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(result));
        return result;
    }

    auto to_string(const Edge & e) -> string
    {
        return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
    }

    auto to_string(std::span<const Vertex> labels) -> string
    {
        std::ostringstream out;
        out << "{";
        for (size_t i = 0; i < labels.size(); ++i)
            out << (i ? "," : "") << labels[i];
        out << "}";
        return out.str();
    }

    auto to_string(const EdgePair & p) -> string
    {
        return "(" + to_string(p.left) + ", " + to_string(p.right) + ")";
    }

    Graph::Graph(VertexSet vertices, vector<Edge> edges) :
        _vertices(make_vertex_set(std::move(vertices))),
        _edges(std::move(edges))
    {
        for (auto & e : _edges) {
            e = make_edge(e.u, e.v);
            if (! contains(_vertices, e.u) || ! contains(_vertices, e.v))
                throw StructuralError("edge " + to_string(e) + " leaves the vertex set");
        }
        std::sort(_edges.begin(), _edges.end());
        auto dup = std::adjacent_find(_edges.begin(), _edges.end());
        if (dup != _edges.end())
            throw StructuralError("duplicate edge " + to_string(*dup));
    }

    auto Graph::complete(size_t n) -> Graph
    {
        VertexSet vertices(n);
        vector<Edge> edges;
        edges.reserve(n * (n - (n > 0)) / 2);
        for (Vertex u = 1; u <= n; ++u) {
            vertices[u - 1] = u;
            for (Vertex v = u + 1; v <= n; ++v)
                edges.push_back({u, v});
        }
        return Graph{std::move(vertices), std::move(edges)};
    }

    auto Graph::from_edges(vector<Edge> edges) -> Graph
    {
        vector<Vertex> vertices;
        for (auto & e : edges) {
            vertices.push_back(e.u);
            vertices.push_back(e.v);
        }
        return Graph{make_vertex_set(std::move(vertices)), std::move(edges)};
    }

    auto Graph::has_vertex(Vertex v) const -> bool
    {
        return contains(_vertices, v);
    }

    auto Graph::has_edge(const Edge & e) const -> bool
    {
        return edge_index(e).has_value();
    }

    auto Graph::edge_index(const Edge & e) const -> optional<size_t>
    {
        auto it = std::lower_bound(_edges.begin(), _edges.end(), e);
        if (it == _edges.end() || *it != e)
            return std::nullopt;
        return static_cast<size_t>(it - _edges.begin());
    }

    auto Graph::is_complete() const -> bool
    {
        auto n = _vertices.size();
        return _edges.size() == n * (n - (n > 0)) / 2;
    }

    auto graph_union(const Graph & a, const Graph & b) -> Graph
    {
        vector<Vertex> vertices = a.vertices();
        vertices.insert(vertices.end(), b.vertices().begin(), b.vertices().end());
        vector<Edge> edges;
        std::set_union(a.edges().begin(), a.edges().end(), b.edges().begin(), b.edges().end(), std::back_inserter(edges));
        return Graph{make_vertex_set(std::move(vertices)), std::move(edges)};
    }

    auto induced_subgraph(const Graph & g, const VertexSet & keep) -> Graph
    {
        vector<Edge> edges;
        for (auto & e : g.edges())
            if (contains(keep, e.u) && contains(keep, e.v))
                edges.push_back(e);
        return Graph{intersect(g.vertices(), keep), std::move(edges)};
    }

    auto Biclique::make(vector<Vertex> x, vector<Vertex> y) -> Biclique
    {
        Biclique b{make_vertex_set(std::move(x)), make_vertex_set(std::move(y))};
        if (b.x.empty() || b.y.empty())
            throw StructuralError("biclique with an empty class");
        if (! intersect(b.x, b.y).empty())
            throw StructuralError("biclique classes " + to_string(b.x) + " and " + to_string(b.y) + " overlap");
        if (b.y.front() < b.x.front())
            std::swap(b.x, b.y);
        return b;
    }

    auto Biclique::contains(const Edge & e) const -> bool
    {
        using gpcert::contains;
        return (contains(x, e.u) && contains(y, e.v)) || (contains(x, e.v) && contains(y, e.u));
    }

    auto Biclique::edges() const -> vector<Edge>
    {
        vector<Edge> result;
        result.reserve(edge_count());
        for (auto a : x)
            for (auto b : y)
                result.push_back(make_edge(a, b));
        std::sort(result.begin(), result.end());
        return result;
    }

    auto as_graph(const Biclique & b) -> Graph
    {
        vector<Vertex> vertices = b.x;
        vertices.insert(vertices.end(), b.y.begin(), b.y.end());
        return Graph{make_vertex_set(std::move(vertices)), b.edges()};
    }

    auto MultipartiteBlock::make(vector<vector<Vertex>> classes) -> MultipartiteBlock
    {
        MultipartiteBlock block;
        vector<Vertex> all;
        for (auto & c : classes) {
            auto set = make_vertex_set(std::move(c));
            if (set.empty())
                throw StructuralError("multipartite block with an empty class");
            all.insert(all.end(), set.begin(), set.end());
            block.classes.push_back(std::move(set));
        }
        if (block.classes.empty())
            throw StructuralError("multipartite block with no classes");
        auto total = all.size();
        if (make_vertex_set(std::move(all)).size() != total)
            throw StructuralError("multipartite block classes overlap");
        std::sort(block.classes.begin(), block.classes.end(),
            [](const VertexSet & a, const VertexSet & b) { return a.front() < b.front(); });
        return block;
    }

    auto MultipartiteBlock::edge_count() const -> std::uint64_t
    {
        std::uint64_t result = classes.empty() ? 0 : 1;
        for (auto & c : classes)
            result *= c.size();
        return result;
    }

    auto HypergraphHost::complete(size_t n, size_t r) -> HypergraphHost
    {
        if (r < 1 || n < r)
            throw InvalidArguments("complete host needs n >= r >= 1, got n=" + std::to_string(n) + " r=" + std::to_string(r));
        HypergraphHost host;
        host._rank = r;
        host._complete = true;
        host._vertices.resize(n);
        for (size_t v = 0; v < n; ++v)
            host._vertices[v] = static_cast<Vertex>(v + 1);
        return host;
    }

    auto HypergraphHost::explicit_edges(size_t r, VertexSet vertices, vector<Hyperedge> edges) -> HypergraphHost
    {
        if (r < 1)
            throw InvalidArguments("hypergraph rank must be positive");
        HypergraphHost host;
        host._rank = r;
        host._vertices = make_vertex_set(std::move(vertices));
        for (auto & e : edges) {
            std::sort(e.begin(), e.end());
            if (e.size() != r || std::adjacent_find(e.begin(), e.end()) != e.end())
                throw StructuralError("hyperedge " + to_string(e) + " is not a " + std::to_string(r) + "-set");
            for (auto v : e)
                if (! contains(host._vertices, v))
                    throw StructuralError("hyperedge " + to_string(e) + " leaves the vertex set");
        }
        std::sort(edges.begin(), edges.end());
        if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
            throw StructuralError("duplicate hyperedge " + to_string(*dup));
        host._edges = std::move(edges);
        return host;
    }

    namespace
    {
        auto small_binomial(std::uint64_t n, std::uint64_t k) -> std::uint64_t
        {
            if (k > n)
                return 0;
            k = std::min(k, n - k);
            std::uint64_t result = 1;
            for (std::uint64_t i = 1; i <= k; ++i)
                result = result * (n - k + i) / i;
            return result;
        }
    }

    auto HypergraphHost::size() const -> std::uint64_t
    {
        return _complete ? small_binomial(_vertices.size(), _rank) : _edges.size();
    }

    // Complete hosts are indexed by the colexicographic rank of the edge over labels 1..n.
    auto HypergraphHost::index_of(const Hyperedge & e) const -> optional<std::uint64_t>
    {
        if (e.size() != _rank)
            return std::nullopt;
        if (! _complete) {
            auto it = std::lower_bound(_edges.begin(), _edges.end(), e);
            if (it == _edges.end() || *it != e)
                return std::nullopt;
            return static_cast<std::uint64_t>(it - _edges.begin());
        }
        std::uint64_t rank = 0;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 1 || e[i] > _vertices.size() || (i > 0 && e[i] <= e[i - 1]))
                return std::nullopt;
            rank += small_binomial(e[i] - 1, i + 1);
        }
        return rank;
    }

    auto HypergraphHost::edge_at(std::uint64_t index) const -> Hyperedge
    {
        if (! _complete)
            return _edges.at(index);
        Hyperedge e(_rank);
        std::uint64_t top = _vertices.size();
        for (size_t i = _rank; i > 0; --i) {
            while (small_binomial(top - 1, i) > index)
                --top;
            e[i - 1] = static_cast<Vertex>(top);
            index -= small_binomial(top - 1, i);
            --top;
        }
        return e;
    }

    auto HypergraphHost::edges() const -> vector<Hyperedge>
    {
        if (! _complete)
            return _edges;
        vector<Hyperedge> result;
        auto total = size();
        result.reserve(total);
        for (std::uint64_t i = 0; i < total; ++i)
            result.push_back(edge_at(i));
        return result;
    }

    auto block_count(const Certificate & c) -> size_t
    {
        return std::visit([](const auto & cert) { return cert.blocks.size(); }, c);
    }

    auto transpose(const ProductCertificate & c) -> ProductCertificate
    {
        ProductCertificate result{c.right, c.left, {}, c.metadata};
        result.blocks.reserve(c.blocks.size());
        for (auto & b : c.blocks)
            result.blocks.push_back({b.right, b.left});
        return result;
    }
}
