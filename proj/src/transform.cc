#include <gpcert/transform.hh>

#include <algorithm>

using std::size_t;
using std::vector;

namespace gpcert
{
    PairLabeling::PairLabeling(VertexSet left, VertexSet right) :
        _left(make_vertex_set(std::move(left))),
        _right(make_vertex_set(std::move(right)))
    {
    }

    auto PairLabeling::label(Vertex u, Vertex v) const -> Vertex
    {
        auto iu = std::lower_bound(_left.begin(), _left.end(), u);
        auto iv = std::lower_bound(_right.begin(), _right.end(), v);
        if (iu == _left.end() || *iu != u || iv == _right.end() || *iv != v)
            throw InvalidArguments("pair (" + std::to_string(u) + "," + std::to_string(v) + ") is not a product vertex");
        return static_cast<Vertex>(static_cast<size_t>(iu - _left.begin()) * _right.size()
            + static_cast<size_t>(iv - _right.begin()) + 1);
    }

    auto PairLabeling::decode(Vertex label) const -> std::pair<Vertex, Vertex>
    {
        if (label < 1 || label > size())
            throw InvalidArguments("label " + std::to_string(label) + " is not a product vertex");
        size_t index = label - 1;
        return {_left[index / _right.size()], _right[index % _right.size()]};
    }

    auto PairLabeling::description() -> std::string
    {
        return "rank(u)*|V(H)|+rank(v)+1";
    }

    auto weak_product(const Graph & g, const Graph & h) -> Graph
    {
        PairLabeling labels(g.vertices(), h.vertices());
        vector<Vertex> vertices;
        for (auto u : g.vertices())
            for (auto v : h.vertices())
                vertices.push_back(labels.label(u, v));
        vector<Edge> edges;
        edges.reserve(2 * g.edge_count() * h.edge_count());
        for (auto & e : g.edges())
            for (auto & f : h.edges()) {
                edges.push_back(make_edge(labels.label(e.u, f.u), labels.label(e.v, f.v)));
                edges.push_back(make_edge(labels.label(e.u, f.v), labels.label(e.v, f.u)));
            }
        return Graph{make_vertex_set(std::move(vertices)), std::move(edges)};
    }

    auto double_blocks(std::span<const ProductBlock> blocks, const PairLabeling & labeling) -> vector<Biclique>
    {
        auto cross = [&](const VertexSet & xs, const VertexSet & ys) {
            vector<Vertex> out;
            for (auto x : xs)
                for (auto y : ys)
                    out.push_back(labeling.label(x, y));
            return out;
        };
        vector<Biclique> result;
        result.reserve(2 * blocks.size());
        for (auto & b : blocks) {
            result.push_back(Biclique::make(cross(b.left.x, b.right.x), cross(b.left.y, b.right.y)));
            result.push_back(Biclique::make(cross(b.left.x, b.right.y), cross(b.left.y, b.right.x)));
        }
        return result;
    }

    auto double_certificate(const ProductCertificate & cert) -> BicliqueCertificate
    {
        PairLabeling labeling(cert.left.vertices(), cert.right.vertices());
        BicliqueCertificate result{weak_product(cert.left, cert.right), double_blocks(cert.blocks, labeling),
            CoverClaim::partition, cert.metadata};
        result.metadata["transform"] = "double-blocks";
        result.metadata["pair_labeling"] = PairLabeling::description();
        return result;
    }
}
