#ifndef GPCERT_TRANSFORM_HH
#define GPCERT_TRANSFORM_HH 1

#include <gpcert/certificate.hh>

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gpcert
{
    /// Labels for vertex pairs (u, v) of G x H: rank(u) * |V(H)| + rank(v) + 1, where
    /// rank is the 0-based position in the sorted vertex set.
    class PairLabeling
    {
    private:
        VertexSet _left, _right;

    public:
        PairLabeling(VertexSet left, VertexSet right);

        [[nodiscard]] auto label(Vertex u, Vertex v) const -> Vertex;
        [[nodiscard]] auto decode(Vertex label) const -> std::pair<Vertex, Vertex>;
        [[nodiscard]] auto size() const -> std::size_t { return _left.size() * _right.size(); }

        /// Short description stored in certificate metadata.
        [[nodiscard]] static auto description() -> std::string;
    };

    /// (u1, v1) ~ (u2, v2) iff u1 ~ u2 in g and v1 ~ v2 in h.
    [[nodiscard]] auto weak_product(const Graph & g, const Graph & h) -> Graph;

    /// Maps each block (X1, X2) x (Y1, Y2) to the bicliques (X1xY1, X2xY2) and (X1xY2, X2xY1).
    [[nodiscard]] auto double_blocks(std::span<const ProductBlock> blocks, const PairLabeling & labeling)
        -> std::vector<Biclique>;

    /// double_blocks applied to a product certificate, giving a partition claim on g * h.
    [[nodiscard]] auto double_certificate(const ProductCertificate & cert) -> BicliqueCertificate;
}

#endif
