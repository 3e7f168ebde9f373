#ifndef GPCERT_CERTIFICATE_HH
#define GPCERT_CERTIFICATE_HH 1

#include <gpcert/graph.hh>

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

namespace gpcert
{
    /// An r-uniform host: either the complete r-graph on labels 1..n or an explicit edge list.
    class HypergraphHost
    {
    private:
        std::size_t _rank = 0;
        VertexSet _vertices;
        bool _complete = false;
        std::vector<Hyperedge> _edges;

    public:
        HypergraphHost() = default;

        [[nodiscard]] static auto complete(std::size_t n, std::size_t r) -> HypergraphHost;

        /// Throws StructuralError if an edge has the wrong size, repeats a vertex, leaves the
        /// vertex set, or is duplicated.
        [[nodiscard]] static auto explicit_edges(std::size_t r, VertexSet vertices, std::vector<Hyperedge> edges)
            -> HypergraphHost;

        [[nodiscard]] auto rank() const -> std::size_t { return _rank; }
        [[nodiscard]] auto vertices() const -> const VertexSet & { return _vertices; }
        [[nodiscard]] auto is_complete() const -> bool { return _complete; }

        /// Number of edges.
        [[nodiscard]] auto size() const -> std::uint64_t;

        /// Position of e in the host's canonical edge order, if e is an edge.
        [[nodiscard]] auto index_of(const Hyperedge & e) const -> std::optional<std::uint64_t>;

        [[nodiscard]] auto edge_at(std::uint64_t index) const -> Hyperedge;

        /// Every edge, in index order. Materializes binomial(n, r) edges for complete hosts.
        [[nodiscard]] auto edges() const -> std::vector<Hyperedge>;

        auto operator==(const HypergraphHost &) const -> bool = default;
    };

    struct HypergraphCertificate
    {
        HypergraphHost host;
        std::vector<MultipartiteBlock> blocks;
        Metadata metadata;
    };

    struct ProductCertificate
    {
        Graph left, right;
        std::vector<ProductBlock> blocks;
        Metadata metadata;
    };

    /// What a family of bicliques on a graph host claims to be.
    enum class CoverClaim
    {
        partition,
        odd_cover
    };

    struct BicliqueCertificate
    {
        Graph host;
        std::vector<Biclique> blocks;
        CoverClaim claim = CoverClaim::partition;
        Metadata metadata;
    };

    using Certificate = std::variant<HypergraphCertificate, ProductCertificate, BicliqueCertificate>;

    [[nodiscard]] auto block_count(const Certificate & c) -> std::size_t;

    /// Swaps the two factors of a product certificate.
    [[nodiscard]] auto transpose(const ProductCertificate & c) -> ProductCertificate;
}

#endif
