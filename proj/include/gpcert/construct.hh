#ifndef GPCERT_CONSTRUCT_HH
#define GPCERT_CONSTRUCT_HH 1

#include <gpcert/certificate.hh>
#include <gpcert/numeric.hh>

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

namespace gpcert
{
    /// Four edge-disjoint graphs g0..g3 whose union is K_n, with biclique partitions of
    /// g1, g2, g3 and of g0 u g1, g0 u g2, g0 u g3.
    struct PartitionScheme
    {
        std::size_t n = 0;
        std::array<Graph, 4> parts;
        std::array<std::vector<Biclique>, 3> part_witness;
        std::array<std::vector<Biclique>, 3> union_witness;

        /// g0 u g_i for i in 1..3.
        [[nodiscard]] auto union_graph(std::size_t i) const -> Graph;
    };

    /// Throws StructuralError if the parts do not partition K_n or a witness is not an
    /// exact biclique partition of its graph.
    auto validate(const PartitionScheme & scheme) -> void;

    /// Stars at each vertex towards its later neighbours; an exact partition of g into at
    /// most |V(g)| - 1 bicliques.
    [[nodiscard]] auto star_partition(const Graph & g) -> std::vector<Biclique>;

    /// Scheme with g1 = K_n, other parts empty, star witnesses.
    [[nodiscard]] auto star_scheme(std::size_t n) -> PartitionScheme;

    /// The K_6 scheme behind the 14-block certificate, with its hard-coded witnesses.
    [[nodiscard]] auto odd_cover_k6_scheme() -> PartitionScheme;

    /// Builds the scheme's parts into K_n vertex labels and fills witnesses by star_partition.
    [[nodiscard]] auto scheme_with_star_witnesses(std::size_t n, std::array<Graph, 4> parts) -> PartitionScheme;

    /// Partition of K_n^(r) by fixing the 2nd, 4th, ... vertices of each edge.
    [[nodiscard]] auto trivial_decomposition(std::size_t n, std::size_t r) -> HypergraphCertificate;

    /// Certificate for E(K_3) x E(K_n) from a scheme.
    [[nodiscard]] auto k3_scheme(const PartitionScheme & scheme) -> ProductCertificate;

    /// Certificate for E(K_4) x E(K_n) from a scheme, using the three 4-cycles of K_4.
    [[nodiscard]] auto k4_scheme(const PartitionScheme & scheme) -> ProductCertificate;

    [[nodiscard]] auto k3_scheme_count(const PartitionScheme & scheme) -> std::size_t;
    [[nodiscard]] auto k4_scheme_count(const PartitionScheme & scheme) -> std::size_t;

    /// The 14-block partition of E(K_4) x E(K_6).
    [[nodiscard]] auto base_k4k6() -> ProductCertificate;

    /// Lifts an exact partition of E(K_a) x E(K_b) to one of E(K_{1+(a-1)i}) x E(K_{1+(b-1)j})
    /// with c*i*j blocks. Throws InvalidArguments if the base is not an exact partition of
    /// two complete graphs on labels 1..a and 1..b.
    [[nodiscard]] auto blowup_product(const ProductCertificate & base, std::size_t i, std::size_t j)
        -> ProductCertificate;

    /// Block count of restrict_product(blowup_product(base, i, j), {1..m1}, {1..m2}) without
    /// building the blow-up.
    [[nodiscard]] auto blowup_restricted_count(
        const ProductCertificate & base, std::size_t i, std::size_t j, std::size_t m1, std::size_t m2) -> std::size_t;

    /// Intersects every block with the kept vertex sets and drops blocks that empty out.
    [[nodiscard]] auto restrict_product(
        const ProductCertificate & cert, const VertexSet & keep_left, const VertexSet & keep_right) -> ProductCertificate;

    /// Star x star partition of E(K_m1) x E(K_m2), (m1-1)(m2-1) blocks.
    [[nodiscard]] auto trivial_product(std::size_t m1, std::size_t m2) -> ProductCertificate;

    enum class GStrategy
    {
        trivial,
        blowup,
        blowup_transposed
    };

    struct GPlan
    {
        GStrategy strategy = GStrategy::trivial;
        std::size_t i = 1, j = 1;
        std::size_t blocks = 0;
    };

    /// Chooses the cheapest of the star product and the two orientations of the blown-up
    /// 14-block certificate, by restricted block count. Ties keep the earlier strategy.
    [[nodiscard]] auto best_g_plan(std::size_t m1, std::size_t m2) -> GPlan;

    [[nodiscard]] auto best_g_certificate(std::size_t m1, std::size_t m2) -> ProductCertificate;

    /// Largest vertex count that still uses the trivial construction in f4_recursive.
    inline constexpr std::size_t f4_recursion_cutoff = 8;

    /// Halving construction for K_n^(4): recurse inside each half, cross the halves' 3-uniform
    /// trivial partitions with the opposite half, and reuse best_g_certificate for the 2-2 edges.
    [[nodiscard]] auto f4_recursive(std::size_t n) -> HypergraphCertificate;

    [[nodiscard]] auto count_f4_recursive(std::size_t n) -> Integer;

    using UniformBuilder = std::function<HypergraphCertificate(std::size_t)>;

    /// From partitions of K_m^(2k) for every m, a partition of K_n^(2k+2): the edges whose
    /// second vertex is i are {1..i-1} x {i} x (a partition of K^(2k) on {i+1..n}).
    [[nodiscard]] auto f2k_lift(const UniformBuilder & base, std::size_t k, std::size_t n) -> HypergraphCertificate;

    using UniformCounter = std::function<Integer(std::size_t)>;

    [[nodiscard]] auto count_f2k_lift(const UniformCounter & base, std::size_t k, std::size_t n) -> Integer;

    /// Partition of K_n^(2k) for k >= 2: f4_recursive at k = 2, lifted otherwise.
    [[nodiscard]] auto lifted_recursive(std::size_t k, std::size_t n) -> HypergraphCertificate;

    [[nodiscard]] auto count_lifted_recursive(std::size_t k, std::size_t n) -> Integer;

    /// Four K_{3,3}s forming an odd cover of K_8.
    [[nodiscard]] auto odd_cover_k8() -> std::vector<Biclique>;

    [[nodiscard]] auto restrict_bicliques(const std::vector<Biclique> & bicliques, const VertexSet & keep)
        -> std::vector<Biclique>;

    /// Applies a vertex map; labels absent from the map are kept.
    [[nodiscard]] auto relabel_bicliques(const std::vector<Biclique> & bicliques, const std::map<Vertex, Vertex> & map)
        -> std::vector<Biclique>;
}

#endif
