#ifndef GPCERT_EXACT_HH
#define GPCERT_EXACT_HH 1

#include <gpcert/certificate.hh>
#include <gpcert/construct.hh>

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

namespace gpcert
{
    /// Search limits. Unset means unlimited.
    struct Budget
    {
        std::optional<std::uint64_t> max_nodes;
        std::optional<std::chrono::duration<double>> max_seconds;
    };

    template <typename Block>
    struct SolveOptions
    {
        Budget budget;

        /// Above one, root branches are shared among worker threads. The optimum is the same
        /// as the sequential run; the witness may differ.
        unsigned threads = 1;

        /// A known valid lower bound on the optimum; the search stops once it is met.
        std::size_t lower_bound_hint = 0;

        /// A starting solution. Must exactly partition the host.
        std::optional<std::vector<Block>> incumbent;
    };

    template <typename Block>
    struct SolveResult
    {
        /// Set only when the search completed.
        std::optional<std::size_t> optimum;

        /// Size of the best partition found; equals optimum when resolved.
        std::size_t best_count = 0;
        std::vector<Block> certificate;
        std::uint64_t nodes_explored = 0;
        bool budget_exhausted = false;

        [[nodiscard]] auto resolved() const -> bool { return optimum.has_value(); }
    };

    /// Minimum number of bicliques partitioning E(g). Graphs are limited to 64 vertices.
    [[nodiscard]] auto min_biclique_partition(const Graph & g, const SolveOptions<Biclique> & options = {})
        -> SolveResult<Biclique>;

    /// Minimum number of complete r-partite r-graphs partitioning the host's edges.
    /// Hosts are limited to 64 vertices.
    [[nodiscard]] auto min_multipartite_partition(
        const HypergraphHost & host, const SolveOptions<MultipartiteBlock> & options = {})
        -> SolveResult<MultipartiteBlock>;

    struct ProductSolveOptions : SolveOptions<ProductBlock>
    {
        /// Seed the root lower bound from the closed-form bounds when both factors are complete.
        bool closed_form_root_bound = true;
    };

    /// Minimum number of blocks partitioning E(g) x E(h).
    [[nodiscard]] auto min_product_block_partition(
        const Graph & g, const Graph & h, const ProductSolveOptions & options = {}) -> SolveResult<ProductBlock>;

    /// max(n+, n-) of the adjacency matrix of g; a lower bound on its biclique partition number.
    [[nodiscard]] auto inertia_bound(const Graph & g) -> std::size_t;

    /// A scheme whose witnesses are optimal biclique partitions found by search.
    /// Throws std::runtime_error if any search is unresolved within the budget.
    [[nodiscard]] auto scheme_with_optimal_witnesses(
        std::size_t n, std::array<Graph, 4> parts, const Budget & budget = {}) -> PartitionScheme;
}

#endif
