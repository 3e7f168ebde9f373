#ifndef GPCERT_VERIFY_HH
#define GPCERT_VERIFY_HH 1

#include <gpcert/certificate.hh>
#include <gpcert/numeric.hh>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace gpcert
{
    /// Hosts with more elements than this are verified by sorting block incidences
    /// rather than by a dense counter array.
    inline constexpr std::uint64_t dense_multiplicity_limit = 1'000'000;

    struct VerifyOptions
    {
        std::uint64_t dense_limit = dense_multiplicity_limit;
    };

    /// Per-element cover counts for a family of blocks against a host.
    ///
    /// In dense mode, counts lists every host element. In streaming mode only the
    /// elements whose count differs from 1 are listed, and any host element that is
    /// absent has count 1. Block elements that are not host elements go to outside_host.
    template <typename Element>
    struct MultiplicityReport
    {
        std::vector<std::pair<Element, std::uint32_t>> counts;
        bool dense = true;
        std::uint64_t host_size = 0;
        std::vector<Element> outside_host;

        bool is_exact_partition = false;
        bool is_odd_cover = false;
        bool is_uniform_cover = false;
        std::optional<std::uint32_t> uniform_value;

        [[nodiscard]] auto multiplicity(const Element & e) const -> std::uint32_t
        {
            auto it = std::lower_bound(counts.begin(), counts.end(), e,
                [](const auto & entry, const Element & key) { return entry.first < key; });
            if (it != counts.end() && it->first == e)
                return it->second;
            return dense ? 0 : 1;
        }

        /// Elements with count other than one, in element order.
        [[nodiscard]] auto anomalies() const -> std::vector<std::pair<Element, std::uint32_t>>
        {
            std::vector<std::pair<Element, std::uint32_t>> result;
            for (auto & entry : counts)
                if (entry.second != 1)
                    result.push_back(entry);
            return result;
        }

        /// Sum of counts over host elements.
        [[nodiscard]] auto incidences() const -> std::uint64_t
        {
            std::uint64_t total = dense ? 0 : host_size - counts.size();
            for (auto & entry : counts)
                total += entry.second;
            return total;
        }

        /// Recomputes the summary flags from counts and outside_host; also sorts counts.
        auto summarize() -> void
        {
            std::sort(counts.begin(), counts.end());
            bool all_one = true, all_odd = true;
            std::optional<std::uint32_t> common;
            bool uniform = true;
            for (auto & [_, c] : counts) {
                all_one = all_one && c == 1;
                all_odd = all_odd && c % 2 == 1;
                if (! common)
                    common = c;
                else if (*common != c)
                    uniform = false;
            }
            if (! dense && counts.size() < host_size) {
                if (common && *common != 1)
                    uniform = false;
                common = 1;
            }
            bool inside = outside_host.empty();
            is_exact_partition = inside && all_one;
            is_odd_cover = inside && all_odd;
            is_uniform_cover = inside && uniform;
            uniform_value = is_uniform_cover ? common.value_or(0) : std::optional<std::uint32_t>{};
        }
    };

    /// Cover counts of every edge of an r-uniform host by the certificate's blocks.
    /// Throws StructuralError naming the block if a block has the wrong rank, a malformed
    /// class, or a vertex outside the host.
    [[nodiscard]] auto verify_partition(const HypergraphCertificate & cert, const VerifyOptions & options = {})
        -> MultiplicityReport<Hyperedge>;

    /// Cover counts of every pair in E(left) x E(right).
    [[nodiscard]] auto verify_product_partition(const ProductCertificate & cert, const VerifyOptions & options = {})
        -> MultiplicityReport<EdgePair>;

    /// Cover counts of every host edge by a family of bicliques. A biclique edge missing
    /// from the host is a StructuralError.
    [[nodiscard]] auto cover_multiplicities(const Graph & host, std::span<const Biclique> bicliques)
        -> MultiplicityReport<Edge>;

    /// Whether the family exactly partitions the edges of g.
    [[nodiscard]] auto is_biclique_partition(const Graph & g, std::span<const Biclique> bicliques) -> bool;

    struct WeightedGraph
    {
        Graph graph;
        Rational weight;
    };

    using WeightedGraphList = std::vector<WeightedGraph>;

    /// True iff every host edge has weights summing to exactly 1 over the entries
    /// that contain it.
    [[nodiscard]] auto verify_weighted_decomposition(const Graph & host, const WeightedGraphList & list) -> bool;

    /// Checks a certificate against the property it claims; used by the CLI.
    struct Verdict
    {
        bool ok = false;
        std::uint64_t host_size = 0;
        std::size_t blocks = 0;
        std::vector<std::string> violations;
    };

    [[nodiscard]] auto check(const Certificate & cert, std::size_t max_violations = 10) -> Verdict;
}

#endif
