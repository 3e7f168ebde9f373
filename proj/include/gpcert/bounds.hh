#ifndef GPCERT_BOUNDS_HH
#define GPCERT_BOUNDS_HH 1

#include <gpcert/numeric.hh>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace gpcert
{
    /// An exact bound value together with its integer rounding (ceiling for lower
    /// bounds, the value itself for integral upper bounds).
    struct BoundValue
    {
        Rational exact;
        Integer value;
    };

    [[nodiscard]] auto gp_f2(std::size_t n) -> Integer;
    [[nodiscard]] auto alon_f3(std::size_t n) -> Integer;

    /// binomial(n - ceil(r/2), floor(r/2)).
    [[nodiscard]] auto trivial_upper(std::size_t n, std::size_t r) -> Integer;

    /// 2 binomial(n-1, k) / binomial(2k, k), for f_{2k}(n).
    [[nodiscard]] auto ckv_lower(std::size_t n, std::size_t k) -> BoundValue;

    /// binomial(n-k, k) - 2 floor(n/16) binomial(floor(n/2)-k+3, k-3), for f_{2k}(n); k >= 3.
    [[nodiscard]] auto cioaba_tait_upper(std::size_t n, std::size_t k) -> Integer;

    /// (9(n-1)/5, 2(n-1)) for g(K_3, K_n).
    [[nodiscard]] auto g_k3_bounds(std::size_t n) -> std::pair<BoundValue, BoundValue>;

    /// (12(n-1)/5, 3(n-1)) for g(K_4, K_n).
    [[nodiscard]] auto g_k4_bounds(std::size_t n) -> std::pair<BoundValue, BoundValue>;

    /// ((n-1)^2 + 1) / 2 for g(n).
    [[nodiscard]] auto g_weakproduct_lower(std::size_t n) -> BoundValue;

    enum class Direction
    {
        lower,
        upper
    };

    struct BoundRow
    {
        std::string name;
        Direction direction = Direction::lower;
        BoundValue bound;
        std::string source;
    };

    struct BoundReport
    {
        std::string quantity;
        std::vector<BoundRow> rows;

        [[nodiscard]] auto best_lower() const -> std::optional<Integer>;
        [[nodiscard]] auto best_upper() const -> std::optional<Integer>;

        /// Every lower value is at most every upper value.
        [[nodiscard]] auto consistent() const -> bool;

        [[nodiscard]] auto contains(const Integer & value) const -> bool;

        [[nodiscard]] auto find(const std::string & name) const -> const BoundRow *;
    };

    /// Which quantity a bound table describes.
    struct Quantity
    {
        enum class Kind
        {
            f_r,   // f_r(n)
            g_pair // g(K_left, K_right)
        };

        Kind kind = Kind::f_r;
        std::size_t n = 0, r = 0;
        std::size_t left = 0, right = 0;

        [[nodiscard]] static auto f(std::size_t n, std::size_t r) -> Quantity;
        [[nodiscard]] static auto g(std::size_t left, std::size_t right) -> Quantity;
    };

    /// All applicable closed-form bounds plus the construction counts for one quantity.
    [[nodiscard]] auto bound_table(const Quantity & q) -> BoundReport;

    [[nodiscard]] auto to_string(Direction d) -> std::string;
}

#endif
