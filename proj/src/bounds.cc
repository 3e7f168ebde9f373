#include <gpcert/bounds.hh>
#include <gpcert/construct.hh>

#include <algorithm>

using std::size_t;
using std::string;

namespace gpcert
{
    namespace
    {
        auto as_int(size_t v) -> std::int64_t
        {
            return static_cast<std::int64_t>(v);
        }

        auto exact(const Integer & v) -> BoundValue
        {
            return {Rational(v), v};
        }

        auto lower(const Rational & q) -> BoundValue
        {
            return {q, ceil(q)};
        }

        auto require(bool condition, const string & message) -> void
        {
            if (! condition)
                throw InvalidArguments(message);
        }
    }

    auto gp_f2(size_t n) -> Integer
    {
        require(n >= 2, "f_2(n) needs n >= 2");
        return Integer(n - 1);
    }

    auto alon_f3(size_t n) -> Integer
    {
        require(n >= 3, "f_3(n) needs n >= 3");
        return Integer(n - 2);
    }

    auto trivial_upper(size_t n, size_t r) -> Integer
    {
        require(r >= 1 && n >= r, "trivial upper bound needs n >= r >= 1");
        return binomial(as_int(n - (r + 1) / 2), as_int(r / 2));
    }

    auto ckv_lower(size_t n, size_t k) -> BoundValue
    {
        require(k >= 1 && n >= 2 * k, "f_{2k}(n) lower bound needs k >= 1 and n >= 2k");
        return lower(Rational(2 * binomial(as_int(n - 1), as_int(k)), binomial(as_int(2 * k), as_int(k))));
    }

    auto cioaba_tait_upper(size_t n, size_t k) -> Integer
    {
        require(k >= 3, "the Cioaba-Tait bound needs k >= 3");
        require(n >= 2 * k, "f_{2k}(n) upper bound needs n >= 2k");
        return binomial(as_int(n - k), as_int(k))
            - 2 * Integer(n / 16) * binomial(as_int(n / 2) - as_int(k) + 3, as_int(k) - 3);
    }

    auto g_k3_bounds(size_t n) -> std::pair<BoundValue, BoundValue>
    {
        require(n >= 2, "g(K_3, K_n) bounds need n >= 2");
        return {lower(Rational(9 * as_int(n - 1), 5)), exact(Integer(2 * (n - 1)))};
    }

    auto g_k4_bounds(size_t n) -> std::pair<BoundValue, BoundValue>
    {
        require(n >= 2, "g(K_4, K_n) bounds need n >= 2");
        return {lower(Rational(12 * as_int(n - 1), 5)), exact(Integer(3 * (n - 1)))};
    }

    auto g_weakproduct_lower(size_t n) -> BoundValue
    {
        require(n >= 2, "g(n) lower bound needs n >= 2");
        Integer m = n - 1;
        return lower(Rational(m * m + 1, 2));
    }

    auto to_string(Direction d) -> string
    {
        return d == Direction::lower ? "lower" : "upper";
    }

    auto BoundReport::best_lower() const -> std::optional<Integer>
    {
        std::optional<Integer> best;
        for (auto & row : rows)
            if (row.direction == Direction::lower && (! best || row.bound.value > *best))
                best = row.bound.value;
        return best;
    }

    auto BoundReport::best_upper() const -> std::optional<Integer>
    {
        std::optional<Integer> best;
        for (auto & row : rows)
            if (row.direction == Direction::upper && (! best || row.bound.value < *best))
                best = row.bound.value;
        return best;
    }

    auto BoundReport::consistent() const -> bool
    {
        auto lo = best_lower(), hi = best_upper();
        return ! lo || ! hi || *lo <= *hi;
    }

    auto BoundReport::contains(const Integer & value) const -> bool
    {
        auto lo = best_lower(), hi = best_upper();
        return (! lo || *lo <= value) && (! hi || value <= *hi);
    }

    auto BoundReport::find(const string & name) const -> const BoundRow *
    {
        auto it = std::find_if(rows.begin(), rows.end(), [&](const BoundRow & r) { return r.name == name; });
        return it == rows.end() ? nullptr : &*it;
    }

    auto Quantity::f(size_t n, size_t r) -> Quantity
    {
        Quantity q;
        q.kind = Kind::f_r;
        q.n = n;
        q.r = r;
        return q;
    }

    auto Quantity::g(size_t left, size_t right) -> Quantity
    {
        Quantity q;
        q.kind = Kind::g_pair;
        q.left = left;
        q.right = right;
        return q;
    }

    namespace
    {
        auto f_table(size_t n, size_t r) -> BoundReport
        {
            require(r >= 1 && n >= r, "f_r(n) needs n >= r >= 1");
            BoundReport report{"f_" + std::to_string(r) + "(" + std::to_string(n) + ")", {}};
            auto add = [&](string name, Direction d, BoundValue v, string source) {
                report.rows.push_back({std::move(name), d, std::move(v), std::move(source)});
            };

            if (r == 2) {
                add("graham-pollak", Direction::lower, exact(gp_f2(n)), "Graham-Pollak theorem");
                add("graham-pollak", Direction::upper, exact(gp_f2(n)), "stars");
            }
            if (r == 3) {
                add("alon", Direction::lower, exact(alon_f3(n)), "Alon, f_3(n) = n-2");
                add("alon", Direction::upper, exact(alon_f3(n)), "Alon, f_3(n) = n-2");
            }
            add("trivial", Direction::upper, exact(trivial_upper(n, r)), "fixed even positions");
            if (r % 2 == 0 && r >= 4) {
                auto k = r / 2;
                add("ckv", Direction::lower, ckv_lower(n, k), "Cioaba-Kungden-Verstraete");
                if (k >= 3)
                    add("cioaba-tait", Direction::upper, exact(cioaba_tait_upper(n, k)), "Cioaba-Tait");
                if (k == 2)
                    add("recursive", Direction::upper, exact(count_f4_recursive(n)), "halving construction");
                else
                    add("lifted-recursive", Direction::upper, exact(count_lifted_recursive(k, n)),
                        "second-vertex lift of the halving construction");
            }
            return report;
        }

        auto g_table(size_t m1, size_t m2) -> BoundReport
        {
            require(m1 >= 2 && m2 >= 2, "g(K_m1, K_m2) needs m1, m2 >= 2");
            BoundReport report{"g(K_" + std::to_string(m1) + ", K_" + std::to_string(m2) + ")", {}};
            auto add = [&](string name, Direction d, BoundValue v, string source) {
                report.rows.push_back({std::move(name), d, std::move(v), std::move(source)});
            };

            add("star-product", Direction::upper, exact(Integer((m1 - 1) * (m2 - 1))), "products of stars");
            for (auto [k, n] : {std::pair{m1, m2}, std::pair{m2, m1}}) {
                if (k == 3) {
                    auto [lo, hi] = g_k3_bounds(n);
                    add("k3-graham-pollak", Direction::lower, lo, "weighted Graham-Pollak on K_3 x K_n");
                    add("k3-scheme", Direction::upper, hi, "star scheme on K_3 x K_n");
                }
                if (k == 4) {
                    auto [lo, hi] = g_k4_bounds(n);
                    add("k4-graham-pollak", Direction::lower, lo, "weighted Graham-Pollak on K_4 x K_n");
                    add("k4-scheme", Direction::upper, hi, "four-cycle scheme on K_4 x K_n");
                }
                if (m1 == m2)
                    break;
            }
            if (m1 == m2)
                add("weak-product", Direction::lower, g_weakproduct_lower(m1), "doubling into K_n * K_n");
            add("best-g", Direction::upper, exact(Integer(best_g_plan(m1, m2).blocks)),
                "certified blow-up of the 14-block partition");
            return report;
        }
    }

    auto bound_table(const Quantity & q) -> BoundReport
    {
        if (q.kind == Quantity::Kind::f_r)
            return f_table(q.n, q.r);
        return g_table(q.left, q.right);
    }
}
