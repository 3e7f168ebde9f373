#include <gpcert/bounds.hh>
#include <gpcert/construct.hh>
#include <gpcert/exact.hh>

#include <doctest.h>

using namespace gpcert;
using std::size_t;

TEST_CASE("closed forms")
{
    CHECK(gp_f2(2) == 1);
    CHECK(gp_f2(5) == 4);
    CHECK(gp_f2(10) == 9);
    CHECK(alon_f3(3) == 1);
    CHECK(alon_f3(5) == 3);
    CHECK(alon_f3(8) == 6);

    CHECK(trivial_upper(6, 4) == 6);
    CHECK(trivial_upper(7, 4) == 10);
    for (size_t r = 1; r <= 10; ++r)
        CHECK(trivial_upper(r, r) == 1);

    CHECK(ckv_lower(8, 3).value == 4);
    CHECK(ckv_lower(8, 3).exact == Rational(7, 2));
    CHECK(ckv_lower(5, 2).value == 2);
    for (size_t k = 1; k <= 6; ++k)
        CHECK(ckv_lower(2 * k, k).value == 1);

    CHECK(cioaba_tait_upper(16, 3) == 284);
    CHECK(cioaba_tait_upper(8, 3) == 10);
    CHECK_THROWS_AS((void) cioaba_tait_upper(8, 2), InvalidArguments);
}

TEST_CASE("product bounds")
{
    auto pair = [](std::pair<BoundValue, BoundValue> p) { return std::pair{p.first.value, p.second.value}; };
    CHECK(pair(g_k3_bounds(2)) == std::pair{Integer(2), Integer(2)});
    CHECK(pair(g_k3_bounds(3)) == std::pair{Integer(4), Integer(4)});
    CHECK(pair(g_k3_bounds(6)) == std::pair{Integer(9), Integer(10)});
    CHECK(g_k3_bounds(6).first.exact == Rational(9));
    CHECK(pair(g_k4_bounds(6)) == std::pair{Integer(12), Integer(15)});
    CHECK(pair(g_k4_bounds(2)) == std::pair{Integer(3), Integer(3)});
    CHECK(pair(g_k4_bounds(11)) == std::pair{Integer(24), Integer(30)});
    CHECK(g_weakproduct_lower(3).value == 3);
    CHECK(g_weakproduct_lower(6).value == 13);
    CHECK(g_weakproduct_lower(2).value == 1);
}

TEST_CASE("bound tables")
{
    auto f4 = bound_table(Quantity::f(32, 4));
    REQUIRE(f4.find("ckv"));
    CHECK(f4.find("ckv")->bound.value == 155);
    CHECK(f4.find("trivial")->bound.value == 435);
    CHECK(f4.find("recursive")->bound.value == 420);
    CHECK(f4.best_upper() == Integer(420));

    auto g46 = bound_table(Quantity::g(4, 6));
    CHECK(g46.best_lower() == Integer(12));
    CHECK(g46.best_upper() == Integer(14));
    CHECK(g46.find("k4-scheme")->bound.value == 15);

    auto f2 = bound_table(Quantity::f(7, 2));
    CHECK(f2.best_lower() == Integer(6));
    CHECK(f2.best_upper() == Integer(6));

    auto f6 = bound_table(Quantity::f(8, 6));
    CHECK(f6.find("ckv")->bound.value == 4);
    CHECK(f6.consistent());
}

TEST_CASE("tables are consistent")
{
    for (size_t n = 2; n <= 40; ++n)
        for (size_t r = 2; r <= std::min<size_t>(n, 10); ++r)
            REQUIRE(bound_table(Quantity::f(n, r)).consistent());
    for (size_t a = 2; a <= 20; ++a)
        for (size_t b = 2; b <= 20; ++b)
            REQUIRE(bound_table(Quantity::g(a, b)).consistent());
}

TEST_CASE("trivial upper bound is nondecreasing in n")
{
    for (size_t r = 1; r <= 10; ++r)
        for (size_t n = r; n < 40; ++n)
            REQUIRE(trivial_upper(n, r) <= trivial_upper(n + 1, r));
}

TEST_CASE("exact solver values lie inside the tables")
{
    for (size_t n = 2; n <= 12; ++n) {
        auto r = min_biclique_partition(Graph::complete(n));
        REQUIRE(r.resolved());
        REQUIRE(bound_table(Quantity::f(n, 2)).contains(Integer(*r.optimum)));
    }
    for (size_t n = 3; n <= 9; ++n) {
        auto r = min_multipartite_partition(HypergraphHost::complete(n, 3));
        REQUIRE(r.resolved());
        REQUIRE(bound_table(Quantity::f(n, 3)).contains(Integer(*r.optimum)));
    }
    for (size_t n = 4; n <= 6; ++n) {
        auto r = min_multipartite_partition(HypergraphHost::complete(n, 4));
        REQUIRE(r.resolved());
        REQUIRE(bound_table(Quantity::f(n, 4)).contains(Integer(*r.optimum)));
    }
    for (size_t a = 2; a <= 3; ++a)
        for (size_t b = a; b <= 4; ++b) {
            auto r = min_product_block_partition(Graph::complete(a), Graph::complete(b));
            REQUIRE(r.resolved());
            REQUIRE(bound_table(Quantity::g(a, b)).contains(Integer(*r.optimum)));
        }
}
