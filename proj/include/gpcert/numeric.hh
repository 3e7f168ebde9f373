#ifndef GPCERT_NUMERIC_HH
#define GPCERT_NUMERIC_HH 1

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace gpcert
{
    using Integer = boost::multiprecision::cpp_int;
    using Rational = boost::multiprecision::cpp_rational;

    /// binomial(n, k), zero when k < 0 or k > n or n < 0.
    [[nodiscard]] auto binomial(const Integer & n, const Integer & k) -> Integer;

    [[nodiscard]] auto binomial(std::int64_t n, std::int64_t k) -> Integer;

    [[nodiscard]] auto ceil(const Rational & q) -> Integer;

    [[nodiscard]] auto floor(const Rational & q) -> Integer;
}

#endif
