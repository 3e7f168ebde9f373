#include <gpcert/numeric.hh>

namespace gpcert
{
    auto binomial(const Integer & n, const Integer & k) -> Integer
    {
        if (n < 0 || k < 0 || k > n)
            return 0;
        Integer kk = k > n - k ? Integer(n - k) : k;
        Integer result = 1;
        for (Integer i = 1; i <= kk; ++i)
            result = result * (n - kk + i) / i;
        return result;
    }

    auto binomial(std::int64_t n, std::int64_t k) -> Integer
    {
        return binomial(Integer(n), Integer(k));
    }

    auto floor(const Rational & q) -> Integer
    {
        Integer num = boost::multiprecision::numerator(q), den = boost::multiprecision::denominator(q);
        Integer quotient = num / den;
        if (num % den != 0 && num < 0)
            --quotient;
        return quotient;
    }

    auto ceil(const Rational & q) -> Integer
    {
        return -floor(-q);
    }
}
