#include "hexprob/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace hexprob {

Int binomial(const Int& m, long k)
{
    if (k < 0)
        return 0;
    // mpz_bin_ui computes the falling-factorial form and supports negative m
    // via bin(-m, k) = (-1)^k bin(m+k-1, k), which is the same convention.
    Int result;
    mpz_bin_ui(result.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(k));
    return result;
}

Rat pochhammer(const Rat& q, long k)
{
    if (k < 0)
        throw std::invalid_argument("pochhammer: negative index");
    Rat result = 1;
    Rat factor = q;
    for (long step = 0; step < k; ++step, factor += 1)
        result *= factor;
    return result;
}

Int pochhammer_int(const Int& q, long k)
{
    if (k < 0)
        throw std::invalid_argument("pochhammer_int: negative index");
    Int result = 1;
    Int factor = q;
    for (long step = 0; step < k; ++step, factor += 1)
        result *= factor;
    return result;
}

Int factorial(long m)
{
    if (m < 0)
        throw std::invalid_argument("factorial: negative argument");
    Int result;
    mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(m));
    return result;
}

Rat make_rational(const Int& num, const Int& den)
{
    if (den == 0)
        throw std::invalid_argument("make_rational: zero denominator");
    Rat result(num, den);
    result.canonicalize();
    return result;
}

std::string to_string(const Rat& value)
{
    return value.get_str();
}

std::string to_string(const Int& value)
{
    return value.get_str();
}

Rat parse_rational(std::string_view text)
{
    // Grammar: '-'? digits ('/' digits)?
    const auto fail = [&] {
        throw std::invalid_argument("parse_rational: malformed rational '" + std::string(text) + "'");
    };
    std::size_t pos = 0;
    const auto digits = [&] {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start)
            fail();
        return std::string(text.substr(start, pos - start));
    };

    bool negative = false;
    if (pos < text.size() && text[pos] == '-') {
        negative = true;
        ++pos;
    }
    const std::string num_digits = digits();
    std::string den_digits = "1";
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den_digits = digits();
    }
    if (pos != text.size())
        fail();

    Int num(num_digits);
    if (negative)
        num = -num;
    const Int den(den_digits);
    if (den == 0)
        throw std::invalid_argument("parse_rational: zero denominator");
    return make_rational(num, den);
}

} // namespace hexprob
