#include "zpm/ring.hpp"

#include <limits>

namespace zpm {

const char* to_string(Errc code) noexcept
{
    switch (code) {
    case Errc::NotAUnit: return "NotAUnit";
    case Errc::MixedRings: return "MixedRings";
    case Errc::NonUnitLeadingCoefficient: return "NonUnitLeadingCoefficient";
    case Errc::NotPrime: return "NotPrime";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NonCoprime: return "NonCoprime";
    case Errc::EvenLength: return "EvenLength";
    case Errc::WrongModulusKind: return "WrongModulusKind";
    case Errc::NotSelfDual: return "NotSelfDual";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::ZeroCode: return "ZeroCode";
    case Errc::LengthMismatch: return "LengthMismatch";
    }
    return "Unknown";
}

bool is_prime(std::uint64_t v) noexcept
{
    if (v < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0)
            return false;
    return true;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept
{
    while (b != 0) {
        std::uint64_t r = a % b;
        a = b;
        b = r;
    }
    return a;
}

Natural natural_pow(std::uint64_t base, std::uint64_t exp)
{
    Natural result = 1;
    Natural b = base;
    while (exp > 0) {
        if (exp & 1)
            result *= b;
        b *= b;
        exp >>= 1;
    }
    return result;
}

RingParams::RingParams(std::uint64_t p, unsigned m) : p_(p), m_(m), q_(1)
{
    if (!is_prime(p))
        throw Error(Errc::NotPrime, "p must be prime (got " + std::to_string(p) + ")");
    if (m < 1)
        throw Error(Errc::InvalidArgument, "m must be at least 1");
    constexpr std::uint64_t limit = std::uint64_t{1} << 62;
    for (unsigned i = 0; i < m; ++i) {
        if (q_ > limit / p)
            throw Error(Errc::InvalidArgument, "p^m exceeds the supported coefficient width");
        q_ *= p;
    }
}

Coeff RingParams::reduce_signed(std::int64_t a) const noexcept
{
    auto q = static_cast<std::int64_t>(q_);
    std::int64_t r = a % q;
    return static_cast<Coeff>(r < 0 ? r + q : r);
}

Coeff RingParams::pow(Coeff a, std::uint64_t e) const noexcept
{
    Coeff result = 1 % q_;
    Coeff b = a % q_;
    while (e > 0) {
        if (e & 1)
            result = mul(result, b);
        b = mul(b, b);
        e >>= 1;
    }
    return result;
}

unsigned RingParams::valuation(Coeff a) const noexcept
{
    if (a % q_ == 0)
        return m_;
    unsigned v = 0;
    while (a % p_ == 0) {
        a /= p_;
        ++v;
    }
    return v;
}

Coeff RingParams::p_power(unsigned k) const noexcept
{
    if (k >= m_)
        return 0;
    Coeff r = 1;
    for (unsigned i = 0; i < k; ++i)
        r *= p_;
    return r;
}

Coeff scalar_inverse(Coeff a, const RingParams& ring)
{
    a = ring.reduce(a);
    if (!ring.is_unit(a))
        throw Error(Errc::NotAUnit, std::to_string(a) + " is not a unit modulo " +
                                        std::to_string(ring.modulus()));
    // extended Euclid on (a, q)
    __int128 old_r = a, r = ring.modulus();
    __int128 old_s = 1, s = 0;
    while (r != 0) {
        __int128 quot = old_r / r;
        __int128 tmp = old_r - quot * r;
        old_r = r;
        r = tmp;
        tmp = old_s - quot * s;
        old_s = s;
        s = tmp;
    }
    auto q = static_cast<__int128>(ring.modulus());
    __int128 inv = old_s % q;
    if (inv < 0)
        inv += q;
    return static_cast<Coeff>(inv);
}

std::string to_string(const Natural& v) { return v.str(); }

} // namespace zpm
