#include "zpm/field_poly.hpp"

#include <vector>

namespace zpm {

namespace {

void require_field(const Poly& f)
{
    if (f.ring().m() != 1)
        throw Error(Errc::InvalidArgument, "operation requires coefficients in a prime field");
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t v)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            out.push_back(d);
            while (v % d == 0)
                v /= d;
        }
    }
    if (v > 1)
        out.push_back(v);
    return out;
}

} // namespace

Poly make_monic(const Poly& f)
{
    if (f.is_zero())
        return f;
    return scalar_inverse(f.leading(), f.ring()) * f;
}

Poly field_gcd(const Poly& a, const Poly& b)
{
    require_field(a);
    Poly x = a;
    Poly y = b;
    while (!y.is_zero()) {
        Poly r = poly_divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return make_monic(x);
}

ExtendedGcd field_extended_gcd(const Poly& a, const Poly& b)
{
    require_field(a);
    const auto& ring = a.ring();
    Poly old_r = a, r = b;
    Poly old_s = Poly::constant(ring, 1), s(ring);
    Poly old_t(ring), t = Poly::constant(ring, 1);
    while (!r.is_zero()) {
        auto [quot, rem] = poly_divmod(old_r, r);
        old_r = std::exchange(r, rem);
        old_s = std::exchange(s, old_s - quot * s);
        old_t = std::exchange(t, old_t - quot * t);
    }
    if (old_r.is_zero())
        return {old_r, old_s, old_t};
    const Coeff inv = scalar_inverse(old_r.leading(), ring);
    return {inv * old_r, inv * old_s, inv * old_t};
}

Poly powmod(const Poly& base, const Natural& e, const Poly& modulus)
{
    const auto& ring = base.ring();
    Poly result = poly_divmod(Poly::constant(ring, 1), modulus).second;
    if (e == 0)
        return result;
    Poly b = poly_divmod(base, modulus).second;
    const std::size_t bits = boost::multiprecision::msb(e) + 1;
    for (std::size_t i = bits; i-- > 0;) {
        result = poly_divmod(result * result, modulus).second;
        if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i)))
            result = poly_divmod(result * b, modulus).second;
    }
    return result;
}

bool is_irreducible(const Poly& f)
{
    require_field(f);
    if (f.is_zero() || *f.degree() == 0)
        return false;
    const std::size_t d = *f.degree();
    if (d == 1)
        return true;
    const auto& ring = f.ring();
    const Poly g = make_monic(f);
    const Poly x = Poly::monomial(ring, 1, 1);
    const Natural p = ring.p();

    // frob[k] = x^{p^k} mod g
    std::vector<Poly> frob{poly_divmod(x, g).second};
    for (std::size_t k = 1; k <= d; ++k)
        frob.push_back(powmod(frob.back(), p, g));

    if (!(frob[d] == poly_divmod(x, g).second))
        return false;
    for (auto r : prime_divisors(d)) {
        const Poly h = frob[d / r] - x;
        if (field_gcd(g, h).degree() != std::size_t{0})
            return false;
    }
    return true;
}

} // namespace zpm
