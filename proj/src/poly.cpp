#include "zpm/poly.hpp"

#include <algorithm>

namespace zpm {

namespace {

void require_same_ring(const Poly& f, const Poly& g)
{
    if (!(f.ring() == g.ring()))
        throw Error(Errc::MixedRings, "polynomials live over different rings");
}

} // namespace

Poly::Poly(RingParams ring, std::vector<Coeff> coeffs) : ring_(ring), coeffs_(std::move(coeffs))
{
    for (auto& c : coeffs_)
        c = ring_.reduce(c);
    normalize();
}

Poly Poly::from_signed(RingParams ring, const std::vector<std::int64_t>& coeffs)
{
    std::vector<Coeff> reduced;
    reduced.reserve(coeffs.size());
    for (auto c : coeffs)
        reduced.push_back(ring.reduce_signed(c));
    return Poly(ring, std::move(reduced));
}

Poly Poly::constant(RingParams ring, Coeff c) { return Poly(ring, std::vector<Coeff>{c}); }

Poly Poly::monomial(RingParams ring, Coeff c, std::size_t k)
{
    std::vector<Coeff> coeffs(k + 1, 0);
    coeffs[k] = c;
    return Poly(ring, std::move(coeffs));
}

void Poly::normalize() noexcept
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Coeff Poly::evaluate(Coeff x) const noexcept
{
    Coeff acc = 0;
    x = ring_.reduce(x);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = ring_.add(ring_.mul(acc, x), *it);
    return acc;
}

Poly operator+(const Poly& f, const Poly& g)
{
    require_same_ring(f, g);
    const auto& ring = f.ring();
    std::vector<Coeff> out(std::max(f.coeffs().size(), g.coeffs().size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = ring.add(f.coeff(i), g.coeff(i));
    return Poly(ring, std::move(out));
}

Poly operator-(const Poly& f, const Poly& g)
{
    require_same_ring(f, g);
    const auto& ring = f.ring();
    std::vector<Coeff> out(std::max(f.coeffs().size(), g.coeffs().size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = ring.sub(f.coeff(i), g.coeff(i));
    return Poly(ring, std::move(out));
}

Poly operator-(const Poly& f)
{
    std::vector<Coeff> out(f.coeffs().begin(), f.coeffs().end());
    for (auto& c : out)
        c = f.ring().neg(c);
    return Poly(f.ring(), std::move(out));
}

Poly operator*(const Poly& f, const Poly& g) { return poly_mul(f, g); }

Poly operator*(Coeff c, const Poly& f)
{
    std::vector<Coeff> out(f.coeffs().begin(), f.coeffs().end());
    for (auto& a : out)
        a = f.ring().mul(a, f.ring().reduce(c));
    return Poly(f.ring(), std::move(out));
}

Poly poly_mul(const Poly& f, const Poly& g)
{
    require_same_ring(f, g);
    const auto& ring = f.ring();
    if (f.is_zero() || g.is_zero())
        return Poly(ring);
    auto fc = f.coeffs();
    auto gc = g.coeffs();
    std::vector<Coeff> out(fc.size() + gc.size() - 1, 0);
    for (std::size_t i = 0; i < fc.size(); ++i) {
        if (fc[i] == 0)
            continue;
        for (std::size_t j = 0; j < gc.size(); ++j)
            out[i + j] = ring.add(out[i + j], ring.mul(fc[i], gc[j]));
    }
    return Poly(ring, std::move(out));
}

Poly pow(const Poly& f, unsigned e)
{
    Poly result = Poly::constant(f.ring(), 1);
    Poly base = f;
    while (e > 0) {
        if (e & 1)
            result = result * base;
        e >>= 1;
        if (e > 0)
            base = base * base;
    }
    return result;
}

std::pair<Poly, Poly> poly_divmod(const Poly& f, const Poly& d)
{
    require_same_ring(f, d);
    const auto& ring = f.ring();
    if (d.is_zero() || !ring.is_unit(d.leading()))
        throw Error(Errc::NonUnitLeadingCoefficient,
                    "divisor " + to_text(d) + " does not have a unit leading coefficient");
    const Coeff lead_inv = scalar_inverse(d.leading(), ring);
    const std::size_t dd = *d.degree();
    std::vector<Coeff> rem(f.coeffs().begin(), f.coeffs().end());
    if (rem.size() <= dd)
        return {Poly(ring), f};
    std::vector<Coeff> quot(rem.size() - dd, 0);
    auto dc = d.coeffs();
    for (std::size_t k = rem.size(); k-- > dd;) {
        Coeff c = ring.mul(rem[k], lead_inv);
        quot[k - dd] = c;
        if (c == 0)
            continue;
        for (std::size_t j = 0; j <= dd; ++j)
            rem[k - dd + j] = ring.sub(rem[k - dd + j], ring.mul(c, dc[j]));
    }
    rem.resize(dd);
    return {Poly(ring, std::move(quot)), Poly(ring, std::move(rem))};
}

Poly quotient_reduce(const Poly& f, std::size_t n)
{
    if (n == 0)
        throw Error(Errc::InvalidArgument, "quotient length must be positive");
    const auto& ring = f.ring();
    std::vector<Coeff> out(std::min(n, f.coeffs().size()), 0);
    auto fc = f.coeffs();
    for (std::size_t k = 0; k < fc.size(); ++k)
        out[k % n] = ring.add(out[k % n], fc[k]);
    return Poly(ring, std::move(out));
}

Poly reverse_coefficients(const Poly& f)
{
    std::vector<Coeff> out(f.coeffs().rbegin(), f.coeffs().rend());
    return Poly(f.ring(), std::move(out));
}

Poly reciprocal(const Poly& f)
{
    const Coeff c0 = f.coeff(0);
    if (f.is_zero() || !f.ring().is_unit(c0))
        throw Error(Errc::NotAUnit, "reciprocal needs a unit constant term, got " + to_text(f));
    return scalar_inverse(c0, f.ring()) * reverse_coefficients(f);
}

Poly reduce_mod_p(const Poly& f) { return with_ring(f, f.ring().with_length(1)); }

Poly with_ring(const Poly& f, const RingParams& ring)
{
    return Poly(ring, std::vector<Coeff>(f.coeffs().begin(), f.coeffs().end()));
}

Poly cyclic_modulus(const RingParams& ring, std::size_t n)
{
    std::vector<Coeff> coeffs(n + 1, 0);
    coeffs[0] = ring.neg(1 % ring.modulus());
    coeffs[n] = ring.add(coeffs[n], 1);
    return Poly(ring, std::move(coeffs));
}

std::string to_text(const Poly& f)
{
    if (f.is_zero())
        return "0";
    std::string out;
    auto fc = f.coeffs();
    for (std::size_t k = fc.size(); k-- > 0;) {
        if (fc[k] == 0)
            continue;
        if (!out.empty())
            out += '+';
        if (fc[k] != 1 || k == 0)
            out += std::to_string(fc[k]);
        if (k == 1)
            out += 'x';
        else if (k > 1)
            out += "x^" + std::to_string(k);
    }
    return out;
}

std::string to_json_text(const Poly& f)
{
    std::string out = "[";
    bool first = true;
    for (auto c : f.coeffs()) {
        if (!first)
            out += ',';
        out += std::to_string(c);
        first = false;
    }
    return out + "]";
}

bool coeff_less(const Poly& a, const Poly& b) noexcept
{
    return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(),
                                        b.coeffs().end());
}

} // namespace zpm
