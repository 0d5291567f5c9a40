#include "zpm/factorization.hpp"

#include "extension_field.hpp"
#include "zpm/field_poly.hpp"

#include <algorithm>
#include <numeric>

namespace zpm {

const char* to_string(ModulusKind kind) noexcept
{
    return kind == ModulusKind::Standard ? "standard" : "shifted";
}

std::size_t CosetPartition::gamma() const noexcept
{
    std::size_t g = 0;
    for (std::size_t k = 0; k < pairing.size(); ++k)
        g += pairing[k] == k;
    return g;
}

std::size_t CosetPartition::delta() const noexcept { return (cosets.size() - gamma()) / 2; }

std::size_t CosetPartition::coset_of(std::size_t i) const
{
    for (std::size_t k = 0; k < cosets.size(); ++k)
        if (std::binary_search(cosets[k].begin(), cosets[k].end(), i % n))
            return k;
    throw Error(Errc::InvalidArgument, "index outside the coset partition");
}

void validate_length(std::uint64_t p, std::size_t n)
{
    if (!is_prime(p))
        throw Error(Errc::NotPrime, "p must be prime (got " + std::to_string(p) + ")");
    if (n == 0)
        throw Error(Errc::InvalidArgument, "length must be positive");
    if (n % 2 == 0)
        throw Error(Errc::EvenLength, "length must be odd (got " + std::to_string(n) + ")");
    if (gcd(p, n) != 1)
        throw Error(Errc::NonCoprime, "length " + std::to_string(n) + " is not coprime to p = " +
                                          std::to_string(p));
}

CosetPartition cyclotomic_cosets(std::uint64_t p, std::size_t n)
{
    validate_length(p, n);
    CosetPartition part;
    part.p = p;
    part.n = n;
    std::vector<std::size_t> owner(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (owner[i] != n)
            continue;
        std::vector<std::size_t> coset;
        std::size_t j = i;
        do {
            owner[j] = part.cosets.size();
            coset.push_back(j);
            j = static_cast<std::size_t>((static_cast<std::uint64_t>(j) * (p % n)) % n);
        } while (j != i);
        std::sort(coset.begin(), coset.end());
        part.cosets.push_back(std::move(coset));
    }
    part.pairing.resize(part.cosets.size());
    for (std::size_t k = 0; k < part.cosets.size(); ++k)
        part.pairing[k] = owner[(n - part.cosets[k].front()) % n];
    return part;
}

GammaDelta gamma_delta(std::uint64_t p, std::size_t n)
{
    const auto part = cyclotomic_cosets(p, n);
    return {part.gamma(), part.delta()};
}

std::size_t multiplicative_order(std::uint64_t p, std::size_t n)
{
    if (n == 1)
        return 1;
    if (gcd(p, n) != 1)
        throw Error(Errc::NonCoprime, "p is not invertible modulo n");
    std::uint64_t v = p % n;
    std::size_t k = 1;
    while (v != 1) {
        v = (v * (p % n)) % n;
        ++k;
    }
    return k;
}

namespace {

struct CanonicalSeeds {
    std::vector<Poly> factors;
    std::vector<std::size_t> pairing;
    std::size_t gamma = 0;
    std::size_t delta = 0;
};

bool canonical_less(const Poly& a, const Poly& b)
{
    if (a.coeffs().size() != b.coeffs().size())
        return a.coeffs().size() < b.coeffs().size();
    return coeff_less(a, b);
}

/// Minimal polynomial of each coset, computed from an n-th root of unity.
std::vector<Poly> coset_polynomials(const CosetPartition& part)
{
    const RingParams field(part.p, 1);
    const detail::ExtensionField ext(part.p, multiplicative_order(part.p, part.n));
    const Poly root = ext.root_of_unity(part.n);

    std::vector<Poly> powers{ext.one()};
    for (std::size_t i = 1; i < part.n; ++i)
        powers.push_back(ext.mul(powers.back(), root));

    const RingParams& base = ext.modulus().ring();
    std::vector<Poly> out;
    for (const auto& coset : part.cosets) {
        // coefficients of prod (X - root^j), each an extension-field element
        std::vector<Poly> acc{ext.one()};
        for (auto j : coset) {
            const Poly neg_root = -powers[j];
            std::vector<Poly> next(acc.size() + 1, Poly(base));
            for (std::size_t i = 0; i < acc.size(); ++i) {
                next[i + 1] = next[i + 1] + acc[i];
                next[i] = next[i] + ext.mul(neg_root, acc[i]);
            }
            acc = std::move(next);
        }
        std::vector<Coeff> coeffs;
        for (const auto& c : acc) {
            if (c.degree().value_or(0) != 0)
                throw Error(Errc::InvalidArgument, "minimal polynomial left the prime field");
            coeffs.push_back(c.coeff(0));
        }
        out.emplace_back(field, std::move(coeffs));
    }
    return out;
}

CanonicalSeeds canonical_seeds(std::uint64_t p, std::size_t n)
{
    const auto part = cyclotomic_cosets(p, n);
    const auto polys = coset_polynomials(part);

    std::vector<std::size_t> selfs;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t k = 0; k < polys.size(); ++k) {
        const std::size_t partner = part.pairing[k];
        if (partner == k) {
            selfs.push_back(k);
        } else if (k < partner) {
            if (canonical_less(polys[partner], polys[k]))
                pairs.emplace_back(partner, k);
            else
                pairs.emplace_back(k, partner);
        }
    }
    std::sort(selfs.begin(), selfs.end(),
              [&](auto a, auto b) { return canonical_less(polys[a], polys[b]); });
    std::sort(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
        return canonical_less(polys[a.first], polys[b.first]);
    });

    CanonicalSeeds out;
    out.gamma = selfs.size();
    out.delta = pairs.size();
    for (auto k : selfs) {
        out.pairing.push_back(out.factors.size());
        out.factors.push_back(polys[k]);
    }
    for (const auto& [a, b] : pairs) {
        const std::size_t idx = out.factors.size();
        out.factors.push_back(polys[a]);
        out.factors.push_back(polys[b]);
        out.pairing.push_back(idx + 1);
        out.pairing.push_back(idx);
    }
    return out;
}

Poly product(const std::vector<Poly>& factors, std::size_t first, std::size_t last,
             const RingParams& ring)
{
    Poly acc = Poly::constant(ring, 1);
    for (std::size_t i = first; i < last; ++i)
        acc = acc * with_ring(factors[i], ring);
    return acc;
}

/// Quadratic lifting of target = g*h (mod p) to target = g*h (mod p^m).
/// g, h monic; s*g + t*h = 1 (mod p).
std::pair<Poly, Poly> lift_pair(const Poly& target, Poly g, Poly h, Poly s, Poly t, unsigned m)
{
    unsigned k = 1;
    while (k < m) {
        const unsigned next = std::min(2 * k, m);
        const RingParams ring = target.ring().with_length(next);
        const Poly f = with_ring(target, ring);
        g = with_ring(g, ring);
        h = with_ring(h, ring);
        s = with_ring(s, ring);
        t = with_ring(t, ring);
        const Poly one = Poly::constant(ring, 1);

        const Poly e = f - g * h;
        auto [q, r] = poly_divmod(s * e, h);
        const Poly g_new = g + t * e + q * g;
        const Poly h_new = h + r;

        const Poly b = s * g_new + t * h_new - one;
        auto [c, d] = poly_divmod(s * b, h_new);
        s = s - d;
        t = t - t * b - c * g_new;
        g = g_new;
        h = h_new;
        k = next;
    }
    return {with_ring(g, target.ring()), with_ring(h, target.ring())};
}

void lift_tree(const Poly& target, const std::vector<Poly>& seeds, std::size_t first,
               std::size_t last, std::vector<Poly>& out)
{
    const RingParams& ring = target.ring();
    if (last - first == 1) {
        out[first] = target;
        return;
    }
    const std::size_t mid = first + (last - first) / 2;
    const RingParams field = ring.with_length(1);
    const Poly g0 = product(seeds, first, mid, field);
    const Poly h0 = product(seeds, mid, last, field);
    const auto bezout = field_extended_gcd(g0, h0);
    if (bezout.gcd.degree() != std::size_t{0})
        throw Error(Errc::InvalidArgument, "Hensel lifting needs coprime seeds");
    auto [g, h] = lift_pair(target, g0, h0, bezout.s, bezout.t, ring.m());
    lift_tree(g, seeds, first, mid, out);
    lift_tree(h, seeds, mid, last, out);
}

} // namespace

std::vector<Poly> factor_mod_p(std::uint64_t p, std::size_t n)
{
    return canonical_seeds(p, n).factors;
}

Poly modulus_polynomial(const RingParams& ring, std::size_t n, ModulusKind kind)
{
    if (kind == ModulusKind::Standard)
        return cyclic_modulus(ring, n);
    std::vector<Coeff> coeffs(n + 1, 0);
    coeffs[0] = ring.reduce(ring.p() - 1);
    coeffs[n] = 1;
    return Poly(ring, std::move(coeffs));
}

Poly FactorBasis::modulus() const { return modulus_polynomial(ring, n, kind); }

FactorBasis hensel_lift(std::uint64_t p, unsigned m, std::size_t n, ModulusKind kind)
{
    validate_length(p, n);
    const RingParams ring(p, m);
    auto seeds = canonical_seeds(p, n);
    std::vector<Poly> lifted(seeds.factors.size(), Poly(ring));
    lift_tree(modulus_polynomial(ring, n, kind), seeds.factors, 0, seeds.factors.size(), lifted);
    return FactorBasis{ring, n, kind, std::move(lifted), std::move(seeds.pairing), seeds.gamma,
                       seeds.delta};
}

} // namespace zpm
