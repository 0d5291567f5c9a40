#include "doctest.h"
#include "oracles.hpp"
#include "zpm/factorization.hpp"
#include "zpm/field_poly.hpp"

#include <numeric>

using namespace zpm;

namespace {

template <typename F>
void expect_errc(Errc code, F&& f)
{
    try {
        f();
        FAIL("expected " << to_string(code));
    } catch (const Error& e) {
        CHECK(e.code() == code);
    }
}

Poly product(const std::vector<Poly>& fs, const RingParams& ring)
{
    Poly acc = Poly::constant(ring, 1);
    for (const auto& f : fs)
        acc = acc * f;
    return acc;
}

} // namespace

TEST_CASE("validate_length")
{
    CHECK_NOTHROW(validate_length(2, 7));
    CHECK_NOTHROW(validate_length(3, 1));
    expect_errc(Errc::NotPrime, [] { validate_length(4, 7); });
    expect_errc(Errc::EvenLength, [] { validate_length(3, 8); });
    expect_errc(Errc::NonCoprime, [] { validate_length(3, 9); });
    expect_errc(Errc::InvalidArgument, [] { validate_length(2, 0); });
}

TEST_CASE("gamma_delta examples")
{
    CHECK(gamma_delta(2, 7) == GammaDelta{1, 1});
    CHECK(gamma_delta(2, 15) == GammaDelta{3, 1});
    CHECK(gamma_delta(3, 13) == GammaDelta{1, 2});
    CHECK(gamma_delta(2, 27).gamma == 4);
    CHECK(gamma_delta(2, 27).delta == 0);
}

TEST_CASE("cosets match a naive orbit computation for every odd n up to 99")
{
    for (std::uint64_t p : {2, 3, 5, 7}) {
        for (std::size_t n = 1; n <= 99; n += 2) {
            if (std::gcd<std::uint64_t>(p, n) != 1)
                continue;
            CAPTURE(p);
            CAPTURE(n);
            const auto naive = oracle::naive_cosets(p, n);
            const auto part = cyclotomic_cosets(p, n);
            CHECK(part.cosets.size() == naive.total);
            CHECK(part.gamma() == naive.self_paired);
            CHECK(part.delta() == naive.pairs);
            CHECK(part.cosets.size() == oracle::factor_count(p, n));
            // pairing is an involution and sends a coset to its negation
            for (std::size_t k = 0; k < part.cosets.size(); ++k) {
                CHECK(part.pairing[part.pairing[k]] == k);
                const std::size_t i = part.cosets[k].front();
                CHECK(part.coset_of((n - i) % n) == part.pairing[k]);
            }
            CHECK(multiplicative_order(p, n) == oracle::order_mod(p, n));
        }
    }
}

TEST_CASE("factor_mod_p examples")
{
    const auto f7 = factor_mod_p(2, 7);
    REQUIRE(f7.size() == 3);
    CHECK(to_text(f7[0]) == "x+1");
    // ascending coefficient order: [1,0,1,1] sorts before [1,1,0,1]
    CHECK(to_text(f7[1]) == "x^3+x^2+1");
    CHECK(to_text(f7[2]) == "x^3+x+1");

    const auto f1 = factor_mod_p(5, 1);
    REQUIRE(f1.size() == 1);
    CHECK(to_text(f1[0]) == "x+4");
}

TEST_CASE("factor_mod_p is a complete factorization into irreducibles")
{
    for (std::uint64_t p : {2, 3, 5}) {
        for (std::size_t n = 1; n <= 45; n += 2) {
            if (n % p == 0)
                continue;
            CAPTURE(p);
            CAPTURE(n);
            const RingParams fp(p, 1);
            const auto fs = factor_mod_p(p, n);
            CHECK(fs.size() == oracle::factor_count(p, n));
            CHECK(product(fs, fp) == cyclic_modulus(fp, n));
            for (const auto& f : fs) {
                CHECK(f.is_monic());
                CHECK(is_irreducible(f));
                if (*f.degree() <= 8) {
                    const auto& c = f.coeff_vector();
                    CHECK(oracle::brute_irreducible({c.begin(), c.end()}, p));
                }
            }
        }
    }
}

TEST_CASE("is_irreducible agrees with trial division on every small monic polynomial")
{
    for (std::uint64_t p : {2, 3}) {
        const RingParams fp(p, 1);
        for (std::size_t deg = 1; deg <= (p == 2 ? 8u : 5u); ++deg) {
            std::uint64_t count = 1;
            for (std::size_t i = 0; i < deg; ++i)
                count *= p;
            for (std::uint64_t idx = 0; idx < count; ++idx) {
                std::vector<std::uint64_t> c(deg + 1, 0);
                std::uint64_t v = idx;
                for (std::size_t i = 0; i < deg; ++i) {
                    c[i] = v % p;
                    v /= p;
                }
                c[deg] = 1;
                const Poly f(fp, std::vector<Coeff>(c.begin(), c.end()));
                CAPTURE(to_text(f));
                CHECK(is_irreducible(f) == oracle::brute_irreducible(c, p));
            }
        }
    }
}

TEST_CASE("field gcd")
{
    const RingParams f2(2, 1);
    const Poly a = Poly::from_signed(f2, {1, 1, 0, 1});
    const Poly b = Poly::from_signed(f2, {1, 0, 1, 1});
    CHECK(field_gcd(a * b, a) == a);
    CHECK(field_gcd(a, b) == Poly::constant(f2, 1));
    const auto eg = field_extended_gcd(a, b);
    CHECK(eg.s * a + eg.t * b == eg.gcd);
}

TEST_CASE("hensel_lift examples")
{
    const auto shifted = hensel_lift(2, 3, 7, ModulusKind::Shifted);
    REQUIRE(shifted.factors.size() == 3);
    CHECK(to_text(shifted.factors[0]) == "x+1");
    CHECK(to_text(shifted.factors[1]) == "x^3+5x^2+2x+1");
    CHECK(to_text(shifted.factors[2]) == "x^3+2x^2+5x+1");
    CHECK(shifted.gamma == 1);
    CHECK(shifted.delta == 1);
    CHECK(shifted.pairing == std::vector<std::size_t>{0, 2, 1});

    const auto m1 = hensel_lift(2, 1, 7, ModulusKind::Standard);
    CHECK(m1.factors == factor_mod_p(2, 7));

    const auto standard = hensel_lift(2, 3, 7, ModulusKind::Standard);
    CHECK(to_text(standard.factors[0]) == "x+7");
    CHECK(product(standard.factors, standard.ring) == cyclic_modulus(standard.ring, 7));

    expect_errc(Errc::NotPrime, [] { hensel_lift(4, 3, 7, ModulusKind::Standard); });
    expect_errc(Errc::EvenLength, [] { hensel_lift(3, 2, 4, ModulusKind::Standard); });
}

TEST_CASE("hensel_lift invariants")
{
    struct Cfg {
        std::uint64_t p;
        unsigned m;
        std::size_t n;
    };
    for (Cfg c : {Cfg{2, 3, 7}, Cfg{2, 4, 15}, Cfg{3, 2, 13}, Cfg{5, 3, 3}, Cfg{2, 5, 31},
                  Cfg{3, 3, 11}, Cfg{2, 2, 21}, Cfg{7, 2, 9}}) {
        for (auto kind : {ModulusKind::Standard, ModulusKind::Shifted}) {
            CAPTURE(c.p);
            CAPTURE(c.m);
            CAPTURE(c.n);
            const auto basis = hensel_lift(c.p, c.m, c.n, kind);
            const auto mod_p = factor_mod_p(c.p, c.n);
            REQUIRE(basis.factors.size() == mod_p.size());
            CHECK(product(basis.factors, basis.ring) == basis.modulus());
            for (std::size_t k = 0; k < basis.size(); ++k) {
                CHECK(basis.factors[k].is_monic());
                CHECK(reduce_mod_p(basis.factors[k]) == mod_p[k]);
                // the reciprocal of a factor reduces to its partner's reduction
                CHECK(reduce_mod_p(reciprocal(basis.factors[k])) == mod_p[basis.pairing[k]]);
            }
            const auto gd = gamma_delta(c.p, c.n);
            CHECK(basis.gamma == gd.gamma);
            CHECK(basis.delta == gd.delta);
            CHECK(basis.gamma + 2 * basis.delta == basis.size());
        }
    }
}

TEST_CASE("shifted modulus for p = 2 is x^n + 1")
{
    const RingParams z8(2, 3);
    CHECK(to_text(modulus_polynomial(z8, 7, ModulusKind::Shifted)) == "x^7+1");
    CHECK(to_text(modulus_polynomial(z8, 7, ModulusKind::Standard)) == "x^7+7");
    const RingParams z9(3, 2);
    CHECK(to_text(modulus_polynomial(z9, 5, ModulusKind::Shifted)) == "x^5+2");
}
