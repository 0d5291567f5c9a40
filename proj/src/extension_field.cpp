#include "extension_field.hpp"

#include "zpm/field_poly.hpp"

#include <vector>

namespace zpm::detail {

namespace {

std::vector<Coeff> digits(std::uint64_t index, std::uint64_t p, std::size_t count)
{
    std::vector<Coeff> out(count, 0);
    for (std::size_t i = 0; i < count && index > 0; ++i) {
        out[i] = index % p;
        index /= p;
    }
    return out;
}

} // namespace

ExtensionField::ExtensionField(std::uint64_t p, std::size_t degree)
    : base_(p, 1), degree_(degree), modulus_(base_)
{
    if (degree == 0)
        throw Error(Errc::InvalidArgument, "extension degree must be positive");
    for (std::uint64_t index = 0;; ++index) {
        auto coeffs = digits(index, p, degree);
        coeffs.push_back(1);
        Poly candidate(base_, std::move(coeffs));
        if (is_irreducible(candidate)) {
            modulus_ = std::move(candidate);
            return;
        }
    }
}

Natural ExtensionField::order() const { return natural_pow(base_.p(), degree_); }

Poly ExtensionField::mul(const Poly& a, const Poly& b) const
{
    return poly_divmod(a * b, modulus_).second;
}

Poly ExtensionField::pow(const Poly& a, const Natural& e) const { return powmod(a, e, modulus_); }

Poly ExtensionField::element(std::uint64_t index) const
{
    return Poly(base_, digits(index, base_.p(), degree_));
}

Poly ExtensionField::root_of_unity(std::size_t n) const
{
    const Natural group_order = order() - 1;
    if (group_order % n != 0)
        throw Error(Errc::InvalidArgument, "n does not divide p^t - 1");
    const Natural cofactor = group_order / n;

    std::vector<std::size_t> primes;
    {
        std::size_t v = n;
        for (std::size_t d = 2; d * d <= v; ++d) {
            if (v % d == 0) {
                primes.push_back(d);
                while (v % d == 0)
                    v /= d;
            }
        }
        if (v > 1)
            primes.push_back(v);
    }

    const Poly unit = one();
    for (std::uint64_t index = 1;; ++index) {
        const Poly candidate = pow(element(index), cofactor);
        bool exact = true;
        for (auto r : primes) {
            if (pow(candidate, Natural(n / r)) == unit) {
                exact = false;
                break;
            }
        }
        if (exact)
            return candidate;
    }
}

} // namespace zpm::detail
