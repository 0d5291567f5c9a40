#pragma once

#include "zpm/poly.hpp"

#include <cstddef>
#include <cstdint>

namespace zpm::detail {

/// GF(p^t) realized as Z_p[y] modulo the first monic irreducible of degree t,
/// where candidates are visited in the order of the integer whose base-p digits
/// (least significant first) are the lower coefficients.
class ExtensionField {
public:
    ExtensionField(std::uint64_t p, std::size_t degree);

    const Poly& modulus() const noexcept { return modulus_; }
    std::size_t degree() const noexcept { return degree_; }
    Natural order() const; ///< p^t

    Poly one() const { return Poly::constant(base_, 1); }
    Poly mul(const Poly& a, const Poly& b) const;
    Poly pow(const Poly& a, const Natural& e) const;
    /// The element whose base-p digits (least significant first) are its coefficients.
    Poly element(std::uint64_t index) const;

    /// A root of unity of exact order n: g^{(p^t - 1)/n} for the first element g
    /// (in element() order) for which that power has order exactly n.
    Poly root_of_unity(std::size_t n) const;

private:
    RingParams base_;
    std::size_t degree_;
    Poly modulus_;
};

} // namespace zpm::detail
