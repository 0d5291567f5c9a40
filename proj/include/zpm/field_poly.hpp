#pragma once

// Polynomial helpers that need a field, i.e. rings with m = 1.

#include "zpm/poly.hpp"

namespace zpm {

/// Monic gcd over Z_p (zero when both inputs are zero).
Poly field_gcd(const Poly& a, const Poly& b);

struct ExtendedGcd {
    Poly gcd; ///< monic
    Poly s;
    Poly t; ///< s*a + t*b = gcd
};

ExtendedGcd field_extended_gcd(const Poly& a, const Poly& b);

/// base^e modulo a polynomial with unit leading coefficient; works over any Z_{p^m}.
Poly powmod(const Poly& base, const Natural& e, const Poly& modulus);

/// Monic normalization over Z_p.
Poly make_monic(const Poly& f);

/// Rabin's test: x^{p^d} = x mod f and gcd(x^{p^{d/r}} - x, f) = 1 for every prime r | d.
bool is_irreducible(const Poly& f);

} // namespace zpm
