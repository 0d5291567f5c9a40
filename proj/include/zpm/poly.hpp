#pragma once

#include "zpm/ring.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace zpm {

/// Dense polynomial over Z_{p^m}, ascending coefficients, no trailing zeros.
/// The zero polynomial has an empty coefficient sequence and no degree.
class Poly {
public:
    explicit Poly(RingParams ring) : ring_(ring) {}
    /// Coefficients are reduced modulo p^m and trailing zeros dropped.
    Poly(RingParams ring, std::vector<Coeff> coeffs);

    static Poly from_signed(RingParams ring, const std::vector<std::int64_t>& coeffs);
    static Poly constant(RingParams ring, Coeff c);
    static Poly monomial(RingParams ring, Coeff c, std::size_t k);

    const RingParams& ring() const noexcept { return ring_; }
    std::span<const Coeff> coeffs() const noexcept { return coeffs_; }
    const std::vector<Coeff>& coeff_vector() const noexcept { return coeffs_; }

    std::optional<std::size_t> degree() const noexcept
    {
        if (coeffs_.empty())
            return std::nullopt;
        return coeffs_.size() - 1;
    }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }
    Coeff coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
    Coeff leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }

    Coeff evaluate(Coeff x) const noexcept;

    friend bool operator==(const Poly& a, const Poly& b) noexcept
    {
        return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
    }

private:
    void normalize() noexcept;

    RingParams ring_;
    std::vector<Coeff> coeffs_;
};

Poly operator+(const Poly& f, const Poly& g);
Poly operator-(const Poly& f, const Poly& g);
Poly operator-(const Poly& f);
Poly operator*(const Poly& f, const Poly& g);
Poly operator*(Coeff c, const Poly& f);

/// Schoolbook product; throws Errc::MixedRings when the rings differ.
Poly poly_mul(const Poly& f, const Poly& g);

Poly pow(const Poly& f, unsigned e);

/// (quotient, remainder) with f = q*d + r, deg r < deg d.
/// Requires a unit leading coefficient in d.
std::pair<Poly, Poly> poly_divmod(const Poly& f, const Poly& d);

/// Representative of f modulo x^n - 1 of degree < n.
Poly quotient_reduce(const Poly& f, std::size_t n);

/// f*(x) = f(0)^{-1} x^{deg f} f(1/x). Throws Errc::NotAUnit when f(0) is not a unit.
Poly reciprocal(const Poly& f);

/// Plain coefficient reversal x^{deg f} f(1/x).
Poly reverse_coefficients(const Poly& f);

/// Coefficientwise reduction into Z_p.
Poly reduce_mod_p(const Poly& f);

/// Reinterprets the coefficients of f as naturals and reduces them into `ring`.
/// Used to move between Z_{p^k} and Z_{p^j} during lifting.
Poly with_ring(const Poly& f, const RingParams& ring);

/// x^n - 1 over the given ring.
Poly cyclic_modulus(const RingParams& ring, std::size_t n);

/// Descending powers, e.g. "2x^8+4x^6+4x^5+6x^4+4x^3+2"; zero prints as "0".
std::string to_text(const Poly& f);

/// Ascending coefficient array, e.g. "[1,2,5,1]"; zero prints as "[]".
std::string to_json_text(const Poly& f);

/// Lexicographic comparison of ascending coefficient sequences.
bool coeff_less(const Poly& a, const Poly& b) noexcept;

} // namespace zpm
