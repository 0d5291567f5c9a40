#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace zpm {

/// Unbounded natural used for code counts and cardinalities.
using Natural = boost::multiprecision::cpp_int;

/// A fully reduced element of Z_{p^m}, stored as its least non-negative residue.
using Coeff = std::uint64_t;

enum class Errc {
    NotAUnit,
    MixedRings,
    NonUnitLeadingCoefficient,
    NotPrime,
    InvalidArgument,
    NonCoprime,
    EvenLength,
    WrongModulusKind,
    NotSelfDual,
    BudgetExceeded,
    ZeroCode,
    LengthMismatch,
};

const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

bool is_prime(std::uint64_t v) noexcept;

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept;

Natural natural_pow(std::uint64_t base, std::uint64_t exp);

/// Arithmetic context for Z_{p^m}. p is checked for primality by trial division;
/// p^m must fit below 2^62 so that sums of two residues never wrap.
class RingParams {
public:
    RingParams(std::uint64_t p, unsigned m);

    std::uint64_t p() const noexcept { return p_; }
    unsigned m() const noexcept { return m_; }
    Coeff modulus() const noexcept { return q_; }

    Coeff reduce(std::uint64_t a) const noexcept { return a % q_; }
    Coeff reduce_signed(std::int64_t a) const noexcept;
    Coeff add(Coeff a, Coeff b) const noexcept
    {
        Coeff s = a + b;
        return s >= q_ ? s - q_ : s;
    }
    Coeff sub(Coeff a, Coeff b) const noexcept { return a >= b ? a - b : a + q_ - b; }
    Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : q_ - a; }
    Coeff mul(Coeff a, Coeff b) const noexcept
    {
        return static_cast<Coeff>(static_cast<unsigned __int128>(a) * b % q_);
    }
    Coeff pow(Coeff a, std::uint64_t e) const noexcept;

    bool is_unit(Coeff a) const noexcept { return a % p_ != 0; }

    /// p-adic valuation of a residue; the zero residue has valuation m.
    unsigned valuation(Coeff a) const noexcept;

    /// p^k as a residue (zero once k >= m).
    Coeff p_power(unsigned k) const noexcept;

    /// The same prime with a different chain length.
    RingParams with_length(unsigned m) const { return RingParams(p_, m); }

    friend bool operator==(const RingParams& a, const RingParams& b) noexcept
    {
        return a.p_ == b.p_ && a.m_ == b.m_;
    }

private:
    std::uint64_t p_;
    unsigned m_;
    Coeff q_;
};

/// b with a*b = 1 in Z_{p^m}; throws Errc::NotAUnit when p | a.
Coeff scalar_inverse(Coeff a, const RingParams& ring);

std::string to_string(const Natural& v);

} // namespace zpm
