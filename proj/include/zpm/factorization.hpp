#pragma once

#include "zpm/poly.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace zpm {

/// Which polynomial of degree n is being factored.
///  - Standard: x^n - 1.
///  - Shifted:  x^n + (p - 1), which is congruent to p modulo x^n - 1 and to
///    x^n - 1 modulo p. For p = 2 this is x^n + 1.
enum class ModulusKind { Standard, Shifted };

const char* to_string(ModulusKind kind) noexcept;

/// Partition of {0, ..., n-1} into p-cyclotomic cosets, ordered by smallest
/// element, with the involution i -> -i mod n lifted to coset indices.
struct CosetPartition {
    std::uint64_t p = 0;
    std::size_t n = 0;
    std::vector<std::vector<std::size_t>> cosets; ///< each sorted ascending
    std::vector<std::size_t> pairing;

    std::size_t gamma() const noexcept;
    std::size_t delta() const noexcept;
    std::size_t coset_of(std::size_t i) const;
};

struct GammaDelta {
    std::size_t gamma = 0; ///< self-reciprocal factors
    std::size_t delta = 0; ///< reciprocal pairs
    friend bool operator==(const GammaDelta&, const GammaDelta&) = default;
};

/// Throws NotPrime, EvenLength, NonCoprime or InvalidArgument for inputs outside
/// odd n >= 1 coprime to a prime p.
void validate_length(std::uint64_t p, std::size_t n);

CosetPartition cyclotomic_cosets(std::uint64_t p, std::size_t n);

GammaDelta gamma_delta(std::uint64_t p, std::size_t n);

/// Multiplicative order of p modulo n (1 for n = 1).
std::size_t multiplicative_order(std::uint64_t p, std::size_t n);

/// Irreducible factors of x^n - 1 over Z_p in canonical order: self-reciprocal
/// factors first, then reciprocal pairs, each group sorted by degree and then by
/// ascending coefficient sequence.
std::vector<Poly> factor_mod_p(std::uint64_t p, std::size_t n);

/// The basic irreducible factorization of a modulus over Z_{p^m}.
struct FactorBasis {
    RingParams ring;
    std::size_t n;
    ModulusKind kind;
    std::vector<Poly> factors;        ///< monic, canonical order
    std::vector<std::size_t> pairing; ///< reciprocal partner of each factor (mod p)
    std::size_t gamma;
    std::size_t delta;

    std::size_t size() const noexcept { return factors.size(); }
    bool self_paired(std::size_t k) const { return pairing.at(k) == k; }
    Poly modulus() const;
};

Poly modulus_polynomial(const RingParams& ring, std::size_t n, ModulusKind kind);

/// Lifts the mod-p factorization to Z_{p^m} by quadratic Hensel lifting along a
/// balanced factor tree. m = 1 returns the mod-p factors unchanged.
FactorBasis hensel_lift(std::uint64_t p, unsigned m, std::size_t n, ModulusKind kind);

} // namespace zpm
