#pragma once

#include "zpm/factorization.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace zpm {

/// A cyclic code, identified by one exponent in [0, m] per basis factor: the
/// code's component in the CRT summand of factor k is the ideal p^{a_k}.
/// The identity is the same over the standard and shifted bases because both
/// share the canonical factor order.
class ExponentProfile {
public:
    ExponentProfile(std::shared_ptr<const FactorBasis> basis, std::vector<unsigned> exponents);

    const FactorBasis& basis() const noexcept { return *basis_; }
    const std::shared_ptr<const FactorBasis>& basis_ptr() const noexcept { return basis_; }
    std::span<const unsigned> exponents() const noexcept { return exponents_; }
    unsigned operator[](std::size_t k) const { return exponents_.at(k); }
    std::size_t size() const noexcept { return exponents_.size(); }

    /// Same exponents over a different basis with matching factor count.
    ExponentProfile rebased(std::shared_ptr<const FactorBasis> other) const;

    friend bool operator==(const ExponentProfile& a, const ExponentProfile& b) noexcept
    {
        return a.exponents_ == b.exponents_;
    }

private:
    std::shared_ptr<const FactorBasis> basis_;
    std::vector<unsigned> exponents_;
};

std::string to_text(const ExponentProfile& profile); ///< "(2,2,2)"

/// Parses "2,2,2" (or "(2,2,2)").
std::vector<unsigned> parse_exponents(const std::string& text);

inline unsigned ceil_half(unsigned m) noexcept { return (m + 1) / 2; }

enum class GeneratorForm {
    Product,     ///< p^mu * prod f_k^{a_k - mu}, mu = min a_k, not reduced
    Reduced,     ///< the same, reduced modulo x^n - 1
};

/// Single generator of the code. Needs a shifted-modulus basis.
Poly generator_polynomial(const ExponentProfile& profile, GeneratorForm form);

/// (Ĝ_1, pĜ_2, ..., p^{m-1}Ĝ_m) with Ĝ = (x^n-1)/G, where G_{j+1} collects the
/// factors of exponent j; empty groups contribute nothing and are omitted.
/// Needs a standard-modulus basis.
std::vector<Poly> standard_generators(const ExponentProfile& profile);

/// Exponent at k becomes m - a_{pairing(k)}.
ExponentProfile dual_profile(const ExponentProfile& profile);

bool is_self_orthogonal(const ExponentProfile& profile);
bool is_self_dual(const ExponentProfile& profile);

enum class Triviality { NotSelfOrthogonal, Trivial, Nontrivial };
const char* to_string(Triviality t) noexcept;
Triviality classify_triviality(const ExponentProfile& profile);

/// p^{sum_k (m - a_k) deg f_k}
Natural cardinality(const ExponentProfile& profile);

Natural count_so(std::size_t gamma, std::size_t delta, unsigned m);
Natural count_trivial(std::size_t gamma, std::size_t delta, unsigned m);
Natural count_nontrivial(std::size_t gamma, std::size_t delta, unsigned m);
/// The expanded closed form c^gamma * (T^delta - c^{2 delta}); must equal count_nontrivial.
Natural count_nontrivial_expanded(std::size_t gamma, std::size_t delta, unsigned m);

struct SelfDualCount {
    Natural formula; ///< (m+1)^delta
    Natural actual;  ///< formula when m is even, otherwise 0
};
SelfDualCount count_self_dual(std::size_t delta, unsigned m);

/// True iff -1 is not a power of p modulo n.
bool nontrivial_exists(std::uint64_t p, std::size_t n);

struct CodeCounts {
    std::size_t n = 0;
    std::size_t gamma = 0;
    std::size_t delta = 0;
    Natural total_so;
    Natural trivial_so;
    Natural nontrivial_so;
    Natural selfdual_formula;
    Natural selfdual_actual;
};

CodeCounts compute_counts(std::uint64_t p, unsigned m, std::size_t n);

enum class ProfileFilter { All, SelfOrthogonal, Trivial, NontrivialSelfOrthogonal, SelfDual };
const char* to_string(ProfileFilter f) noexcept;
std::optional<ProfileFilter> parse_filter(const std::string& name);
bool matches(const ExponentProfile& profile, ProfileFilter filter);

/// Lexicographic walk over [0, m]^r yielding the profiles accepted by a filter.
class ProfileEnumerator {
public:
    ProfileEnumerator(std::shared_ptr<const FactorBasis> basis, ProfileFilter filter);

    std::optional<ExponentProfile> next();

private:
    bool advance();

    std::shared_ptr<const FactorBasis> basis_;
    ProfileFilter filter_;
    std::vector<unsigned> current_;
    bool started_ = false;
    bool done_ = false;
};

/// Collects the filtered profiles; throws BudgetExceeded when (m+1)^r > budget.
std::vector<ExponentProfile> enumerate_profiles(std::shared_ptr<const FactorBasis> basis,
                                                ProfileFilter filter, std::uint64_t budget);

/// Number of exponent vectors in the box, (m+1)^r.
Natural profile_box_size(const FactorBasis& basis);

/// Sum of min(e^2, (p^m - e)^2) over the word.
Natural euclidean_weight(std::span<const Coeff> word, const RingParams& ring);

enum class SelfDualType { TypeI, TypeII };
const char* to_string(SelfDualType t) noexcept;

/// Type II iff every codeword weight is divisible by p^{m+1}; scans codewords
/// and stops at the first witness. Throws NotSelfDual or BudgetExceeded.
SelfDualType classify_type(const ExponentProfile& profile, std::uint64_t budget);

} // namespace zpm
