#pragma once

// Brute-force verification layer: spans of cyclic shifts, inner products,
// exhaustive codeword scans and the profile-by-profile crosscheck harness.

#include "zpm/codes.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace zpm {

using Word = std::vector<Coeff>;

struct Budgets {
    std::uint64_t codewords = 10'000'000;
    std::uint64_t profiles = 1'000'000;

    /// Defaults, with both limits replaced by ZPMCYCLIC_BUDGET when it is set.
    static Budgets from_env();
};

/// Sum of u_i v_i modulo p^m; throws LengthMismatch.
Coeff inner_product(std::span<const Coeff> u, std::span<const Coeff> v, const RingParams& ring);

/// Row-triangular (Howell) form of a submodule of Z_{p^m}^n. Each row has a pivot
/// entry p^v on its own column, entries above a pivot are reduced below p^v,
/// and p^{m-v} times a row lies in the span of the rows after it.
class SpanBasis {
public:
    SpanBasis(RingParams ring, std::size_t n, std::vector<Word> generators);

    const RingParams& ring() const noexcept { return ring_; }
    std::size_t length() const noexcept { return n_; }
    const std::vector<Word>& rows() const noexcept { return rows_; }
    const std::vector<std::size_t>& pivot_columns() const noexcept { return pivot_cols_; }
    const std::vector<unsigned>& pivot_valuations() const noexcept { return pivot_vals_; }

    /// prod_rows p^{m - v(pivot)}
    Natural cardinality() const;

    bool contains(std::span<const Coeff> word) const;
    /// Every row of `other` lies in this span.
    bool contains(const SpanBasis& other) const;

private:
    RingParams ring_;
    std::size_t n_;
    std::vector<Word> rows_;
    std::vector<std::size_t> pivot_cols_;
    std::vector<unsigned> pivot_vals_;
};

bool same_module(const SpanBasis& a, const SpanBasis& b);

/// Coefficient vector of f reduced modulo x^n - 1, padded to length n.
Word to_word(const Poly& f, std::size_t n);

/// The n cyclic shifts of f modulo x^n - 1.
std::vector<Word> cyclic_shifts(const Poly& f, std::size_t n);

/// Module generated by all cyclic shifts of every generator.
SpanBasis span_from_generators(std::span<const Poly> generators, const RingParams& ring,
                               std::size_t n);

/// True iff all pairs of cyclic shifts of the generators are orthogonal.
bool bruteforce_self_orthogonal(std::span<const Poly> generators, const RingParams& ring,
                                std::size_t n);

/// Calls `visit` once per codeword until it returns false. Returns true when the
/// scan ran to completion. Throws BudgetExceeded when |span| > budget.
bool for_each_codeword(const SpanBasis& basis, std::uint64_t budget,
                       const std::function<bool(std::span<const Coeff>)>& visit);

std::vector<Word> enumerate_codewords(const SpanBasis& basis, std::uint64_t budget);

/// Smallest Euclidean weight of a nonzero codeword; throws ZeroCode or BudgetExceeded.
Natural bruteforce_min_euclidean_weight(const SpanBasis& basis, std::uint64_t budget);

/// Span of the code described by a profile: product-form generator on a shifted
/// basis, standard generators on a standard basis.
SpanBasis code_span(const ExponentProfile& profile);

struct CheckOutcome {
    std::string name;
    bool passed = true;
    std::uint64_t failures = 0;
    std::optional<std::vector<unsigned>> offending; ///< first failing profile
    std::string detail;
};

struct CrosscheckReport {
    std::uint64_t p = 0;
    unsigned m = 0;
    std::size_t n = 0;
    std::size_t gamma = 0;
    std::size_t delta = 0;
    std::uint64_t profiles = 0;
    Natural so_enumerated;
    Natural trivial_enumerated;
    Natural nontrivial_enumerated;
    Natural selfdual_enumerated;
    std::vector<CheckOutcome> checks;

    bool passed() const noexcept;
    const CheckOutcome* first_failure() const noexcept;
};

/// For every profile at (p, m, n): brute-force self-orthogonality against the
/// criterion, span cardinality against the closed form, product-form span against
/// the standard-generator span, |C||C^perp| = p^{mn} with shift orthogonality,
/// and enumerated counts against the closed-form counts.
CrosscheckReport crosscheck(std::uint64_t p, unsigned m, std::size_t n,
                            const Budgets& budgets = Budgets{});

std::string to_json(const CrosscheckReport& report);

} // namespace zpm
