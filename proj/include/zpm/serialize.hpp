#pragma once

#include "zpm/codes.hpp"

#include <string>

namespace zpm {

/// {"modulus_kind":..., "p":..., "m":..., "n":..., "factors":[[...],...],
///  "pairing":[...], "gamma":..., "delta":...}
std::string to_json(const FactorBasis& basis);

/// {"exponents":[...], "basis_order":["self_reciprocal:x+1", "pair:...", ...]}
std::string to_json(const ExponentProfile& profile);

/// Counts as JSON; values beyond 64 bits are rendered as decimal strings.
std::string to_json(const CodeCounts& counts);

/// "n,gamma,delta,N_t,N_n,N_sd_formula,N_sd_actual"
std::string counts_csv_header();
std::string to_csv(const CodeCounts& counts);

} // namespace zpm
