#pragma once

#include "json.hpp"
#include "zpm/ring.hpp"

#include <limits>

namespace zpm::detail {

/// Naturals that fit in 64 bits become JSON numbers, larger ones decimal strings.
inline nlohmann::ordered_json natural_json(const Natural& v)
{
    if (v <= std::numeric_limits<std::uint64_t>::max())
        return static_cast<std::uint64_t>(v);
    return v.str();
}

} // namespace zpm::detail
