#pragma once

#include <cstdint>

namespace motzeta {

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 30;

/// Cap on enumeration sizes: MOTZETA_BUDGET if set to a positive integer,
/// otherwise kDefaultBudget.
std::uint64_t enumeration_budget();

} // namespace motzeta
