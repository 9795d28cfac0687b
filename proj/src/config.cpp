#include "motzeta/config.hpp"

#include <cstdlib>
#include <string>

namespace motzeta {

std::uint64_t enumeration_budget() {
    const char* env = std::getenv("MOTZETA_BUDGET");
    if (!env || !*env) return kDefaultBudget;
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(env, &used);
        if (used == std::string(env).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    return kDefaultBudget;
}

} // namespace motzeta
