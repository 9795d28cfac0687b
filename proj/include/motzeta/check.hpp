#pragma once

#include <string>

namespace motzeta {

/// Outcome of a mathematical consistency check. A failed check is an
/// ordinary value; `detail` carries the witness or residual.
struct Verdict {
    bool holds = true;
    std::string detail;

    static Verdict pass(std::string detail = {}) { return {true, std::move(detail)}; }
    static Verdict fail(std::string detail) { return {false, std::move(detail)}; }
    explicit operator bool() const { return holds; }
};

} // namespace motzeta
