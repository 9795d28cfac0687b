// One line per acceptance criterion; nonzero exit if any fails.
// Usage: test_acceptance [quick|full]   (default full)

#include <iostream>

#include "motzeta/acceptance/acceptance.hpp"

int main(int argc, char** argv) {
    using namespace motzeta::acceptance;
    const Suite suite = parse_suite(argc > 1 ? argv[1] : "full");
    const auto report = run_acceptance(suite, [](const CriterionResult& c) {
        std::cout << (c.pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.title << "): " << c.detail
                  << std::endl;
    });
    std::size_t passed = 0;
    for (const auto& c : report.criteria) passed += c.pass ? 1 : 0;
    std::cout << passed << "/" << report.criteria.size() << " criteria pass (" << to_string(suite) << " suite)"
              << std::endl;
    return report.all_pass() ? 0 : 1;
}
