#include <iostream>

#include "cheb3/verify.hpp"

// Runs the full verification pipeline and prints one PASS/FAIL line per
// acceptance criterion.  Exits nonzero when any criterion fails; the report
// explains every discrepancy it found along the way.
int main() {
    const cheb3::VerifyReport report = cheb3::run_verification();
    std::cout << cheb3::render_text(report);
    return report.pass(false) ? 0 : 1;
}
