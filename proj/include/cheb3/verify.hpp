#ifndef CHEB3_VERIFY_HPP
#define CHEB3_VERIFY_HPP

#include <array>
#include <string>
#include <vector>

#include "cheb3/invariants.hpp"
#include "cheb3/recurrence.hpp"

namespace cheb3 {

// One disagreeing table cell, both sides rendered for the report.
struct DiffEntry {
    Exp3 index{};
    std::string reference;
    std::string derived;
    bool suspect = false;
};

struct CriterionResult {
    int id = 0;
    bool pass = false;
    std::string detail;
};

// Everything the verification pipeline measures, plus the eleven criterion
// verdicts derived from it.  The same structure backs the CLI report and the
// acceptance gate.
struct VerifyReport {
    Exp3 recurrence_caps{3, 3, 3};
    bool fatal = false;
    std::string fatal_reason;

    bool denominators_match = false;

    // First-kind numerator over the full bar-completed grid (96 cells, of
    // which 60 are printed in the reference).
    int k_cells_total = 0;
    int k_cells_matched = 0;
    int k_printed_total = 0;
    std::vector<DiffEntry> k_diffs;
    bool k_diffs_only_suspect = false;
    bool k_bar_symmetry = false;
    bool k_identity = false;

    // Second-kind numerator vs the reference component combination.
    std::vector<DiffEntry> l_diffs;
    bool l_match = false;
    bool second_identity = false;

    // Reference polynomial tables (printed entries plus bar conjugates).
    int first_table_total = 0;
    std::vector<DiffEntry> first_table_diffs;
    double seconds_first = 0.0;
    int second_table_total = 0;
    std::vector<DiffEntry> second_table_diffs;
    double seconds_second = 0.0;

    int multiply_back_total = 0;
    std::vector<std::string> multiply_back_failures;
    double seconds_multiply_back = 0.0;

    int cross_route_total = 0;
    std::vector<std::string> cross_route_failures;

    int numeric_points = 0;
    int numeric_indices = 0;
    double numeric_worst = 0.0;
    bool numeric_pass = false;

    std::array<int, 8> stabilizer_orders{};
    bool stabilizer_match = false;

    A1Report a1;
    RecurrenceReport recurrence;
    bool recurrence_complete = false;

    std::vector<CriterionResult> criteria;

    bool pass(bool strict) const;
};

// Runs the whole cross-verification stack at pinned table caps.  The
// recurrence box is the only configurable part; the polynomial table is
// enlarged automatically to give the checker its one-index margin.
VerifyReport run_verification(const Exp3& recurrence_caps = {3, 3, 3});

std::string render_text(const VerifyReport& r);
std::string render_json_report(const VerifyReport& r);

}  // namespace cheb3

#endif
