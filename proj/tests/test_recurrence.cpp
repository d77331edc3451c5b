#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "cheb3/errors.hpp"
#include "cheb3/recurrence.hpp"

using namespace cheb3;

TEST_CASE("published rules carry the printed shifts verbatim") {
    const auto& rules = published_rules();
    CHECK(rules[0].factor == 4);
    CHECK(rules[1].factor == 6);
    CHECK(rules[2].factor == 4);
    CHECK(rules[0].variable == 0);
    CHECK(rules[1].variable == 1);
    CHECK(rules[2].variable == 2);
    CHECK(rules[0].target == WeightCoord{{1, 0, 0}});
    CHECK(rules[1].target == WeightCoord{{0, 1, 0}});
    CHECK(rules[2].target == WeightCoord{{0, 0, 1}});

    REQUIRE(rules[0].subtract.size() == 3);
    CHECK(rules[0].subtract[0] == WeightCoord{{-1, 0, 1}});
    CHECK(rules[0].subtract[1] == WeightCoord{{0, 1, -1}});
    CHECK(rules[0].subtract[2] == WeightCoord{{0, -1, 0}});
    REQUIRE(rules[1].subtract.size() == 5);
    CHECK(rules[1].subtract[4] == WeightCoord{{0, -1, 0}});
    REQUIRE(rules[2].subtract.size() == 3);
    CHECK(rules[2].subtract[0] == WeightCoord{{0, 1, -1}});
    CHECK(rules[2].subtract[1] == WeightCoord{{1, -1, 0}});
    CHECK(rules[2].subtract[2] == WeightCoord{{-1, 0, 0}});
}

TEST_CASE("recurrence check over a small box") {
    const RootData rd = RootData::build(3);
    InvariantReducer red(rd);
    GeneratingFunctions gf(rd, red);
    const SeriesTable table = gf.first_kind_table({3, 3, 3});
    const RecurrenceReport rep = check_recurrences(rd, red, table, {2, 2, 2});

    CHECK(rep.caps == Exp3{2, 2, 2});
    CHECK(rep.published.size() == 81);
    CHECK(rep.ring.size() == 81);
    CHECK(rep.ring_all_zero());
    for (const auto& det : rep.determinations) CHECK(det.total == 27);

    // The ring route restates each rule through the exact orbit-product
    // decomposition, so it certifies the table; the printed shift sets are
    // what the published instances grade.
    const auto& det1 = rep.determinations[0];
    const auto& det2 = rep.determinations[1];
    const auto& det3 = rep.determinations[2];

    // Rule 1's printed subtract shifts mix orbits, so no scaling rescues any
    // base point, the origin included.
    CHECK(det1.status == RecurrenceStatus::fails);
    CHECK(det1.zero_counts == std::array<int, 3>{0, 0, 0});

    // Rules 2 and 3 hold at the origin as printed and on regular bases only
    // after rescaling the leading product, so the whole-box verdicts stay
    // "fails" while the per-sigma counters show the split.
    CHECK(det2.status == RecurrenceStatus::fails);
    CHECK(det2.zero_counts[0] == 1);
    CHECK(det3.status == RecurrenceStatus::fails);
    CHECK(det3.zero_counts[0] == 1);

    const auto origin2 =
        std::find_if(rep.published.begin(), rep.published.end(), [](const auto& inst) {
            return inst.rule == 2 && inst.base == WeightCoord{{0, 0, 0}};
        });
    REQUIRE(origin2 != rep.published.end());
    CHECK(origin2->status == RecurrenceStatus::holds);
    CHECK(origin2->scaling == std::pair<int, int>{1, 1});
    CHECK(origin2->residual.is_zero());

    // Fully regular base: rule 2 needs sigma = 1/6, the orbit size over the
    // group order.
    const auto reg2 =
        std::find_if(rep.published.begin(), rep.published.end(), [](const auto& inst) {
            return inst.rule == 2 && inst.base == WeightCoord{{2, 2, 2}};
        });
    REQUIRE(reg2 != rep.published.end());
    CHECK(reg2->status == RecurrenceStatus::holds_under_scaling);
    CHECK(reg2->scaling == std::pair<int, int>{1, 6});
}

TEST_CASE("recurrence check rejects tables without margin") {
    const RootData rd = RootData::build(3);
    InvariantReducer red(rd);
    GeneratingFunctions gf(rd, red);
    const SeriesTable table = gf.first_kind_table({3, 3, 3});
    CHECK_THROWS_AS(check_recurrences(rd, red, table, {3, 3, 3}), std::invalid_argument);
}

TEST_CASE("recurrence check is rank-3 only") {
    const RootData rd1 = RootData::build(1);
    InvariantReducer red1(rd1);
    CHECK_THROWS_AS(check_recurrences(rd1, red1, SeriesTable{}, {1, 1, 1}),
                    UnsupportedRank);
}

TEST_CASE("rank-1 calibration against the classical x-tables") {
    const A1Report rep = a1_calibration(10);
    CHECK(rep.max_index == 10);
    CHECK(rep.pass);
    CHECK(rep.failures.empty());
}
