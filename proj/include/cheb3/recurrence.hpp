#ifndef CHEB3_RECURRENCE_HPP
#define CHEB3_RECURRENCE_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "cheb3/genfun.hpp"

namespace cheb3 {

enum class RecurrenceStatus { holds, holds_under_scaling, fails };

std::string to_string(RecurrenceStatus s);

// One of the three published index-raising rules: the left side is the table
// entry at base + target, the right side is factor * variable * T(base) minus
// the lookups at base + each subtract shift.
struct PublishedRule {
  int id = 0;
  int variable = 0;  // axis into (z, r, zb)
  int factor = 0;
  WeightCoord target{};
  std::vector<WeightCoord> subtract;
};

const std::array<PublishedRule, 3>& published_rules();

// Scaling candidates sigma applied to the leading product, as exact fractions.
inline constexpr std::array<std::pair<int, int>, 3> kScalings{
    {{1, 1}, {1, 4}, {1, 6}}};

struct PublishedInstance {
  int rule = 0;
  WeightCoord base{};
  RecurrenceStatus status = RecurrenceStatus::fails;
  std::pair<int, int> scaling{1, 1};  // accepted sigma when the status says so
  TriPoly residual;                   // at sigma = 1
};

// The ring-derived counterpart: variable_i * T(base) re-expanded through the
// exact orbit-product decomposition.  Must always be zero.
struct RingInstance {
  int rule = 0;
  WeightCoord base{};
  bool zero = false;
  TriPoly residual;
};

struct RuleDetermination {
  int rule = 0;
  RecurrenceStatus status = RecurrenceStatus::fails;
  std::pair<int, int> scaling{1, 1};
  // Zero-residual instance counts at each entry of kScalings.
  std::array<int, 3> zero_counts{};
  int total = 0;
};

struct RecurrenceReport {
  Exp3 caps{};
  std::vector<PublishedInstance> published;
  std::vector<RingInstance> ring;
  std::array<RuleDetermination, 3> determinations{};

  bool ring_all_zero() const;
};

// Checks every rule at every base index within caps.  Lookups at shifted
// indices resolve through the dominant representative, so the table must
// cover caps plus one index of margin in each direction.
RecurrenceReport check_recurrences(const RootData& rd, InvariantReducer& reducer,
                                   const SeriesTable& table, const Exp3& caps);

// Rank-1 calibration: runs the full pipeline at rank 1 and compares both
// polynomial families, after the substitution z = 2x, against the classical
// recurrence x-tables.  Exact integer comparison throughout.
struct A1Report {
  int max_index = 0;
  bool pass = false;
  std::vector<std::string> failures;
};

A1Report a1_calibration(int max_index);

}  // namespace cheb3

#endif
