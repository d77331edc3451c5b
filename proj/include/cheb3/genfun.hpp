#ifndef CHEB3_GENFUN_HPP
#define CHEB3_GENFUN_HPP

#include <array>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "cheb3/invariants.hpp"

namespace cheb3 {

enum class GFKind { first, second };

// Rational generating function: numerator cells keyed by the p-exponent
// triple, and the three univariate denominator factors (coefficients of
// p_k^t, t ascending, constant term 1).
struct RationalGF {
  GFKind kind = GFKind::first;
  std::map<Exp3, TriPoly> numerator;
  std::array<std::vector<TriPoly>, 3> denominator;
};

// Complete rectangular table of series coefficients for all n <= caps.
struct SeriesTable {
  Exp3 caps{0, 0, 0};
  std::map<WeightCoord, TriPoly> coeffs;

  const TriPoly& at(const WeightCoord& n) const { return coeffs.at(n); }
};

// Exact division of an antisymmetric Laurent polynomial by the alternating
// trace of the Weyl vector.  Returns the invariant quotient; throws
// ReductionMismatch when division leaves a remainder.
LaurentPoly antisym_quotient(const RootData& rd, const LaurentPoly& p);

// Derives both rational generating functions from the orbit algebra alone
// and expands them into polynomial tables.  Rank-3 only.
class GeneratingFunctions {
 public:
  GeneratingFunctions(const RootData& rd, InvariantReducer& reducer);

  // Product over the orbit of each fundamental weight, reduced to invariant
  // variables.  Must reproduce the bundled reference factors exactly;
  // anything else throws ReductionMismatch.
  const std::array<std::vector<TriPoly>, 3>& denominator_factors();

  // Numerator of the orbit-sum generating function, by summing over group
  // slots the product of (1 - p_k x^mu) with the slot's own orbit point
  // removed from each factor.  Degrees are bounded by (3, 5, 3).
  const RationalGF& derive_numerator_first();

  // Numerator of the second-kind function: the parity-signed slot sum is
  // divisible by p1 p2 p3; after shifting the exponents down by (1,1,1) each
  // cell divides exactly by the alternating Weyl-vector trace.  Degrees are
  // bounded by (2, 4, 2).
  const RationalGF& derive_numerator_second();

  // Series coefficients of numerator/denominator for every index n <= caps,
  // by per-axis exact polynomial division.
  static SeriesTable expand(const RationalGF& gf, const Exp3& caps);

  // First-kind polynomials: the orbit-trace table normalized by stabilizer
  // orders.  Throws NonIntegralNormalization if any division leaves a
  // remainder.
  SeriesTable first_kind_table(const Exp3& caps);

  // Second-kind polynomials, straight from the second generating function.
  SeriesTable second_kind_table(const Exp3& caps);

 private:
  std::map<Exp3, LaurentPoly> slot_product(const WeylElement& w) const;

  const RootData& rd_;
  InvariantReducer& reducer_;
  std::mutex mu_;
  std::optional<std::array<std::vector<TriPoly>, 3>> denom_;
  std::optional<RationalGF> first_;
  std::optional<RationalGF> second_;
};

}  // namespace cheb3

#endif
