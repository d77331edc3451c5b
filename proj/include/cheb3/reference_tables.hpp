#ifndef CHEB3_REFERENCE_TABLES_HPP
#define CHEB3_REFERENCE_TABLES_HPP

#include <array>
#include <map>
#include <vector>

#include "cheb3/invariants.hpp"

// Bundled closed-form reference tables for the rank-3 system: denominator
// factors, the first-kind numerator coefficients K_{ijk} (printed for i <= k
// and completed elsewhere by the bar symmetry), both polynomial families, and
// the four second-kind numerator components.  Transcribed verbatim from the
// published source, including entries whose printing looks doubtful; the
// comparison code, not the transcription, decides what counts as a mismatch.
namespace cheb3::reference {

// Factor k as coefficients of p_k^t, t ascending; constant term 1.
const std::array<std::vector<TriPoly>, 3>& denominator_factors();

// The 60 printed K cells, keyed by (i, j, k) with i <= k.
const std::map<Exp3, TriPoly>& first_kind_numerator();

// Printed entries flagged as typographically suspect.
const std::vector<Exp3>& suspect_numerator_entries();

// 22 printed polynomials each, keyed by the dominant index.
const std::map<WeightCoord, TriPoly>& first_kind_polys();
const std::map<WeightCoord, TriPoly>& second_kind_polys();

// Second-kind numerator components L1..L4 as integer polynomials in the
// p-exponents; the full cell is L1 + z L2 + r L3 + zb L4.
const std::array<std::map<Exp3, long>, 4>& second_kind_numerator_parts();

// The combination above, as TriPoly cells keyed by p-exponent.
const std::map<Exp3, TriPoly>& second_kind_numerator();

}  // namespace cheb3::reference

#endif
