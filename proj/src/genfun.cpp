#include "cheb3/genfun.hpp"

#include <stdexcept>

#include "cheb3/errors.hpp"
#include "cheb3/reference_tables.hpp"

namespace cheb3 {

LaurentPoly antisym_quotient(const RootData& rd, const LaurentPoly& p) {
  const WeightCoord rho = rd.weyl_vector_weight();
  const LaurentPoly alt_rho = alt_trace(rd, rho);

  LaurentPoly rem = p;
  LaurentPoly quotient;
  while (!rem.is_zero()) {
    // Highest surviving term by (height key, lex); for a genuine multiple of
    // the alternating trace it sits at rho plus a dominant weight.
    auto top = rem.terms().begin();
    for (auto it = std::next(rem.terms().begin()); it != rem.terms().end(); ++it) {
      long hi = RootData::height_key(it->first), ht = RootData::height_key(top->first);
      if (hi > ht || (hi == ht && top->first < it->first)) top = it;
    }
    const WeightCoord m = top->first - rho;
    if (!rd.is_dominant(m))
      throw ReductionMismatch(
          "polynomial is not divisible by the alternating Weyl-vector trace "
          "(stuck at " +
          to_string(top->first) + ")");
    const Int c = top->second;
    const LaurentPoly orb = orbit_sum(rd, m);
    quotient += c * orb;
    rem -= (c * orb) * alt_rho;
  }
  return quotient;
}

GeneratingFunctions::GeneratingFunctions(const RootData& rd, InvariantReducer& reducer)
    : rd_(rd), reducer_(reducer) {
  if (rd.rank() != 3)
    throw UnsupportedRank("generating functions are built for the rank-3 system");
}

const std::array<std::vector<TriPoly>, 3>& GeneratingFunctions::denominator_factors() {
  std::scoped_lock lock(mu_);
  if (denom_) return *denom_;

  std::array<std::vector<TriPoly>, 3> factors;
  for (int k = 0; k < 3; ++k) {
    WeightCoord unit{};
    unit.n[k] = 1;
    // Coefficients of prod_{mu in orbit} (1 - p x^mu) as a univariate
    // polynomial in p: signed elementary symmetric sums of the monomials.
    const auto orb = rd_.orbit(unit);
    std::vector<LaurentPoly> elem(orb.size() + 1);
    elem[0] = LaurentPoly::constant(1);
    std::size_t used = 0;
    for (const auto& mu : orb) {
      ++used;
      for (std::size_t t = used; t >= 1; --t) {
        LaurentPoly shifted = elem[t - 1] * LaurentPoly::monomial(mu, -1);
        elem[t] += shifted;
      }
    }
    std::vector<TriPoly> reduced;
    reduced.reserve(elem.size());
    for (auto& e : elem) reduced.push_back(reducer_.laurent_to_tri(e));
    if (reduced != reference::denominator_factors()[k])
      throw ReductionMismatch("derived denominator factor " + std::to_string(k + 1) +
                              " differs from the reference form");
    factors[k] = std::move(reduced);
  }
  denom_ = std::move(factors);
  return *denom_;
}

std::map<Exp3, LaurentPoly> GeneratingFunctions::slot_product(
    const WeylElement& w) const {
  // prod_k prod_{mu in orbit(lambda_k), mu != w lambda_k} (1 - p_k x^mu),
  // expanded as a polynomial in p with Laurent coefficients.
  std::map<Exp3, LaurentPoly> f;
  f.emplace(Exp3{0, 0, 0}, LaurentPoly::constant(1));
  for (int k = 0; k < 3; ++k) {
    WeightCoord unit{};
    unit.n[k] = 1;
    const WeightCoord own = rd_.act_weight(w, unit);
    for (const auto& mu : rd_.orbit(unit)) {
      if (mu == own) continue;
      std::map<Exp3, LaurentPoly> next = f;
      for (const auto& [e, c] : f) {
        Exp3 e2 = e;
        ++e2[k];
        next[e2] -= c * LaurentPoly::monomial(mu);
      }
      std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
      f = std::move(next);
    }
  }
  return f;
}

const RationalGF& GeneratingFunctions::derive_numerator_first() {
  const auto& denom = denominator_factors();
  std::scoped_lock lock(mu_);
  if (first_) return *first_;

  std::map<Exp3, LaurentPoly> cells;
  for (const auto& w : rd_.group())
    for (auto& [e, c] : slot_product(w)) cells[e] += c;

  RationalGF gf;
  gf.kind = GFKind::first;
  gf.denominator = denom;
  for (auto& [e, c] : cells) {
    if (c.is_zero()) continue;
    if (e[0] > 3 || e[1] > 5 || e[2] > 3)
      throw ReductionMismatch("first-kind numerator exceeds the (3,5,3) degree bound");
    try {
      gf.numerator.emplace(e, reducer_.laurent_to_tri(c));
    } catch (const NonInvariantInput& err) {
      throw NonInvariantCoefficient("numerator cell (" + std::to_string(e[0]) + "," +
                                    std::to_string(e[1]) + "," + std::to_string(e[2]) +
                                    ") is not Weyl invariant: " + err.what());
    }
  }
  first_ = std::move(gf);
  return *first_;
}

const RationalGF& GeneratingFunctions::derive_numerator_second() {
  const auto& denom = denominator_factors();
  std::scoped_lock lock(mu_);
  if (second_) return *second_;

  std::map<Exp3, LaurentPoly> cells;
  for (const auto& w : rd_.group()) {
    for (auto& [e, c] : slot_product(w)) {
      if (w.parity > 0)
        cells[e] += c;
      else
        cells[e] -= c;
    }
  }

  RationalGF gf;
  gf.kind = GFKind::second;
  gf.denominator = denom;
  for (auto& [e, c] : cells) {
    if (c.is_zero()) continue;
    if (e[0] == 0 || e[1] == 0 || e[2] == 0)
      throw ReductionMismatch(
          "signed slot sum is not divisible by p1 p2 p3 as expected");
    const Exp3 shifted{e[0] - 1, e[1] - 1, e[2] - 1};
    if (shifted[0] > 2 || shifted[1] > 4 || shifted[2] > 2)
      throw ReductionMismatch("second-kind numerator exceeds the (2,4,2) degree bound");
    gf.numerator.emplace(shifted,
                         reducer_.laurent_to_tri(antisym_quotient(rd_, c)));
  }
  second_ = std::move(gf);
  return *second_;
}

SeriesTable GeneratingFunctions::expand(const RationalGF& gf, const Exp3& caps) {
  for (int a = 0; a < 3; ++a)
    if (caps[a] < 0) throw std::invalid_argument("expansion caps must be nonnegative");

  const int n1 = caps[0] + 1, n2 = caps[1] + 1, n3 = caps[2] + 1;
  std::vector<TriPoly> grid(static_cast<std::size_t>(n1) * n2 * n3);
  auto at = [&](int i, int j, int k) -> TriPoly& {
    return grid[(static_cast<std::size_t>(i) * n2 + j) * n3 + k];
  };

  for (const auto& [e, cell] : gf.numerator)
    if (e[0] < n1 && e[1] < n2 && e[2] < n3) at(e[0], e[1], e[2]) = cell;

  // Divide by one univariate factor at a time; along its axis each
  // coefficient only depends on already-final lower entries.
  const std::array<int, 3> dims{n1, n2, n3};
  for (int axis = 0; axis < 3; ++axis) {
    const auto& den = gf.denominator[axis];
    const int deg = static_cast<int>(den.size()) - 1;
    std::array<int, 3> idx{};
    for (idx[0] = 0; idx[0] < dims[0]; ++idx[0])
      for (idx[1] = 0; idx[1] < dims[1]; ++idx[1])
        for (idx[2] = 0; idx[2] < dims[2]; ++idx[2]) {
          TriPoly acc = at(idx[0], idx[1], idx[2]);
          auto prev = idx;
          for (int t = 1; t <= deg && t <= idx[axis]; ++t) {
            prev[axis] = idx[axis] - t;
            acc -= den[t] * at(prev[0], prev[1], prev[2]);
          }
          at(idx[0], idx[1], idx[2]) = std::move(acc);
        }
  }

  SeriesTable table;
  table.caps = caps;
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j)
      for (int k = 0; k < n3; ++k)
        table.coeffs.emplace(WeightCoord{{i, j, k}}, std::move(at(i, j, k)));
  return table;
}

SeriesTable GeneratingFunctions::first_kind_table(const Exp3& caps) {
  SeriesTable table = expand(derive_numerator_first(), caps);
  for (auto& [n, poly] : table.coeffs) {
    const Int stab = rd_.stabilizer_order(n);
    if (stab == 1) continue;
    TriPoly scaled;
    for (const auto& [e, c] : poly.terms()) {
      if (!divides(stab, c))
        throw NonIntegralNormalization("orbit trace at " + to_string(n) +
                                       " is not divisible by its stabilizer order");
      scaled.add_term(e, c / stab);
    }
    poly = std::move(scaled);
  }
  return table;
}

SeriesTable GeneratingFunctions::second_kind_table(const Exp3& caps) {
  return expand(derive_numerator_second(), caps);
}

}  // namespace cheb3
