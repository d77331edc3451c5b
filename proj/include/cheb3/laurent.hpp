#ifndef CHEB3_LAURENT_HPP
#define CHEB3_LAURENT_HPP

#include <array>
#include <complex>
#include <map>

#include "cheb3/bigint.hpp"
#include "cheb3/weyl.hpp"

namespace cheb3 {

// Sparse Laurent polynomial over the weight lattice: a finite sum of
// c * x^mu with mu in integer fundamental-weight coordinates.  Stored zero
// coefficients are pruned, so equality is structural.
class LaurentPoly {
 public:
  using TermMap = std::map<WeightCoord, Int>;

  LaurentPoly() = default;
  static LaurentPoly constant(Int c);
  static LaurentPoly monomial(const WeightCoord& mu, Int c = 1);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Int coeff(const WeightCoord& mu) const;
  Int coefficient_sum() const;

  void add_term(const WeightCoord& mu, const Int& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Int& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const Int& c, LaurentPoly p) { return p *= c; }
  bool operator==(const LaurentPoly&) const = default;

 private:
  TermMap terms_;
};

// Phases phi_j in the coroot basis; x^mu evaluates to exp(2*pi*i <mu, phi>).
struct EvalPoint {
  std::array<double, 3> phi{};
};

// Sum over the orbit of m, each point once.
LaurentPoly orbit_sum(const RootData& rd, const WeightCoord& m);
// Sum over the whole group: stabilizer_order(m) * orbit_sum(m).
LaurentPoly orbit_trace(const RootData& rd, const WeightCoord& m);
// Parity-signed group sum; vanishes identically on stabilized points.
LaurentPoly alt_trace(const RootData& rd, const WeightCoord& m);

std::complex<double> eval_numeric(const LaurentPoly& p, const EvalPoint& at);

}  // namespace cheb3

#endif
