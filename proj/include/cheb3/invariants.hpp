#ifndef CHEB3_INVARIANTS_HPP
#define CHEB3_INVARIANTS_HPP

#include <array>
#include <complex>
#include <map>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "cheb3/laurent.hpp"

namespace cheb3 {

using Exp3 = std::array<int, 3>;

// Ordinary polynomial in the three invariant variables z, r, zbar with exact
// integer coefficients, keyed by the exponent triple.
class TriPoly {
 public:
  using TermMap = std::map<Exp3, Int>;

  TriPoly() = default;
  static TriPoly constant(Int c);
  static TriPoly monomial(const Exp3& e, Int c = 1);
  static TriPoly variable(int axis);  // 0 -> z, 1 -> r, 2 -> zbar

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Int coeff(const Exp3& e) const;

  void add_term(const Exp3& e, const Int& c);

  // Swaps z and zbar; an involution on the type.
  TriPoly bar() const;
  std::complex<double> eval(std::complex<double> z, std::complex<double> r,
                            std::complex<double> zb) const;

  TriPoly& operator+=(const TriPoly& o);
  TriPoly& operator-=(const TriPoly& o);
  TriPoly& operator*=(const Int& c);
  friend TriPoly operator+(TriPoly a, const TriPoly& b) { return a += b; }
  friend TriPoly operator-(TriPoly a, const TriPoly& b) { return a -= b; }
  friend TriPoly operator*(const TriPoly& a, const TriPoly& b);
  friend TriPoly operator*(const Int& c, TriPoly p) { return p *= c; }
  bool operator==(const TriPoly&) const = default;

 private:
  TermMap terms_;
};

// Parses "z^2 - 2r + 4zzb - 1" style text: integer coefficients, variables
// z, r, zb, optional ^exponent, juxtaposition means multiplication.
TriPoly parse_tri(std::string_view text);
std::string to_plain_string(const TriPoly& p);   // same syntax parse_tri reads
std::string to_latex(const TriPoly& p);          // z, r, \bar{z}

// Conversion between the invariant polynomial ring and Weyl-invariant Laurent
// polynomials.  Monomial expansions are memoized; public entry points are
// serialized internally, so a shared reducer is safe to use across threads.
class InvariantReducer {
 public:
  explicit InvariantReducer(const RootData& rd) : rd_(rd) {}

  const RootData& root_data() const { return rd_; }

  // Substitutes the fundamental orbit sums for the variables; a ring map.
  LaurentPoly tri_to_laurent(const TriPoly& p);

  // Inverse on the invariant subring by triangular elimination of the
  // highest surviving dominant weight.  Throws NonInvariantInput when the
  // argument is not constant on orbits.  When reduction_trace is supplied it
  // receives the dominant weights in elimination order.
  TriPoly laurent_to_tri(const LaurentPoly& p,
                         std::vector<WeightCoord>* reduction_trace = nullptr);

  // laurent_to_tri(orbit_sum(n)) for dominant n.
  TriPoly chebyshev_first(const WeightCoord& n);

  // Exact expansion of orbit_sum(lambda_i) * orbit_sum(n) as a multiplicity
  // map over dominant weights; i is 1-based.
  std::map<WeightCoord, Int> product_decomposition(int i, const WeightCoord& n);

 private:
  const LaurentPoly& monomial_expansion(const Exp3& e);  // caller holds mu_

  const RootData& rd_;
  std::map<Exp3, LaurentPoly> cache_;
  std::mutex mu_;
};

}  // namespace cheb3

#endif
