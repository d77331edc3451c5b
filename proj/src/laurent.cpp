#include "cheb3/laurent.hpp"

#include <cmath>
#include <numbers>

namespace cheb3 {

LaurentPoly LaurentPoly::constant(Int c) {
  LaurentPoly p;
  p.add_term(WeightCoord{}, c);
  return p;
}

LaurentPoly LaurentPoly::monomial(const WeightCoord& mu, Int c) {
  LaurentPoly p;
  p.add_term(mu, c);
  return p;
}

Int LaurentPoly::coeff(const WeightCoord& mu) const {
  auto it = terms_.find(mu);
  return it == terms_.end() ? Int(0) : it->second;
}

Int LaurentPoly::coefficient_sum() const {
  Int s = 0;
  for (const auto& [mu, c] : terms_) s += c;
  return s;
}

void LaurentPoly::add_term(const WeightCoord& mu, const Int& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(mu, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [mu, c] : o.terms_) add_term(mu, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [mu, c] : o.terms_) add_term(mu, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Int& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mu, v] : terms_) v *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [mu, ca] : a.terms_)
    for (const auto& [nu, cb] : b.terms_) out.add_term(mu + nu, ca * cb);
  return out;
}

LaurentPoly orbit_sum(const RootData& rd, const WeightCoord& m) {
  LaurentPoly p;
  for (const auto& mu : rd.orbit(m)) p.add_term(mu, 1);
  return p;
}

LaurentPoly orbit_trace(const RootData& rd, const WeightCoord& m) {
  LaurentPoly p;
  for (const auto& w : rd.group()) p.add_term(rd.act_weight(w, m), 1);
  return p;
}

LaurentPoly alt_trace(const RootData& rd, const WeightCoord& m) {
  LaurentPoly p;
  for (const auto& w : rd.group()) p.add_term(rd.act_weight(w, m), w.parity);
  return p;
}

std::complex<double> eval_numeric(const LaurentPoly& p, const EvalPoint& at) {
  std::complex<double> s = 0.0;
  for (const auto& [mu, c] : p.terms()) {
    double phase = 0.0;
    for (int j = 0; j < 3; ++j) phase += mu.n[j] * at.phi[j];
    s += c.get_d() * std::exp(std::complex<double>(0.0, 2.0 * std::numbers::pi * phase));
  }
  return s;
}

}  // namespace cheb3
