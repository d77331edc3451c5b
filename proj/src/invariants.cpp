#include "cheb3/invariants.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "cheb3/errors.hpp"

namespace cheb3 {

TriPoly TriPoly::constant(Int c) {
  TriPoly p;
  p.add_term(Exp3{0, 0, 0}, c);
  return p;
}

TriPoly TriPoly::monomial(const Exp3& e, Int c) {
  TriPoly p;
  p.add_term(e, c);
  return p;
}

TriPoly TriPoly::variable(int axis) {
  Exp3 e{0, 0, 0};
  e.at(axis) = 1;
  return monomial(e);
}

Int TriPoly::coeff(const Exp3& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Int(0) : it->second;
}

void TriPoly::add_term(const Exp3& e, const Int& c) {
  if (c == 0) return;
  if (e[0] < 0 || e[1] < 0 || e[2] < 0)
    throw std::invalid_argument("TriPoly exponents must be nonnegative");
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TriPoly TriPoly::bar() const {
  TriPoly out;
  for (const auto& [e, c] : terms_) out.add_term(Exp3{e[2], e[1], e[0]}, c);
  return out;
}

std::complex<double> TriPoly::eval(std::complex<double> z, std::complex<double> r,
                                   std::complex<double> zb) const {
  std::complex<double> s = 0.0;
  for (const auto& [e, c] : terms_) {
    std::complex<double> t = c.get_d();
    for (int k = 0; k < e[0]; ++k) t *= z;
    for (int k = 0; k < e[1]; ++k) t *= r;
    for (int k = 0; k < e[2]; ++k) t *= zb;
    s += t;
  }
  return s;
}

TriPoly& TriPoly::operator+=(const TriPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

TriPoly& TriPoly::operator-=(const TriPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

TriPoly& TriPoly::operator*=(const Int& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

TriPoly operator*(const TriPoly& a, const TriPoly& b) {
  TriPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      out.add_term(Exp3{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
  return out;
}

TriPoly parse_tri(std::string_view text) {
  TriPoly out;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto parse_uint = [&]() -> Int {
    std::string digits;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      digits += text[i++];
    return Int(digits);
  };

  skip_ws();
  if (i >= text.size()) throw std::invalid_argument("empty polynomial text");
  bool first = true;
  while (skip_ws(), i < text.size()) {
    int sign = 1;
    if (text[i] == '+') {
      ++i;
    } else if (text[i] == '-') {
      sign = -1;
      ++i;
    } else if (!first) {
      throw std::invalid_argument("expected '+' or '-' between terms: " +
                                  std::string(text));
    }
    skip_ws();

    Int coeff = 1;
    bool seen = false;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      coeff = parse_uint();
      seen = true;
    }
    Exp3 e{0, 0, 0};
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip_ws();
      }
      if (i >= text.size()) break;
      int axis;
      if (text[i] == 'z') {
        if (i + 1 < text.size() && text[i + 1] == 'b') {
          axis = 2;
          i += 2;
        } else {
          axis = 0;
          ++i;
        }
      } else if (text[i] == 'r') {
        axis = 1;
        ++i;
      } else {
        break;
      }
      seen = true;
      int k = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
          throw std::invalid_argument("exponent missing after '^': " + std::string(text));
        k = static_cast<int>(parse_uint().get_si());
      }
      e[axis] += k;
    }
    if (!seen)
      throw std::invalid_argument("empty term in polynomial text: " + std::string(text));
    out.add_term(e, sign * coeff);
    first = false;
  }
  return out;
}

namespace {

void render_terms(const TriPoly& p, std::ostream& os, const char* const names[3],
                  bool braced_exponents, bool spaced) {
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Int a = c;
    if (first) {
      if (a < 0) {
        os << '-';
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    const bool has_vars = e != Exp3{0, 0, 0};
    bool emitted = false;
    if (a != 1 || !has_vars) {
      os << a.get_str();
      emitted = true;
    }
    for (int ax = 0; ax < 3; ++ax) {
      if (e[ax] == 0) continue;
      if (spaced && emitted) os << ' ';
      os << names[ax];
      if (e[ax] > 1) {
        if (braced_exponents)
          os << "^{" << e[ax] << '}';
        else
          os << '^' << e[ax];
      }
      emitted = true;
    }
    first = false;
  }
}

}  // namespace

std::string to_plain_string(const TriPoly& p) {
  if (p.is_zero()) return "0";
  static const char* const names[3] = {"z", "r", "zb"};
  std::ostringstream os;
  render_terms(p, os, names, false, false);
  return os.str();
}

std::string to_latex(const TriPoly& p) {
  if (p.is_zero()) return "0";
  static const char* const names[3] = {"z", "r", "\\bar{z}"};
  std::ostringstream os;
  render_terms(p, os, names, true, true);
  return os.str();
}

LaurentPoly InvariantReducer::tri_to_laurent(const TriPoly& p) {
  std::scoped_lock lock(mu_);
  LaurentPoly out;
  for (const auto& [e, c] : p.terms()) out += c * monomial_expansion(e);
  return out;
}

const LaurentPoly& InvariantReducer::monomial_expansion(const Exp3& e) {
  auto it = cache_.find(e);
  if (it != cache_.end()) return it->second;

  LaurentPoly value;
  int axis = -1;
  for (int a = 0; a < 3; ++a)
    if (e[a] > 0) axis = a;
  if (axis < 0) {
    value = LaurentPoly::constant(1);
  } else if (axis >= rd_.rank()) {
    throw std::invalid_argument("invariant variable beyond the rank");
  } else {
    Exp3 prev = e;
    --prev[axis];
    WeightCoord unit{};
    unit.n[axis] = 1;
    // std::map nodes are stable, so the recursion cannot invalidate `base`.
    const LaurentPoly& base = monomial_expansion(prev);
    value = base * orbit_sum(rd_, unit);
  }
  return cache_.emplace(e, std::move(value)).first->second;
}

TriPoly InvariantReducer::laurent_to_tri(const LaurentPoly& p,
                                         std::vector<WeightCoord>* reduction_trace) {
  std::scoped_lock lock(mu_);

  // Group the terms by dominant representative.  Constant coefficients on
  // full orbits are exactly what Weyl invariance means; anything else is
  // rejected up front.
  std::map<WeightCoord, std::pair<Int, long>> groups;
  for (const auto& [mu, c] : p.terms()) {
    WeightCoord d = rd_.dominant_representative(mu).first;
    auto [it, fresh] = groups.emplace(d, std::make_pair(c, 1L));
    if (!fresh) {
      if (it->second.first != c)
        throw NonInvariantInput("coefficients differ on the orbit of " + to_string(d));
      ++it->second.second;
    }
  }
  const long group_order = static_cast<long>(rd_.group().size());
  std::map<WeightCoord, Int> residual;
  for (const auto& [d, cc] : groups) {
    if (cc.second * rd_.stabilizer_order(d) != group_order)
      throw NonInvariantInput("orbit of " + to_string(d) + " is incomplete");
    residual.emplace(d, cc.first);
  }

  // Triangular elimination: the expansion of z^a r^b zb^c carries the weight
  // (a,b,c) with coefficient 1 and everything else strictly lower in the
  // height key, so killing the highest dominant weight each round terminates.
  TriPoly out;
  while (!residual.empty()) {
    auto top = residual.begin();
    for (auto it = std::next(residual.begin()); it != residual.end(); ++it) {
      long hi = RootData::height_key(it->first), ht = RootData::height_key(top->first);
      if (hi > ht || (hi == ht && top->first < it->first)) top = it;
    }
    const WeightCoord d = top->first;
    const Int c = top->second;
    const Exp3 e{d.n[0], d.n[1], d.n[2]};
    if (reduction_trace) reduction_trace->push_back(d);
    out.add_term(e, c);

    const LaurentPoly& exp = monomial_expansion(e);
    for (const auto& [mu, m] : exp.terms()) {
      if (!rd_.is_dominant(mu)) continue;
      auto it = residual.find(mu);
      if (it == residual.end()) it = residual.emplace(mu, 0).first;
      it->second -= c * m;
      if (it->second == 0) residual.erase(it);
    }
  }
  return out;
}

TriPoly InvariantReducer::chebyshev_first(const WeightCoord& n) {
  if (!rd_.is_dominant(n))
    throw NonDominantIndex("index " + to_string(n) + " is not dominant");
  return laurent_to_tri(orbit_sum(rd_, n));
}

std::map<WeightCoord, Int> InvariantReducer::product_decomposition(
    int i, const WeightCoord& n) {
  if (i < 1 || i > rd_.rank())
    throw std::invalid_argument("generator index out of range");
  if (!rd_.is_dominant(n))
    throw NonDominantIndex("index " + to_string(n) + " is not dominant");

  WeightCoord unit{};
  unit.n[i - 1] = 1;
  const LaurentPoly prod = orbit_sum(rd_, unit) * orbit_sum(rd_, n);

  std::map<WeightCoord, std::pair<Int, long>> groups;
  for (const auto& [mu, c] : prod.terms()) {
    WeightCoord d = rd_.dominant_representative(mu).first;
    auto [it, fresh] = groups.emplace(d, std::make_pair(c, 1L));
    if (!fresh) {
      if (it->second.first != c)
        throw NonInvariantInput("orbit product is not invariant at " + to_string(d));
      ++it->second.second;
    }
  }
  const long group_order = static_cast<long>(rd_.group().size());
  std::map<WeightCoord, Int> dec;
  for (const auto& [d, cc] : groups) {
    if (cc.second * rd_.stabilizer_order(d) != group_order)
      throw NonInvariantInput("orbit product misses part of the orbit of " + to_string(d));
    dec.emplace(d, cc.first);
  }
  return dec;
}

}  // namespace cheb3
