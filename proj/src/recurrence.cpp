#include "cheb3/recurrence.hpp"

#include <sstream>
#include <stdexcept>

#include "cheb3/errors.hpp"

namespace cheb3 {

std::string to_string(RecurrenceStatus s) {
  switch (s) {
    case RecurrenceStatus::holds:
      return "holds";
    case RecurrenceStatus::holds_under_scaling:
      return "holds-under-scaling";
    case RecurrenceStatus::fails:
      return "fails";
  }
  return "?";
}

const std::array<PublishedRule, 3>& published_rules() {
  static const std::array<PublishedRule, 3> rules = {{
      {1,
       0,
       4,
       {{1, 0, 0}},
       {WeightCoord{{-1, 0, 1}}, WeightCoord{{0, 1, -1}}, WeightCoord{{0, -1, 0}}}},
      {2,
       1,
       6,
       {{0, 1, 0}},
       {WeightCoord{{1, -1, 1}}, WeightCoord{{-1, 0, 1}}, WeightCoord{{1, 0, -1}},
        WeightCoord{{-1, 1, -1}}, WeightCoord{{0, -1, 0}}}},
      {3,
       2,
       4,
       {{0, 0, 1}},
       {WeightCoord{{0, 1, -1}}, WeightCoord{{1, -1, 0}}, WeightCoord{{-1, 0, 0}}}},
  }};
  return rules;
}

bool RecurrenceReport::ring_all_zero() const {
  for (const auto& inst : ring)
    if (!inst.zero) return false;
  return true;
}

namespace {

const TriPoly& lookup(const RootData& rd, const SeriesTable& table,
                      const WeightCoord& nu) {
  const WeightCoord dom = rd.dominant_representative(nu).first;
  for (int a = 0; a < 3; ++a)
    if (dom.n[a] > table.caps[a])
      throw std::invalid_argument("table too small: lookup at " + to_string(dom) +
                                  " exceeds caps");
  return table.at(dom);
}

}  // namespace

RecurrenceReport check_recurrences(const RootData& rd, InvariantReducer& reducer,
                                   const SeriesTable& table, const Exp3& caps) {
  if (rd.rank() != 3)
    throw UnsupportedRank("recurrence checks run on the rank-3 system");
  for (int a = 0; a < 3; ++a)
    if (table.caps[a] < caps[a] + 1)
      throw std::invalid_argument(
          "recurrence checks need the table to cover caps plus one index of margin");

  RecurrenceReport report;
  report.caps = caps;

  WeightCoord base{};
  for (base.n[0] = 0; base.n[0] <= caps[0]; ++base.n[0])
    for (base.n[1] = 0; base.n[1] <= caps[1]; ++base.n[1])
      for (base.n[2] = 0; base.n[2] <= caps[2]; ++base.n[2]) {
        const TriPoly& t_base = table.at(base);

        for (const auto& rule : published_rules()) {
          const TriPoly lead =
              Int(rule.factor) * (TriPoly::variable(rule.variable) * t_base);
          TriPoly rest = lookup(rd, table, base + rule.target);
          for (const auto& s : rule.subtract) rest += lookup(rd, table, base + s);

          PublishedInstance inst;
          inst.rule = rule.id;
          inst.base = base;
          inst.residual = lead - rest;
          inst.status = RecurrenceStatus::fails;
          for (const auto& [num, den] : kScalings) {
            // sigma * lead - rest == 0, cleared of denominators.
            TriPoly scaled = Int(num) * lead - Int(den) * rest;
            if (!scaled.is_zero()) continue;
            inst.scaling = {num, den};
            inst.status = (den == 1) ? RecurrenceStatus::holds
                                     : RecurrenceStatus::holds_under_scaling;
            break;
          }
          report.published.push_back(std::move(inst));
        }

        for (int i = 1; i <= 3; ++i) {
          RingInstance inst;
          inst.rule = i;
          inst.base = base;
          inst.residual = TriPoly::variable(i - 1) * t_base;
          for (const auto& [d, mult] : reducer.product_decomposition(i, base))
            inst.residual -= mult * lookup(rd, table, d);
          inst.zero = inst.residual.is_zero();
          report.ring.push_back(std::move(inst));
        }
      }

  // A nonzero leading product satisfies at most one scaling, so each instance
  // contributes to exactly one counter and the aggregate is unambiguous: a
  // rule earns a verdict only when one scaling works across the whole box.
  for (int i = 0; i < 3; ++i) {
    RuleDetermination det;
    det.rule = i + 1;
    for (const auto& inst : report.published) {
      if (inst.rule != i + 1) continue;
      ++det.total;
      if (inst.status == RecurrenceStatus::holds)
        ++det.zero_counts[0];
      else if (inst.status == RecurrenceStatus::holds_under_scaling)
        ++det.zero_counts[inst.scaling.second == 4 ? 1 : 2];
    }
    det.status = RecurrenceStatus::fails;
    for (std::size_t s = 0; s < kScalings.size(); ++s) {
      if (det.total > 0 && det.zero_counts[s] == det.total) {
        det.status = (s == 0) ? RecurrenceStatus::holds
                              : RecurrenceStatus::holds_under_scaling;
        det.scaling = kScalings[s];
        break;
      }
    }
    report.determinations[i] = det;
  }
  return report;
}

namespace {

// Univariate integer polynomials in x, for the rank-1 calibration.
using XPoly = std::map<int, Int>;

void xp_add(XPoly& p, int e, const Int& c) {
  if (c == 0) return;
  auto [it, fresh] = p.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

XPoly xp_sub(XPoly a, const XPoly& b) {
  for (const auto& [e, c] : b) xp_add(a, e, -c);
  return a;
}

// 2x * p
XPoly xp_two_x(const XPoly& p) {
  XPoly out;
  for (const auto& [e, c] : p) out.emplace(e + 1, 2 * c);
  return out;
}

std::string xp_str(const XPoly& p) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p) {
    os << (first ? "" : " + ") << c.get_str() << "*x^" << e;
    first = false;
  }
  return os.str();
}

// Substitute z = 2x into a rank-1 invariant polynomial, optionally halving.
bool substitute_z(const TriPoly& p, bool halve, XPoly& out, std::string& err) {
  out.clear();
  for (const auto& [e, c] : p.terms()) {
    if (e[1] != 0 || e[2] != 0) {
      err = "rank-1 polynomial uses a variable beyond z";
      return false;
    }
    Int v = c << e[0];  // c * 2^a
    if (halve) {
      if (!divides(2, v)) {
        err = "coefficient not even after z = 2x";
        return false;
      }
      v /= 2;
    }
    xp_add(out, e[0], v);
  }
  return true;
}

}  // namespace

A1Report a1_calibration(int max_index) {
  A1Report report;
  report.max_index = max_index;

  const RootData rd = RootData::build(1);
  InvariantReducer reducer(rd);

  // Pipeline route: orbit sums for the first kind, alternating quotients for
  // the second, both reduced to z and mapped through z = 2x.
  std::vector<XPoly> t_pipe, u_pipe;
  for (int n = 0; n <= max_index; ++n) {
    const WeightCoord idx{{n, 0, 0}};
    TriPoly tn = reducer.chebyshev_first(idx);
    TriPoly un = reducer.laurent_to_tri(
        antisym_quotient(rd, alt_trace(rd, idx + rd.weyl_vector_weight())));
    XPoly tx, ux;
    std::string err;
    if (!substitute_z(tn, n >= 1, tx, err)) {
      report.failures.push_back("T[" + std::to_string(n) + "]: " + err);
      continue;
    }
    if (!substitute_z(un, false, ux, err)) {
      report.failures.push_back("U[" + std::to_string(n) + "]: " + err);
      continue;
    }
    t_pipe.push_back(std::move(tx));
    u_pipe.push_back(std::move(ux));
  }

  // Classical oracle tables straight from the three-term recurrence.
  std::vector<XPoly> t_cls(max_index + 1), u_cls(max_index + 1);
  t_cls[0] = {{0, 1}};
  u_cls[0] = {{0, 1}};
  if (max_index >= 1) {
    t_cls[1] = {{1, 1}};
    u_cls[1] = {{1, 2}};
    for (int n = 1; n < max_index; ++n) {
      t_cls[n + 1] = xp_sub(xp_two_x(t_cls[n]), t_cls[n - 1]);
      u_cls[n + 1] = xp_sub(xp_two_x(u_cls[n]), u_cls[n - 1]);
    }
  }

  if (t_pipe.size() == static_cast<std::size_t>(max_index + 1)) {
    for (int n = 0; n <= max_index; ++n) {
      if (t_pipe[n] != t_cls[n])
        report.failures.push_back("T[" + std::to_string(n) + "] pipeline " +
                                  xp_str(t_pipe[n]) + " != classical " +
                                  xp_str(t_cls[n]));
      if (u_pipe[n] != u_cls[n])
        report.failures.push_back("U[" + std::to_string(n) + "] pipeline " +
                                  xp_str(u_pipe[n]) + " != classical " +
                                  xp_str(u_cls[n]));
    }
  }

  report.pass = report.failures.empty();
  return report;
}

}  // namespace cheb3
