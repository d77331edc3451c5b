#include "cheb3/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "cheb3/errors.hpp"

namespace cheb3 {

std::int64_t dot16(const EVector& a, const EVector& b) {
  std::int64_t s = 0;
  for (int i = 0; i < 4; ++i) s += a.q[i] * b.q[i];
  return s;
}

std::string to_string(const WeightCoord& w) {
  std::ostringstream os;
  os << '(' << w.n[0] << ',' << w.n[1] << ',' << w.n[2] << ')';
  return os.str();
}

WeylElement compose(const WeylElement& a, const WeylElement& b) {
  WeylElement c;
  for (int i = 0; i < 4; ++i) c.perm[i] = a.perm[b.perm[i]];
  c.parity = a.parity * b.parity;
  return c;
}

WeylElement inverse(const WeylElement& w) {
  WeylElement v;
  for (int i = 0; i < 4; ++i) v.perm[w.perm[i]] = static_cast<std::uint8_t>(i);
  v.parity = w.parity;
  return v;
}

namespace {

int permutation_parity(const std::array<std::uint8_t, 4>& p) {
  int inv = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (p[i] > p[j]) ++inv;
  return (inv % 2 == 0) ? 1 : -1;
}

}  // namespace

RootData RootData::build(int rank) {
  if (rank != 1 && rank != 3)
    throw UnsupportedRank("root data only built for rank 1 or 3");

  RootData rd;
  rd.rank_ = rank;
  for (int i = 0; i < rank; ++i) {
    EVector alpha{};
    alpha.q[i] = 4;
    alpha.q[i + 1] = -4;
    rd.simple_roots_.push_back(alpha);
  }

  if (rank == 1) {
    rd.weights_ = {EVector{{2, -2, 0, 0}}};
  } else {
    rd.weights_ = {EVector{{3, -1, -1, -1}},
                   EVector{{2, 2, -2, -2}},
                   EVector{{1, 1, 1, -3}}};
  }
  rd.rho_ = EVector{};
  for (const auto& w : rd.weights_) rd.rho_ = rd.rho_ + w;
  for (int i = 0; i < rank; ++i) rd.rho_w_.n[i] = 1;

  // The group permutes the first rank+1 coordinates and fixes the rest.
  std::array<std::uint8_t, 4> p{0, 1, 2, 3};
  std::sort(p.begin(), p.begin() + rank + 1);
  do {
    rd.group_.push_back({p, permutation_parity(p)});
  } while (std::next_permutation(p.begin(), p.begin() + rank + 1));
  std::sort(rd.group_.begin(), rd.group_.end());

  for (int i = 0; i < rank; ++i) {
    WeylElement g;
    std::swap(g.perm[i], g.perm[i + 1]);
    g.parity = -1;
    rd.gens_.push_back(g);
  }
  return rd;
}

EVector RootData::weight_to_e(const WeightCoord& w) const {
  EVector v{};
  for (int i = 0; i < 3; ++i) {
    if (i >= rank_) {
      if (w.n[i] != 0)
        throw std::invalid_argument("weight coordinate beyond the rank must be zero");
      continue;
    }
    for (int j = 0; j < 4; ++j) v.q[j] += w.n[i] * weights_[i].q[j];
  }
  return v;
}

WeightCoord RootData::e_to_weight(const EVector& v) const {
  WeightCoord w{};
  for (int i = 0; i < rank_; ++i) {
    std::int64_t d = v.q[i] - v.q[i + 1];
    if (d % 4 != 0)
      throw std::invalid_argument("vector is not in the weight lattice");
    w.n[i] = static_cast<int>(d / 4);
  }
  return w;
}

WeightCoord RootData::act_weight(const WeylElement& w, const WeightCoord& m) const {
  return e_to_weight(w.apply(weight_to_e(m)));
}

bool RootData::is_dominant(const WeightCoord& m) const {
  for (int i = 0; i < rank_; ++i)
    if (m.n[i] < 0) return false;
  return true;
}

std::vector<WeightCoord> RootData::orbit(const WeightCoord& m) const {
  std::set<WeightCoord> pts;
  for (const auto& w : group_) pts.insert(act_weight(w, m));
  return {pts.begin(), pts.end()};
}

int RootData::stabilizer_order(const WeightCoord& m) const {
  int c = 0;
  for (const auto& w : group_)
    if (act_weight(w, m) == m) ++c;
  return c;
}

std::pair<WeightCoord, WeylElement> RootData::dominant_representative(
    const WeightCoord& m) const {
  // Finite descent: reflecting in a wall with a negative coordinate raises
  // the height key by 2|n_i|, so the loop terminates at the dominant point.
  WeightCoord x = m;
  WeylElement w;
  for (;;) {
    int i = 0;
    while (i < rank_ && x.n[i] >= 0) ++i;
    if (i == rank_) return {x, w};
    x = act_weight(gens_[i], x);
    w = compose(gens_[i], w);
  }
}

}  // namespace cheb3
