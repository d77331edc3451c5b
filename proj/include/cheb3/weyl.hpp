#ifndef CHEB3_WEYL_HPP
#define CHEB3_WEYL_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace cheb3 {

// Vector in E^4 with exact coordinates q[i]/4.  Every root, weight and orbit
// point used here lies in (1/4)Z^4, so a fixed denominator replaces a general
// rational type and all arithmetic stays in integers.
struct EVector {
  std::array<std::int64_t, 4> q{};

  friend EVector operator+(const EVector& a, const EVector& b) {
    return {{a.q[0] + b.q[0], a.q[1] + b.q[1], a.q[2] + b.q[2], a.q[3] + b.q[3]}};
  }
  friend EVector operator-(const EVector& a, const EVector& b) {
    return {{a.q[0] - b.q[0], a.q[1] - b.q[1], a.q[2] - b.q[2], a.q[3] - b.q[3]}};
  }
  EVector operator-() const { return {{-q[0], -q[1], -q[2], -q[3]}}; }
  auto operator<=>(const EVector&) const = default;
};

// 16 * (x, y) under the standard scalar product; exact.
std::int64_t dot16(const EVector& a, const EVector& b);

// Integer coordinates in the fundamental-weight basis.  Rank-1 data lives in
// the first slot with the other two pinned to zero.
struct WeightCoord {
  std::array<int, 3> n{};

  int operator[](std::size_t i) const { return n[i]; }
  auto operator<=>(const WeightCoord&) const = default;
  friend WeightCoord operator+(const WeightCoord& a, const WeightCoord& b) {
    return {{a.n[0] + b.n[0], a.n[1] + b.n[1], a.n[2] + b.n[2]}};
  }
  friend WeightCoord operator-(const WeightCoord& a, const WeightCoord& b) {
    return {{a.n[0] - b.n[0], a.n[1] - b.n[1], a.n[2] - b.n[2]}};
  }
  WeightCoord operator-() const { return {{-n[0], -n[1], -n[2]}}; }
};

std::string to_string(const WeightCoord& w);

// Signed permutation action on E^4: e_i -> e_{perm[i]}.
struct WeylElement {
  std::array<std::uint8_t, 4> perm{0, 1, 2, 3};
  int parity = 1;

  EVector apply(const EVector& x) const {
    EVector y;
    for (int i = 0; i < 4; ++i) y.q[perm[i]] = x.q[i];
    return y;
  }
  auto operator<=>(const WeylElement&) const = default;
};

// a after b: (a*b).apply(x) == a.apply(b.apply(x)).
WeylElement compose(const WeylElement& a, const WeylElement& b);
WeylElement inverse(const WeylElement& w);

// Root/weight data for the rank-1 or rank-3 system, realized in E^4, plus the
// full reflection group as explicit permutations.
class RootData {
 public:
  static RootData build(int rank);

  int rank() const { return rank_; }
  const std::vector<EVector>& simple_roots() const { return simple_roots_; }
  // All roots have squared length 2, so coroots coincide with roots.
  const std::vector<EVector>& coroots() const { return simple_roots_; }
  const std::vector<EVector>& fundamental_weights() const { return weights_; }
  const EVector& weyl_vector() const { return rho_; }
  WeightCoord weyl_vector_weight() const { return rho_w_; }
  const std::vector<WeylElement>& group() const { return group_; }
  const WeylElement& generator(int i) const { return gens_.at(i); }

  EVector weight_to_e(const WeightCoord& w) const;
  WeightCoord e_to_weight(const EVector& v) const;

  WeightCoord act_weight(const WeylElement& w, const WeightCoord& m) const;
  bool is_dominant(const WeightCoord& m) const;
  std::vector<WeightCoord> orbit(const WeightCoord& m) const;  // sorted, unique
  int stabilizer_order(const WeightCoord& m) const;
  // Returns the dominant point of the orbit together with an element mapping
  // the argument onto it.
  std::pair<WeightCoord, WeylElement> dominant_representative(const WeightCoord& m) const;

  // 3n1 + 4n2 + 3n3: twice the root-basis height.  Strictly maximal at the
  // dominant point of every orbit, which is what the triangular reductions
  // lean on.
  static long height_key(const WeightCoord& m) {
    return 3L * m.n[0] + 4L * m.n[1] + 3L * m.n[2];
  }

 private:
  int rank_ = 0;
  std::vector<EVector> simple_roots_;
  std::vector<EVector> weights_;
  EVector rho_{};
  WeightCoord rho_w_{};
  std::vector<WeylElement> group_;
  std::vector<WeylElement> gens_;
};

}  // namespace cheb3

#endif
