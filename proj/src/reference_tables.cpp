#include "cheb3/reference_tables.hpp"

namespace cheb3::reference {

namespace {

std::map<Exp3, TriPoly> parse_cells(
    std::initializer_list<std::pair<Exp3, const char*>> rows) {
  std::map<Exp3, TriPoly> out;
  for (const auto& [idx, text] : rows) out.emplace(idx, parse_tri(text));
  return out;
}

std::map<WeightCoord, TriPoly> parse_polys(
    std::initializer_list<std::pair<Exp3, const char*>> rows) {
  std::map<WeightCoord, TriPoly> out;
  for (const auto& [idx, text] : rows)
    out.emplace(WeightCoord{idx}, parse_tri(text));
  return out;
}

}  // namespace

const std::array<std::vector<TriPoly>, 3>& denominator_factors() {
  static const std::array<std::vector<TriPoly>, 3> z = {{
      {parse_tri("1"), parse_tri("-z"), parse_tri("r"), parse_tri("-zb"),
       parse_tri("1")},
      {parse_tri("1"), parse_tri("-r"), parse_tri("zzb - 1"),
       parse_tri("-z^2 - zb^2 + 2r"), parse_tri("zzb - 1"), parse_tri("-r"),
       parse_tri("1")},
      {parse_tri("1"), parse_tri("-zb"), parse_tri("r"), parse_tri("-z"),
       parse_tri("1")},
  }};
  return z;
}

const std::map<Exp3, TriPoly>& first_kind_numerator() {
  static const std::map<Exp3, TriPoly> k = parse_cells({
      {{0, 0, 0}, "24"},
      {{0, 0, 1}, "-18zb"},
      {{0, 0, 2}, "12r"},
      {{0, 0, 3}, "-6z"},
      {{0, 1, 0}, "-20r"},
      {{0, 1, 1}, "16rzb - 6z"},
      {{0, 1, 2}, "-12r^2 + 4zzb + 8"},
      {{0, 1, 3}, "-6zb + 6rz"},
      {{0, 2, 0}, "16zzb - 16"},
      {{0, 2, 1}, "20zb + 4rz - 14zzb^2"},
      {{0, 2, 2}, "10rzzb - 6z^2 - 6zb^2 - 8r"},
      {{0, 2, 3}, "-6zbz^2 + 4rzb + 12z"},
      {{0, 3, 0}, "24r - 12z^2 - 12zb^2"},
      {{0, 3, 1}, "10z^2zb - 28rzb - 6z + 12zb^3"},
      {{0, 3, 2}, "-8z^2r - 83zb^2r + 16r^2 + 16zzb - 16"},
      {{0, 3, 3}, "6z^3 - 16rz + 4zb^2z - 4zb"},
      {{0, 4, 0}, "8zzb - 8"},
      {{0, 4, 1}, "4rz + 14zb - 8zb^2z"},
      {{0, 4, 2}, "-6zb^2 - 6z^2 - 4r + 6zrzb"},
      {{0, 4, 3}, "10z + 4zbr - 4z^2zb"},
      {{0, 5, 0}, "-4r"},
      {{0, 5, 1}, "-6z + 4rzb"},
      {{0, 5, 2}, "-4r^2 + 4zzb - 8"},
      {{0, 5, 3}, "12zr - 6zb"},
      {{1, 0, 1}, "14zzb - 8"},
      {{1, 0, 2}, "-10zr + 6zb"},
      {{1, 0, 3}, "6z^2 - 4r"},
      {{1, 1, 1}, "12r + 3z^2 + 3zb^2 - 13zzbr"},
      {{1, 1, 2}, "10r^2z - 10z - 2z^2zb - 8rzb"},
      {{1, 1, 3}, "4r^2 - 6z^2r + 4zzb + 8"},
      {{1, 2, 1}, "12z^2zb^2 - 2zb^2r - 2z^2r - 4r^2 - 24zzb"},
      {{1, 2, 2}, "-4zb + 3z^3 + 16zr - 9z^2zbr + 7zzb^2 + 2zbr^2"},
      {{1, 2, 3}, "6z^3zb - 8r - 7rzzb + 3zb^2 - 9z^2"},
      {{1, 3, 1}, "-10zb^3z - 10z^3zb + 7zb^2 + 7z^2 - 8r + 29rzzb"},
      {{1, 3, 2}, "8z^3r + 12z - 3zb^3 + 7zzb^2r - 15z^2zb - 18r^2z + 4zbr"},
      {{1, 3, 3}, "-6z^4 - 4zb^2z^2 + 2zb^2r + 18z^2r + 4zzb - 4r^2"},
      {{1, 4, 1}, "8z^2zb^2 - 11zzb - 4z^2r - 4zb^2r + 4r^2 + 8"},
      {{1, 4, 2}, "-2zb + 6z^3 - 6z^2zbr + 2zbr^2 + 8zzb^2 + 2zr"},
      {{1, 4, 3}, "4z^3zb - 5zzbr - 13z^2 - 3zb^2 + 12r"},
      {{1, 5, 1}, "-4r + 6z^2 + 6zb^2 - 4rzzb"},
      {{1, 5, 2}, "4r^2z - 2z - 4z^2zb - 4rzb"},
      {{1, 5, 3}, "-2z^2r + 8zzb - 8"},
      {{2, 0, 2}, "8r^2 - 4zzb - 8"},
      {{2, 0, 3}, "-4zr + 6zb"},
      {{2, 1, 2}, "-8r^3 + 5rzzb + 3z^2 + 3zb^2 + 12r"},
      {{2, 1, 3}, "4zr^2 - 8rzb - 6z"},
      {{2, 2, 2}, "7r^2zzb - 2z^2zb^2 - 5rz^2 - 5rzb^2 - 8r^2 - 8zzb + 16"},
      {{2, 2, 3}, "-4zb - 4rz^2zb + 4zzb^2 + 12zr + 2r^2zb"},
      {{2, 3, 2},
       "-6r^2z^2 - 6r^2zb^2 - 24r + 4z^2 + 4zb^2 + 2zb^3z + 2z^3zb + 12r^3 + "
       "12rzzb"},
      {{2, 3, 3}, "3zb^2zr - 10r^2z - 7zbz^2 + 4z^3r - 3zb^3 + 4rzb + 4z"},
      {{2, 4, 2}, "24zzbr^2 - 2z^2zb^2 - 7z^2r - 7zb^2r + 4zzb - 8"},
      {{2, 4, 3}, "-3rz^2zb + 5zzb^2 + 3z^3 + 2r^2zb - 2zb"},
      {{2, 5, 2}, "-4r^3 + 12r + 7rzzb - 3z^2 - 3zb^2"},
      {{2, 5, 3}, "2r^2z - 2zbz^2 - 4rzb + 2z"},
      {{3, 0, 3}, "2zzb - 8"},
      {{3, 1, 3}, "-2rzzb + 12r"},
      {{3, 2, 3}, "2z^2zb^2 - 8zzb - 4r^2 + 8zzb"},
      {{3, 3, 3}, "-2zbz^3 - 2zzb^3 + 7rzzb + 5z^2 + 5zb^2 - 8r"},
      {{3, 4, 3}, "2z^2zb^2 - 2rzb^2 - 2rz^2 + 4r^2 - 10zzb + 8"},
      {{3, 5, 3}, "-1rzzb + 3z^2 + 3zb^2 - 4r"},
  });
  return k;
}

const std::vector<Exp3>& suspect_numerator_entries() {
  static const std::vector<Exp3> s = {{0, 3, 2}, {3, 2, 3}, {3, 5, 3}};
  return s;
}

const std::map<WeightCoord, TriPoly>& first_kind_polys() {
  static const std::map<WeightCoord, TriPoly> t = parse_polys({
      {{0, 0, 0}, "1"},
      {{1, 0, 0}, "z"},
      {{0, 1, 0}, "r"},
      {{2, 0, 0}, "z^2 - 2r"},
      {{1, 1, 0}, "rz - 3zb"},
      {{1, 0, 1}, "zzb - 4"},
      {{0, 2, 0}, "2 - 2zzb + r^2"},
      {{3, 0, 0}, "3zb - 3rz + z^3"},
      {{2, 1, 0}, "-2r^2 + z^2r - zzb + 4"},
      {{2, 0, 1}, "-2zbr + zbz^2 - z"},
      {{1, 2, 0}, "5z - 2zbz^2 + r^2z - zbr"},
      {{1, 1, 1}, "rzzb - 3zb^2 + 4r - 3z^2"},
      {{0, 3, 0}, "-3rzzb - 3r + 3z^2 + 3zb^2 + r^3"},
      {{4, 0, 0}, "4zzb - 4z^2r + z^4 + 2r^2 - 4"},
      {{3, 1, 0}, "5zbr - 3r^2z + z^3r - zbz^2 + z"},
      {{3, 0, 1}, "3zb^2 - 3rzzb + z^3zb + 2r - z^2"},
      {{2, 2, 0}, "2r + 4rzzb - 2r^3 + 2z^2 - 2z^3zb + r^2z^2 - 3zb^2"},
      {{2, 1, 1}, "-2r^2zb + z^2zbr - zzb^2 - 2zb + 8rz - 3z^3"},
      {{2, 0, 2}, "-2zb^2r + z^2zb^2 + 4r^2 - 2z^2r - 4"},
      {{1, 3, 0}, "-2rz - r^2zb - 3z^2zbr + 3z^3 + 5zzb^2 + zr^3 - 5zb"},
      {{1, 2, 1}, "10zzb - 2z^2zb^2 + r^2zzb - zb^2r - z^2r - 8"},
      {{0, 4, 0}, "6 - 8zzb + 4zb^2r - 4r^2 + 4z^2r + 3z^2zb^2 - 4r^2zzb + r^4"},
  });
  return t;
}

const std::map<WeightCoord, TriPoly>& second_kind_polys() {
  static const std::map<WeightCoord, TriPoly> u = parse_polys({
      {{0, 0, 0}, "1"},
      {{1, 0, 0}, "z"},
      {{0, 1, 0}, "r"},
      {{2, 0, 0}, "-r + z^2"},
      {{1, 1, 0}, "zr - zb"},
      {{1, 0, 1}, "-1 + zzb"},
      {{0, 2, 0}, "-zzb + r^2"},
      {{3, 0, 0}, "zb - 2zr + z^3"},
      {{2, 1, 0}, "-r^2 + rz^2 + 1 - zzb"},
      {{2, 0, 1}, "-zbr + zbz^2 - z"},
      {{1, 2, 0}, "z - zbz^2 + zr^2 - zbr"},
      {{1, 1, 1}, "rzzb - zb^2 - z^2"},
      {{0, 3, 0}, "-r - 2rzzb + z^2 + zb^2 + r^3"},
      {{4, 0, 0}, "-1 + 2zzb + r^2 - 3rz^2 + z^4"},
      {{3, 1, 0}, "2zbr - 2zr^2 + rz^3 - zbz^2 + z"},
      {{3, 0, 1}, "zb^2 - 2rzzb + z^3zb + r - z^2"},
      {{2, 2, 0}, "r - r^3 + z^2 - z^3zb + r^2z^2"},
      {{2, 1, 1}, "zb - zbr^2 + zbrz^2 - zzb^2 + zr - z^3"},
      {{2, 0, 2}, "-zzb + r^2 - rzb^2 - rz^2 + z^2zb^2"},
      {{1, 3, 0}, "-2zbrz^2 + z^3 + 2zzb^2 + zr^3 - zb - zbr^2"},
      {{1, 2, 1}, "-rzb^2 + 3zzb - z^2zb^2 + r^2zzb - 1 - rz^2"},
      {{0, 4, 0}, "2rz^2 + 2rzb^2 - 2r^2 + 1 - 2zzb + z^2zb^2 - 3r^2zzb + r^4"},
  });
  return u;
}

const std::array<std::map<Exp3, long>, 4>& second_kind_numerator_parts() {
  static const std::array<std::map<Exp3, long>, 4> parts = {{
      {{{0, 0, 0}, 1},
       {{0, 2, 0}, -1},
       {{1, 0, 1}, -1},
       {{2, 4, 2}, -1},
       {{2, 3, 0}, -1},
       {{0, 3, 2}, -1},
       {{2, 2, 2}, 1},
       {{2, 1, 0}, 1},
       {{0, 1, 2}, 1},
       {{1, 4, 1}, 1}},
      {{{1, 3, 2}, 1}, {{1, 2, 0}, 1}, {{0, 1, 1}, -1}, {{2, 2, 1}, -1}},
      {{{1, 3, 1}, -1}, {{1, 1, 1}, 1}},
      {{{0, 2, 1}, 1}, {{2, 3, 1}, 1}, {{1, 2, 2}, -1}, {{1, 1, 0}, -1}},
  }};
  return parts;
}

const std::map<Exp3, TriPoly>& second_kind_numerator() {
  static const std::map<Exp3, TriPoly> cells = [] {
    const auto& parts = second_kind_numerator_parts();
    std::map<Exp3, TriPoly> out;
    for (int v = 0; v < 4; ++v) {
      Exp3 var{0, 0, 0};
      if (v > 0) var[v - 1] = 1;  // 1, z, r, zb
      for (const auto& [idx, c] : parts[v])
        out[idx].add_term(var, c);
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
  }();
  return cells;
}

}  // namespace cheb3::reference
