#ifndef CHEB3_TABLE_IO_HPP
#define CHEB3_TABLE_IO_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cheb3/genfun.hpp"
#include "cheb3/invariants.hpp"

namespace cheb3 {

inline constexpr const char* kToolName = "cheb3";
inline constexpr const char* kToolVersion = "0.1.0";

// A serializable snapshot of one generated table.  `kind` is one of
// "first", "second", "K", "L" or "Z"; entries are kept sorted by index so
// that rendering is deterministic.  For "Z" the index encodes (factor, power)
// as (k, t, 0) and the polynomial is the coefficient of p_k^t.
struct TableDocument {
    std::string kind;
    Exp3 caps{0, 0, 0};
    std::vector<std::pair<Exp3, TriPoly>> entries;
    std::string verification;

    bool operator==(const TableDocument&) const = default;
};

TableDocument document_from_series(const std::string& kind, const SeriesTable& table,
                                   std::string verification);
TableDocument document_from_cells(const std::string& kind, const std::map<Exp3, TriPoly>& cells,
                                  const Exp3& caps, std::string verification);
TableDocument document_from_denominators(const std::array<std::vector<TriPoly>, 3>& factors,
                                         std::string verification);

std::string render_json(const TableDocument& doc);
std::string render_latex(const TableDocument& doc);

// Inverse of render_json.  Throws std::invalid_argument when the text is not
// a document produced by this tool (bad JSON, missing fields, malformed
// coefficients, negative exponents).
TableDocument parse_json(const std::string& text);

}  // namespace cheb3

#endif
