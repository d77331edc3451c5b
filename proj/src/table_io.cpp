#include "cheb3/table_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cheb3 {
namespace {

using nlohmann::ordered_json;

const std::set<std::string>& known_kinds() {
    static const std::set<std::string> kinds{"first", "second", "K", "L", "Z"};
    return kinds;
}

std::string entry_symbol(const std::string& kind) {
    if (kind == "first") return "T";
    if (kind == "second") return "U";
    if (kind == "K") return "K";
    return "N";
}

// Renders one univariate factor sum_t c_t p_k^t with polynomial coefficients.
std::string latex_factor(int k, const std::vector<std::pair<int, TriPoly>>& coeffs) {
    std::string out;
    for (const auto& [t, c] : coeffs) {
        if (c.is_zero()) continue;
        std::string base = to_latex(c);
        std::string piece;
        if (t == 0) {
            piece = base;
        } else {
            std::string pvar = "p_{" + std::to_string(k) + "}";
            if (t > 1) pvar += "^{" + std::to_string(t) + "}";
            if (c.term_count() > 1)
                piece = "(" + base + ") " + pvar;
            else if (base == "1")
                piece = pvar;
            else if (base == "-1")
                piece = "-" + pvar;
            else
                piece = base + " " + pvar;
        }
        if (out.empty())
            out = piece;
        else if (piece.front() == '-')
            out += " - " + piece.substr(1);
        else
            out += " + " + piece;
    }
    return out.empty() ? "0" : out;
}

[[noreturn]] void bad(const std::string& what) {
    throw std::invalid_argument("table document: " + what);
}

const ordered_json& field(const ordered_json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) bad(std::string("missing field \"") + name + "\"");
    return *it;
}

std::array<int, 3> int_triple(const ordered_json& j, const char* what) {
    if (!j.is_array() || j.size() != 3) bad(std::string(what) + " must be an array of three integers");
    std::array<int, 3> out{};
    for (int i = 0; i < 3; ++i) {
        if (!j[i].is_number_integer()) bad(std::string(what) + " must be an array of three integers");
        out[i] = j[i].get<int>();
    }
    return out;
}

}  // namespace

TableDocument document_from_series(const std::string& kind, const SeriesTable& table,
                                   std::string verification) {
    TableDocument doc;
    doc.kind = kind;
    doc.caps = {table.caps[0], table.caps[1], table.caps[2]};
    doc.verification = std::move(verification);
    for (const auto& [n, poly] : table.coeffs) {
        if (poly.is_zero()) continue;
        doc.entries.emplace_back(Exp3{n[0], n[1], n[2]}, poly);
    }
    return doc;
}

TableDocument document_from_cells(const std::string& kind, const std::map<Exp3, TriPoly>& cells,
                                  const Exp3& caps, std::string verification) {
    TableDocument doc;
    doc.kind = kind;
    doc.caps = caps;
    doc.verification = std::move(verification);
    for (const auto& [e, poly] : cells) {
        if (poly.is_zero()) continue;
        doc.entries.emplace_back(e, poly);
    }
    return doc;
}

TableDocument document_from_denominators(const std::array<std::vector<TriPoly>, 3>& factors,
                                         std::string verification) {
    TableDocument doc;
    doc.kind = "Z";
    doc.verification = std::move(verification);
    for (int k = 0; k < 3; ++k) {
        doc.caps[k] = static_cast<int>(factors[k].size()) - 1;
        for (int t = 0; t < static_cast<int>(factors[k].size()); ++t) {
            if (factors[k][t].is_zero()) continue;
            doc.entries.emplace_back(Exp3{k + 1, t, 0}, factors[k][t]);
        }
    }
    std::sort(doc.entries.begin(), doc.entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return doc;
}

std::string render_json(const TableDocument& doc) {
    ordered_json j;
    j["kind"] = doc.kind;
    j["caps"] = doc.caps;
    auto& entries = j["entries"] = ordered_json::array();
    for (const auto& [n, poly] : doc.entries) {
        ordered_json e;
        e["n"] = n;
        auto& terms = e["poly"] = ordered_json::array();
        for (const auto& [exp, c] : poly.terms()) {
            terms.push_back({{"e", exp}, {"c", c.get_str()}});
        }
        entries.push_back(std::move(e));
    }
    j["metadata"] = {{"tool", kToolName},
                     {"version", kToolVersion},
                     {"verification", doc.verification}};
    return j.dump(2) + "\n";
}

std::string render_latex(const TableDocument& doc) {
    std::ostringstream out;
    out << "% " << kToolName << " " << kToolVersion << " kind=" << doc.kind << " caps="
        << doc.caps[0] << "," << doc.caps[1] << "," << doc.caps[2] << "\n";
    out << "\\begin{align*}\n";
    if (doc.kind == "Z") {
        for (int k = 1; k <= 3; ++k) {
            std::vector<std::pair<int, TriPoly>> coeffs;
            for (const auto& [idx, poly] : doc.entries)
                if (idx[0] == k) coeffs.emplace_back(idx[1], poly);
            out << "Z_{" << k << "} &= " << latex_factor(k, coeffs);
            out << (k < 3 ? " \\\\" : "") << "\n";
        }
    } else {
        const std::string sym = entry_symbol(doc.kind);
        for (std::size_t i = 0; i < doc.entries.size(); ++i) {
            const auto& [n, poly] = doc.entries[i];
            out << sym << "_{" << n[0] << "," << n[1] << "," << n[2] << "} &= "
                << to_latex(poly);
            out << (i + 1 < doc.entries.size() ? " \\\\" : "") << "\n";
        }
    }
    out << "\\end{align*}\n";
    return out.str();
}

TableDocument parse_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        bad(std::string("not valid JSON (") + e.what() + ")");
    }
    if (!j.is_object()) bad("top level must be an object");

    TableDocument doc;
    const auto& kind = field(j, "kind");
    if (!kind.is_string()) bad("\"kind\" must be a string");
    doc.kind = kind.get<std::string>();
    if (!known_kinds().count(doc.kind)) bad("unknown kind \"" + doc.kind + "\"");
    doc.caps = int_triple(field(j, "caps"), "\"caps\"");

    const auto& entries = field(j, "entries");
    if (!entries.is_array()) bad("\"entries\" must be an array");
    std::set<Exp3> seen;
    for (const auto& e : entries) {
        if (!e.is_object()) bad("each entry must be an object");
        Exp3 n = int_triple(field(e, "n"), "entry index");
        if (!seen.insert(n).second) bad("duplicate entry index");
        const auto& terms = field(e, "poly");
        if (!terms.is_array()) bad("entry \"poly\" must be an array");
        TriPoly poly;
        for (const auto& t : terms) {
            if (!t.is_object()) bad("each term must be an object");
            Exp3 exp = int_triple(field(t, "e"), "term exponent");
            const auto& c = field(t, "c");
            if (!c.is_string()) bad("term coefficient must be a decimal string");
            Int value;
            try {
                value = Int(c.get<std::string>());
            } catch (const std::invalid_argument&) {
                bad("term coefficient \"" + c.get<std::string>() + "\" is not an integer");
            }
            try {
                poly.add_term(exp, value);
            } catch (const std::invalid_argument&) {
                bad("term exponent out of range");
            }
        }
        doc.entries.emplace_back(n, std::move(poly));
    }
    std::sort(doc.entries.begin(), doc.entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    const auto& meta = field(j, "metadata");
    if (!meta.is_object()) bad("\"metadata\" must be an object");
    if (auto it = meta.find("verification"); it != meta.end() && it->is_string())
        doc.verification = it->get<std::string>();
    return doc;
}

}  // namespace cheb3
