#include <doctest.h>

#include <stdexcept>
#include <string>

#include "cheb3/table_io.hpp"

using namespace cheb3;

namespace {

struct Pipeline {
    RootData rd = RootData::build(3);
    InvariantReducer red{rd};
    GeneratingFunctions gf{rd, red};
};

}  // namespace

TEST_CASE("json round trip for every document kind") {
    Pipeline p;
    const TableDocument first =
        document_from_series("first", p.gf.first_kind_table({3, 3, 3}), "check A");
    const TableDocument second =
        document_from_series("second", p.gf.second_kind_table({3, 3, 3}), "check B");
    const TableDocument k = document_from_cells(
        "K", p.gf.derive_numerator_first().numerator, {3, 5, 3}, "check C");
    const TableDocument l = document_from_cells(
        "L", p.gf.derive_numerator_second().numerator, {2, 4, 2}, "check D");
    const TableDocument z =
        document_from_denominators(p.gf.denominator_factors(), "check E");

    for (const TableDocument& doc : {first, second, k, l, z}) {
        CAPTURE(doc.kind);
        CHECK(parse_json(render_json(doc)) == doc);
    }
    CHECK(z.caps == Exp3{4, 6, 4});
}

TEST_CASE("parse_json accepts a minimal document and rejects malformed ones") {
    const std::string minimal = R"({"kind":"first","caps":[0,0,0],)"
                                R"("entries":[{"n":[0,0,0],"poly":[{"e":[0,0,0],"c":"1"}]}],)"
                                R"("metadata":{}})";
    const TableDocument doc = parse_json(minimal);
    CHECK(doc.kind == "first");
    CHECK(doc.verification.empty());
    REQUIRE(doc.entries.size() == 1);
    CHECK(doc.entries[0].second == TriPoly::constant(1));

    auto variant = [&](const std::string& from, const std::string& to) {
        std::string text = minimal;
        const auto pos = text.find(from);
        REQUIRE(pos != std::string::npos);
        text.replace(pos, from.size(), to);
        return text;
    };

    CHECK_THROWS_AS(parse_json("not json at all"), std::invalid_argument);
    CHECK_THROWS_AS(parse_json("{}"), std::invalid_argument);
    CHECK_THROWS_AS(parse_json(variant("\"first\"", "\"third\"")), std::invalid_argument);
    CHECK_THROWS_AS(parse_json(variant("\"caps\":[0,0,0]", "\"caps\":[0,0]")),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_json(variant("\"c\":\"1\"", "\"c\":\"12x\"")),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_json(variant("\"e\":[0,0,0]", "\"e\":[0,-1,0]")),
                    std::invalid_argument);
    const std::string dup = variant(
        R"([{"n":[0,0,0],"poly":[{"e":[0,0,0],"c":"1"}]}])",
        R"([{"n":[0,0,0],"poly":[{"e":[0,0,0],"c":"1"}]},)"
        R"({"n":[0,0,0],"poly":[{"e":[0,0,0],"c":"2"}]}])");
    CHECK_THROWS_AS(parse_json(dup), std::invalid_argument);
    CHECK_THROWS_AS(parse_json(variant("\"metadata\":{}", "\"metadata\":3")),
                    std::invalid_argument);
}

TEST_CASE("latex rendering shows indexed symbols and conjugate bars") {
    Pipeline p;
    const std::string table_tex =
        render_latex(document_from_series("first", p.gf.first_kind_table({1, 1, 1}), "ok"));
    CHECK(table_tex.rfind("% cheb3", 0) == 0);
    CHECK(table_tex.find("T_{1,1,0}") != std::string::npos);
    CHECK(table_tex.find("\\bar{z}") != std::string::npos);
    CHECK(table_tex.find("\\begin{align*}") != std::string::npos);

    const std::string z_tex =
        render_latex(document_from_denominators(p.gf.denominator_factors(), "ok"));
    CHECK(z_tex.find("Z_{1} &= 1 - z p_{1}") != std::string::npos);
    CHECK(z_tex.find("p_{1}^{4}") != std::string::npos);
}

TEST_CASE("rendering is deterministic across pipeline instances") {
    Pipeline a;
    Pipeline b;
    const std::string ja =
        render_json(document_from_series("first", a.gf.first_kind_table({2, 2, 2}), "v"));
    const std::string jb =
        render_json(document_from_series("first", b.gf.first_kind_table({2, 2, 2}), "v"));
    CHECK(ja == jb);
}
