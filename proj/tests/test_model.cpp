#include "doctest.h"

#include "ultrafun/model.hpp"

#include <fstream>

using namespace uf;
using namespace uf::model;

namespace {

std::string fixture(const std::string& name) { return std::string(UF_FIXTURE_DIR) + "/" + name; }

std::string error_of(const std::string& text) {
    try {
        parse_model(text);
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("model round trip") {
    for (const char* f : {"coordinate.json", "four_element.json", "delta0.json", "broken_map.json"}) {
        auto m = load_model(fixture(f));
        auto text = dump_model(m).dump(2);
        auto again = parse_model(text);
        CHECK_MESSAGE(again == m, f);
        CHECK(dump_model(again).dump(2) == text);
    }
    auto m = load_model(fixture("coordinate.json"));
    CHECK(m.systems.at("X").sys.dim(1) == 2);
    CHECK(m.cones.size() == 4);
    CHECK(m.morphisms.at("incl").m.map == std::vector<lattice::Element>{0, 1, 2});
}

TEST_CASE("random systems survive a dump") {
    auto p = lattice::FinitePoset::from_pairs({"0", "a", "b", "1"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    for (std::uint64_t s = 0; s < 10; ++s) {
        Model m;
        m.posets["P"] = p;
        m.systems.emplace("X", System{"P", ind::random_system(p, 3, s)});
        CHECK(parse_model(dump_model(m).dump()) == m);
    }
}

TEST_CASE("model errors") {
    auto e = error_of("{\n  \"posets\": {\n    \"P\": {\"elements\": [\"a\",]}\n  }\n}");
    CHECK(e.find("line 3") != std::string::npos);
    CHECK(e.find("column") != std::string::npos);

    e = error_of(R"({"systems": {"X": {"poset": "Q", "dims": {}}}})");
    CHECK(e.find("unknown poset 'Q'") != std::string::npos);

    e = error_of(R"({"forms": {"f": [[1.5, 0], [0, 1]]}})");
    CHECK(e.find("forms.f[0][0]") != std::string::npos);

    e = error_of(R"({"posets": {"P": {"elements": ["a", "b"], "order": [["a", "b"]]}},
                    "systems": {"X": {"poset": "P", "dims": {"a": 1, "b": 2},
                                      "maps": [{"from": "a", "to": "b", "matrix": [["1"]]}]}}})");
    CHECK(e.find("expected 2 rows") != std::string::npos);

    e = error_of(R"({"functionals": {"u": {"segments": [{"side": "+", "lambda": "-1"}]}}})");
    CHECK(e.find("functionals.u.segments[0]") != std::string::npos);

    CHECK(error_of(R"({"shapes": {}})").find("unknown section") != std::string::npos);
    CHECK(parse_vectors("1,0; 0,1; -1/2,-1").size() == 3);
    CHECK_THROWS_AS(parse_vectors("1,0;1"), ParseError);
}
