#include <doctest.h>

#include "fixtures.hpp"
#include "lpa/error.hpp"
#include "lpa/io.hpp"
#include "lpa/sweep.hpp"

using namespace lpa;
using io::Json;

TEST_CASE("graph documents") {
    const Graph b = io::load_graph(io::parse_json(R"({"vertices":["w","h"],"edges":[["w","h","inf"],["w","w",1]]})"));
    CHECK(b == fx::breaking());
    const Json j = io::graph_to_json(b);
    CHECK(j["vertices"] == Json::array({"h", "w"}));
    CHECK(io::load_graph(j) == b);
    CHECK(io::load_graph(io::parse_json(R"({"vertices":["a"]})")).edges().empty());
}

TEST_CASE("graph documents round-trip across the small sweep") {
    for_each_graph(2, {fx::m(0), fx::m(1), fx::m(3), fx::inf()}, [](const Graph& g) {
        REQUIRE(io::load_graph(io::parse_json(io::graph_to_json(g).dump())) == g);
    });
}

TEST_CASE("malformed documents raise parse errors") {
    CHECK_THROWS_AS(io::parse_json("{"), ParseError);
    CHECK_THROWS_AS(io::load_graph(Json::array()), ParseError);
    CHECK_THROWS_WITH_AS(io::load_graph(io::parse_json(R"({"edges":[]})")), "missing field \"vertices\"", ParseError);
    CHECK_THROWS_AS(io::load_graph(io::parse_json(R"({"vertices":[1]})")), ParseError);
    CHECK_THROWS_AS(io::load_graph(io::parse_json(R"({"vertices":["a"],"edges":[["a","a"]]})")), ParseError);
    CHECK_THROWS_WITH_AS(io::load_graph(io::parse_json(R"({"vertices":["a"],"edges":[["a","a",-1]]})")),
                         "edges[0][2]: negative multiplicity", ParseError);
    CHECK_THROWS_AS(io::load_graph(io::parse_json(R"({"vertices":["a"],"edges":[["a","a","lots"]]})")), ParseError);
    CHECK_THROWS_AS(io::load_graph(io::parse_json(R"({"vertices":["a"],"edges":[["a","a",1.5]]})")), ParseError);
    CHECK_THROWS_AS(io::load_graph(io::parse_json(R"({"vertices":["a"],"edges":[["a","b",1]]})")), ParseError);
    CHECK_THROWS_AS(io::load_field(io::parse_json("3")), ParseError);
    CHECK_THROWS_AS(io::load_field(io::parse_json(R"({"p":-2})")), ParseError);
    CHECK_THROWS_AS(io::load_ideal(io::parse_json(R"({"H":[],"polyparts":[{"cycle":["v"]}]})")), ParseError);
    CHECK_THROWS_AS(io::load_poset(io::parse_json(R"({"elements":["a","b"],"lt":[["a","b"],["b","a"]]})")), ParseError);
    CHECK_THROWS_AS(io::load_poset(io::parse_json(R"({"elements":["a"],"lt":[["a","z"]]})")), ParseError);
}

TEST_CASE("pair, field, ideal and poset documents") {
    const Graph b = fx::breaking();
    const AdmissiblePair p{b.to_set({"h"}), b.to_set({"w"})};
    CHECK(io::load_pair(b, io::pair_to_json(b, p)) == p);
    CHECK(io::load_pair(b, io::parse_json(R"({"H":["h"]})")).s.empty());

    CHECK(io::load_field(io::parse_json(R"("F3")")) == FieldSpec::prime(3));
    CHECK(io::load_field(io::parse_json(R"({"p":5})")) == FieldSpec::prime(5));
    CHECK(io::load_field(io::field_to_json(fx::q())).is_rationals());

    const auto in = io::load_ideal(
        io::parse_json(R"({"H":["h"],"S":["w"],"polyparts":[{"cycle":["w"],"f":"x^2+1"}],"field":"F2"})"));
    REQUIRE(in.field);
    const auto ideal = validate(b, in.doc, *in.field).ideal;
    const auto back = io::load_ideal(io::ideal_to_json(b, ideal));
    CHECK(validate(b, back.doc, *back.field).ideal == ideal);
    CHECK(io::ideal_to_json(b, ideal)["polyparts"][0]["f"] == "x^2+1");

    const auto poset = io::load_poset(io::parse_json(R"({"elements":["a","b","c"],"lt":[["a","b"],["b","c"]]})"));
    CHECK(poset.lt(0, 2));
    const Json pj = io::poset_to_json(poset);
    CHECK(pj["lt"].size() == 3);
    CHECK(io::load_poset(pj).relations() == poset.relations());
}

TEST_CASE("spectrum documents") {
    const Graph b = fx::breaking();
    const Json j = io::spec_to_json(b, compute_spec(b));
    REQUIRE(j["nodes"].size() == 4);
    CHECK(j["nodes"][1]["case"] == 2);
    CHECK(j["nodes"][1]["u"] == "w");
    CHECK(j["nodes"][3]["kind"] == "family");
    CHECK(j["nodes"][3]["cycle"] == Json::array({"w"}));
    CHECK(j["leq"][0] == Json::array({1, 1, 1, 1}));
    CHECK(j["leq"][3] == Json::array({0, 0, 0, 1}));
    CHECK(j["covers"].size() == 3);
}

TEST_CASE("DOT export") {
    const Graph b = fx::breaking();
    CHECK(io::spec_dot(b, compute_spec(b)) ==
          "digraph spec {\n"
          "  rankdir=BT;\n"
          "  n0 [label=\"I({},{})\"];\n"
          "  n1 [label=\"I({h},{})\"];\n"
          "  n2 [label=\"I({h},{w})\"];\n"
          "  n3 [label=\"I({h},{w})+<f(w)>\", peripheries=2];\n"
          "  n0 -> n1;\n"
          "  n1 -> n2;\n"
          "  n2 -> n3;\n"
          "}\n");

    const Graph loop = fx::loop();
    CHECK(io::lattice_dot(loop, PairLattice(loop)) ==
          "digraph pairs {\n"
          "  rankdir=BT;\n"
          "  n0 [label=\"({}, {})\"];\n"
          "  n1 [label=\"({v}, {})\"];\n"
          "  n0 -> n1;\n"
          "}\n");

    const auto anti = io::poset_dot(FinPoset({"a", "b"}, {}));
    CHECK(anti.find("->") == std::string::npos);
    CHECK(anti.find("n1 [label=\"b\"]") != std::string::npos);
    CHECK(io::poset_dot(FinPoset({"q\"x"}, {})).find("\"q\\\"x\"") != std::string::npos);
}
