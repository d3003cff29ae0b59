#include <algorithm>

#include "artinmut/io.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace artinmut;
using testing_support::dia;
using testing_support::w;
using json = io::json;

TEST_CASE("diagram JSON round trip") {
  const Diagram g = testing_support::triangle();
  const json j = io::diagram_to_json(g);
  CHECK(j.dump() == R"({"n":3,"edges":[[1,2,2],[2,3,1],[3,1,2]]})");
  CHECK(io::diagram_from_json(j) == g);
  CHECK(io::diagram_from_json(io::parse(j.dump())) == g);
  const Diagram m = mutate_diagram(g, 1);
  CHECK(io::diagram_from_json(io::diagram_to_json(m)) == m);
}

TEST_CASE("matrix input is converted") {
  const Diagram g = io::diagram_from_json(io::parse(R"({"B": [[0, 1, 0], [-1, 0, 1], [0, -2, 0]]})"));
  CHECK(g == diagram_from_matrix(testing_support::b3()));
  // B = [[0, 2], [-2, 0]] gives weight 4, affine only.
  const json affine = io::parse(R"({"B": [[0, 2], [-2, 0]]})");
  CHECK_THROWS_AS(io::diagram_from_json(affine), Error);
  CHECK(io::diagram_from_json(affine, Mode::Affine).weight(0, 1) == 4);
}

TEST_CASE("malformed diagrams") {
  for (const char* text : {R"([1, 2])", R"({"edges": []})", R"({"n": "3"})",
                           R"({"n": 3, "edges": [[1, 2]]})", R"({"n": 3, "edges": [[1, 2, 1.5]]})",
                           R"({"B": [[0, 1], [1, 0]]})", R"({"n": 2, "edges": [[1, 3, 1]]})"}) {
    CAPTURE(text);
    CHECK_THROWS_AS(io::diagram_from_json(io::parse(text)), Error);
  }
  try {
    io::parse("{");
    FAIL("no exception");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
  }
}

TEST_CASE("word JSON") {
  const Word x = w("g1 G3 g2");
  CHECK(io::word_to_json(x).dump() == "[[1,1],[3,-1],[2,1]]");
  CHECK(io::word_from_json(io::word_to_json(x)) == x);
  CHECK(io::word_from_json(io::parse("[[1,1],[1,-1]]")).empty());
  CHECK_THROWS_AS(io::word_from_json(io::parse("[[0,1]]")), Error);
  CHECK_THROWS_AS(io::word_from_json(io::parse("[[1,2]]")), Error);
}

TEST_CASE("presentation export") {
  const Presentation p = artin_presentation(testing_support::triangle());
  const json j = io::presentation_to_json(p);
  CHECK(j["generators"] == 3);
  REQUIRE(j["relators"].size() == p.relators.size());
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    CHECK(io::word_from_json(j["relators"][i]["word"]) == p.relators[i].word);
    CHECK(j["relators"][i]["family"] == to_string(p.relators[i].family));
  }
  CHECK(j["relators"][3]["provenance"] == "cycle (1,2,3)");
  const std::string text = io::presentation_to_text(p);
  CHECK(text.starts_with("g1 g2 g1 g2 G1 G2 G1 G2\n"));
  CHECK(std::count(text.begin(), text.end(), '\n') == 5);
}

TEST_CASE("map files") {
  const json j = io::parse(R"j({
    "label": "Phi(2)",
    "source": {"n": 3, "edges": [[1, 3, 1], [2, 1, 1], [3, 2, 1]]},
    "target": {"n": 3, "edges": [[1, 2, 1], [2, 3, 1]]},
    "images": [[[2, 1], [1, 1], [2, -1]], [[2, 1]], [[3, 1]]]})j");
  const GroupMap m = io::map_from_json(j);
  const GroupMap ref = phi(dia(3, {{1, 2, 1}, {2, 3, 1}}), 1);
  CHECK(m.images == ref.images);
  CHECK(m.source.alphabet == ref.source.alphabet);
  CHECK(m.target.alphabet == ref.target.alphabet);
  const json out = io::map_to_json(ref);
  CHECK(out["images"] == j["images"]);

  json bad = j;
  bad["images"].push_back(json::array());
  CHECK_THROWS_AS(io::map_from_json(bad), Error);
  bad = j;
  bad["images"][0] = io::parse("[[4, 1]]");
  CHECK_THROWS_AS(io::map_from_json(bad), Error);
}

TEST_CASE("pattern files") {
  const json j = io::parse(R"({"patterns": [
    {"name": "t", "row": 5, "shape": {"n": 3, "edges": [[1, 3, 4], [2, 1, 1], [3, 2, 1]]}},
    {"name": "e", "shape": {"n": 2, "edges": [[1, 2, 1]]}, "equations": [["g1 g2", "g2 g1"]]}]})");
  const auto ps = io::patterns_from_json(j);
  REQUIRE(ps.size() == 2);
  CHECK(ps[0].equations == t4_template(5));
  CHECK(ps[0].shape.weight(0, 2) == 4);
  CHECK(ps[1].equations.front().first == w("g1 g2"));

  CHECK_THROWS_AS(io::patterns_from_json(io::parse(
                      R"({"patterns": [{"row": 1, "shape": {"n": 3, "edges": []}}]})")),
                  Error);
  CHECK_THROWS_AS(io::patterns_from_json(io::parse(
                      R"({"patterns": [{"shape": {"n": 1}, "equations": [["g2", "g1"]]}]})")),
                  Error);
}

TEST_CASE("cycle export carries exact affine values") {
  const Diagram g = dia(3, {{1, 3, 4}, {2, 1, 1}, {3, 2, 1}}, Mode::Affine);
  const json j = io::cycles_to_json(chordless_cycles(g, Mode::Affine), Mode::Affine);
  REQUIRE(j.size() == 1);
  for (const json& r : j[0]["rotations"]) {
    CHECK(r["t"] == "1");
    CHECK(r["m"] == 3);
  }
  const Diagram h = dia(3, {{1, 2, 2}, {2, 3, 2}, {3, 1, 2}}, Mode::Affine);
  const json k = io::cycles_to_json(chordless_cycles(h, Mode::Affine), Mode::Affine);
  CHECK(k[0]["rotations"][0]["t"] == "6 - 4sqrt2");
  CHECK(k[0]["rotations"][0]["m"].is_null());
}

TEST_CASE("reports") {
  const InvarianceReport r = verify_mutation_invariance(dia(3, {{1, 2, 1}, {2, 3, 1}}), 1);
  const json j = io::report_to_json(r);
  CHECK(j["verdict"] == "PASS");
  CHECK(j["k"] == 2);
  CHECK(j["phi"]["quotient_order"] == 24);
  for (const json& rec : j["phi"]["records"]) {
    CHECK(rec["status"] == "certified");
    CHECK(!rec["certificate"].is_null());
  }
  CHECK(io::report_summary(r) == "n=3;1>2:1;2>3:1 k=2 PASS phi 6/6 psi 3/3 identities ok");
  CHECK(io::diagram_to_dot(dia(2, {{1, 2, 2}})) == "digraph G {\n  1;\n  2;\n  1 -> 2 [label=\"2\"];\n}\n");
}
