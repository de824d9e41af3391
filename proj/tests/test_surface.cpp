#include <algorithm>
#include <set>

#include "arcext/strings.hpp"
#include "arcext/surface.hpp"
#include "corpus.hpp"
#include "doctest.h"

using namespace arcext;

TEST_CASE("quadrilateral disk loads and has one internal arc") {
  Surface S = corpus::quad();
  CHECK(S.Q.vertices.size() == 1);
  CHECK(S.Q.arrows.empty());
  CHECK(S.Q.relations.empty());
  CHECK(S.Q.cycles.empty());
}

TEST_CASE("pentagon disk gives the A2 quiver") {
  Surface S = corpus::pentagon();
  CHECK(S.Q.vertices.size() == 2);
  REQUIRE(S.Q.arrows.size() == 1);
  CHECK(S.T.label(S.Q.arrows[0].source) == "2");
  CHECK(S.T.label(S.Q.arrows[0].target) == "1");
  CHECK(S.Q.relations.empty());
}

TEST_CASE("the worked-example surface reproduces its quiver exactly") {
  Surface S = corpus::qstar();
  CHECK(S.Q.vertices.size() == 8);
  std::set<std::pair<std::string, std::string>> got;
  for (const Arrow& a : S.Q.arrows)
    got.insert({S.T.label(a.source), S.T.label(a.target)});
  std::set<std::pair<std::string, std::string>> want = {
      {"1", "2"}, {"3", "2"}, {"2", "6"}, {"2", "7"}, {"4", "3"}, {"6", "3"},
      {"4", "5"}, {"5", "6"}, {"5", "8"}, {"8", "4"}, {"8", "7"}, {"7", "1"}};
  CHECK(got == want);
  CHECK(S.Q.cycles.size() == 3);
  CHECK(S.Q.relations.size() == 9);
  CHECK_NOTHROW(S.Q.check_gentle());
}

TEST_CASE("load rejects malformed documents") {
  CHECK_THROWS_AS(load_triangulation("not json"), ValidationError);
  CHECK_THROWS_AS(load_triangulation("{\"edges\":[],\"triangles\":[]}"),
                  ValidationError);
  // internal edge in three triangle slots
  CHECK_THROWS_AS(load_triangulation(R"({
    "edges": [{"id":"a","boundary":false},{"id":"b","boundary":true},
              {"id":"c","boundary":true},{"id":"d","boundary":true},
              {"id":"e","boundary":true},{"id":"f","boundary":true},
              {"id":"g","boundary":true}],
    "triangles": [["a","b","c"],["a","d","e"],["a","f","g"]]})"),
                  ValidationError);
  // repeated side inside one triangle
  CHECK_THROWS_AS(load_triangulation(R"({
    "edges": [{"id":"a","boundary":false},{"id":"b","boundary":true}],
    "triangles": [["a","a","b"],["a","a","b"]]})"),
                  ValidationError);
  // grammar metacharacters in labels
  CHECK_THROWS_AS(load_triangulation(R"({
    "edges": [{"id":"x>y","boundary":false}],
    "triangles": [["x>y","x>y","x>y"]]})"),
                  ValidationError);
}

TEST_CASE("arrow and cycle counts follow the triangle statistics") {
  for (const char* name : {"quad.json", "pentagon.json", "hexagon.json",
                           "heptagon.json", "octagon.json", "annulus21.json",
                           "annulus22.json", "qstar.json"}) {
    Surface S = corpus::load(name);
    size_t arrows = 0, internal_triangles = 0;
    for (const auto& tr : S.T.triangles) {
      int k = 0;
      for (EdgeIx e : tr)
        if (S.T.is_internal(e)) ++k;
      arrows += k * (k - 1) / 2;
      if (k == 3) ++internal_triangles;
    }
    CHECK(S.Q.arrows.size() == arrows);
    CHECK(S.Q.cycles.size() == internal_triangles);
  }
}

TEST_CASE("crossing sequences produce the expected strings") {
  Surface S = corpus::qstar();
  auto seq = [&](std::vector<std::string> labels) {
    std::vector<EdgeIx> out;
    for (const auto& l : labels) out.push_back(S.T.edge(l));
    return out;
  };
  CHECK(print_word(S.T, crossing_sequence_to_string(
                             S.Q, seq({"1", "2", "3", "4", "5", "6", "2"}))) ==
        "1>2<3<4>5>6<2");
  CHECK(print_word(S.T,
                   crossing_sequence_to_string(S.Q, seq({"6", "3", "4", "8", "7"}))) ==
        "6>3<4<8>7");

  Surface Sq = corpus::quad();
  StringWord w = crossing_sequence_to_string(Sq.Q, {Sq.T.edge("d")});
  CHECK(w.length() == 0);
  CHECK(Sq.T.label(w.start()) == "d");

  // arcs 1 and 8 share no triangle
  CHECK_THROWS_AS(crossing_sequence_to_string(S.Q, seq({"1", "8"})), ValidationError);
  // sequence forced through a relation
  CHECK_THROWS_AS(crossing_sequence_to_string(S.Q, seq({"2", "6", "3"})),
                  ValidationError);
}

TEST_CASE("vertex sequence of a string rebuilds the string up to inversion") {
  for (const char* name : {"hexagon.json", "qstar.json", "annulus22.json"}) {
    Surface S = corpus::load(name);
    for (const StringWord& w : enumerate_strings(S, 6)) {
      StringWord back = crossing_sequence_to_string(S.Q, w.verts);
      CHECK(same_module(S.T, back, w));
    }
  }
}
