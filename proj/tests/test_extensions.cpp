#include <map>

#include "arcext/extensions.hpp"
#include "corpus.hpp"
#include "doctest.h"

using namespace arcext;

namespace {

struct Golden {
  Surface S = corpus::qstar();
  StringWord w1 = parse_word(S, "1>2<3<4>5>6<2");
  StringWord w2 = parse_word(S, "6>3<4<8>7");
};

bool value_is(const Surface& S, const ArcValue& v, const std::string& word) {
  return v.kind == ArcValue::Str &&
         same_module(S.T, v.word, parse_word(S, word));
}

}  // namespace

TEST_CASE("crossing census of the worked example") {
  Golden g;
  auto cr = enumerate_crossings(g.S, g.w1, g.w2);
  REQUIRE(cr.size() == 4);

  std::map<CrossKind, int> kinds;
  for (const auto& c : cr) ++kinds[c.kind];
  CHECK(kinds[CrossKind::Module] == 2);
  CHECK(kinds[CrossKind::Arrow] == 1);
  CHECK(kinds[CrossKind::ThreeCycle] == 1);

  // module crossings: M1 over M2 in the simple 6, M2 over M1 in 3<4
  CHECK(cr[0].kind == CrossKind::Module);
  CHECK(cr[0].m1_crosses_m2);
  CHECK(value_is(g.S, ArcValue::string(subword(cr[0].u, cr[0].su, cr[0].tu)), "(6)"));
  CHECK(cr[1].kind == CrossKind::Module);
  CHECK_FALSE(cr[1].m1_crosses_m2);
  CHECK(value_is(g.S, ArcValue::string(subword(cr[1].u, cr[1].su, cr[1].tu)), "3<4"));

  CHECK(cr[2].kind == CrossKind::Arrow);
  CHECK(cr[2].m1_crosses_m2);
  CHECK(g.S.T.label(g.S.Q.arrows[cr[2].alpha].source) == "2");
  CHECK(g.S.T.label(g.S.Q.arrows[cr[2].alpha].target) == "7");

  CHECK(cr[3].kind == CrossKind::ThreeCycle);
  CHECK(cr[3].m1_crosses_m2);
  CHECK(g.S.T.label(g.S.Q.arrows[cr[3].cycle[0]].source) == "1");
  CHECK(g.S.T.label(g.S.Q.arrows[cr[3].cycle[0]].target) == "2");
}

TEST_CASE("the worked example has one self-crossing in the simple 2") {
  Golden g;
  auto cr = enumerate_crossings(g.S, g.w1, g.w1);
  REQUIRE(cr.size() == 1);
  CHECK(cr[0].kind == CrossKind::Module);
  CHECK(value_is(g.S, ArcValue::string(subword(cr[0].u, cr[0].su, cr[0].tu)), "(2)"));
}

TEST_CASE("strings on disjoint vertex sets never cross") {
  Golden g;
  CHECK(enumerate_crossings(g.S, parse_word(g.S, "(1)"), parse_word(g.S, "(5)")).empty());
}

TEST_CASE("cycle completions come from the potential") {
  Golden g;
  auto arrow = [&](const std::string& s, const std::string& t) {
    return *g.S.Q.arrow_from_to(g.S.T.edge(s), g.S.T.edge(t));
  };
  ArrowIx sigma = find_cycle_completion(g.S.Q, arrow("1", "2"), arrow("2", "7"));
  CHECK(g.S.T.label(g.S.Q.arrows[sigma].source) == "7");
  CHECK(g.S.T.label(g.S.Q.arrows[sigma].target) == "1");
  ArrowIx sigma2 = find_cycle_completion(g.S.Q, arrow("6", "3"), arrow("3", "2"));
  CHECK(g.S.T.label(g.S.Q.arrows[sigma2].source) == "2");
  CHECK(g.S.T.label(g.S.Q.arrows[sigma2].target) == "6");
  // (4->3, 3->2) composes but is not a relation
  CHECK_THROWS_AS(find_cycle_completion(g.S.Q, arrow("4", "3"), arrow("3", "2")),
                  ValidationError);
  // non-composable pair
  CHECK_THROWS_AS(find_cycle_completion(g.S.Q, arrow("1", "2"), arrow("4", "5")),
                  ValidationError);
}

TEST_CASE("smoothings of the worked example match the expected strings") {
  Golden g;
  auto cr = enumerate_crossings(g.S, g.w1, g.w2);
  REQUIRE(cr.size() == 4);

  SmoothingResult s0 = smooth(g.S, cr[0]);  // module at 6
  CHECK(value_is(g.S, s0.w3, "1>2<3<4>5>6>3<4<8>7"));
  CHECK(value_is(g.S, s0.w4, "6<2"));
  CHECK(value_is(g.S, s0.w5, "1>2<3<4"));
  CHECK(value_is(g.S, s0.w6, "2<3<4<8>7"));

  SmoothingResult s1 = smooth(g.S, cr[1]);  // module at 3<4
  CHECK(value_is(g.S, s1.w3, "6>3<4>5>6<2"));
  CHECK(value_is(g.S, s1.w4, "1>2<3<4<8>7"));
  CHECK(value_is(g.S, s1.w5, "6<2<1"));
  CHECK(value_is(g.S, s1.w6, "7<8<5>6<2"));

  SmoothingResult s2 = smooth(g.S, cr[2]);  // arrow 2->7
  CHECK(value_is(g.S, s2.w3, "1>2<3<4>5>6<2>7<8>4>3<6"));
  CHECK(s2.w4.kind == ArcValue::TArc);
  CHECK(g.S.T.label(s2.w4.edge) == "1");
  CHECK(value_is(g.S, s2.w5, "1>2<3<4>5"));
  CHECK(value_is(g.S, s2.w6, "4>3<6"));

  SmoothingResult s3 = smooth(g.S, cr[3]);  // 3-cycle (1,2,7)
  CHECK(value_is(g.S, s3.w3, "1<7<8>4>3<6"));
  CHECK(value_is(g.S, s3.w4, "3<4>5>6<2"));
  CHECK(s3.w5.kind == ArcValue::Zero);
  CHECK(value_is(g.S, s3.w6, "6>3<4<8>7<2<3<4>5>6<2"));

  auto self = enumerate_crossings(g.S, g.w1, g.w1);
  REQUIRE(self.size() == 1);
  SmoothingResult s4 = smooth(g.S, self[0]);
  CHECK(value_is(g.S, s4.w3, "1>2>6<5<4>3>2<1"));
  CHECK(value_is(g.S, s4.w4, "2<3<4>5>6<2"));
  CHECK(s4.w5.kind == ArcValue::Zero);
  CHECK(value_is(g.S, s4.w6, "2>6<5<4>3<6<5<4>3>2<1"));
}

TEST_CASE("both smoothing routes agree on the worked example") {
  Golden g;
  for (auto [a, b] : {std::pair{g.w1, g.w2}, std::pair{g.w1, g.w1}}) {
    for (const Crossing& c : enumerate_crossings(g.S, a, b)) {
      SmoothingResult sm = smooth(g.S, c);
      Resolution res = smooth_graphs(g.S, c);
      const ArcValue* words[4] = {&sm.w3, &sm.w4, &sm.w5, &sm.w6};
      const SnakeGraph* graphs[4] = {&res.g3, &res.g4, &res.g5, &res.g6};
      for (int i = 0; i < 4; ++i) {
        if (words[i]->kind == ArcValue::Str) {
          REQUIRE_FALSE(graphs[i]->is_single_edge());
          CHECK(graphs_equivalent(snake_graph_of_string(g.S, words[i]->word),
                                  *graphs[i]));
        } else {
          CHECK(graphs[i]->is_single_edge());
        }
      }
    }
  }
}

TEST_CASE("bases of the extension spaces") {
  Golden g;
  auto b12 = ext_basis(g.S, g.w1, g.w2);
  REQUIRE(b12.size() == 2);
  CHECK(b12[0].middle.size() == 2);  // module crossing: two middle terms
  CHECK(same_module(g.S.T, b12[0].middle[0].word, parse_word(g.S, "1>2<3<4>5>6>3<4<8>7")));
  CHECK(same_module(g.S.T, b12[0].middle[1].word, parse_word(g.S, "6<2")));
  CHECK(b12[1].middle.size() == 1);  // arrow crossing: one middle term
  CHECK(same_module(g.S.T, b12[1].middle[0].word,
                    parse_word(g.S, "1>2<3<4>5>6<2>7<8>4>3<6")));

  auto b21 = ext_basis(g.S, g.w2, g.w1);
  REQUIRE(b21.size() == 1);
  CHECK(b21[0].middle.size() == 2);

  CHECK(ext_basis(g.S, parse_word(g.S, "(1)"), parse_word(g.S, "(5)")).empty());
}

TEST_CASE("dimension report of the worked example") {
  Golden g;
  ExtReport r = ext_dim(g.S, g.w1, g.w2);
  CHECK(r.dim_mn == 2);
  CHECK(r.dim_nm == 1);
  CHECK(r.intersection == 4);
  CHECK(r.k == 1);
  CHECK(r.k_prime == 0);

  ExtReport rs = ext_dim(g.S, g.w1, g.w1);
  CHECK(rs.dim_mn == 1);
  CHECK(rs.intersection == 2);
  CHECK(rs.k == 0);

  ExtReport r22 = ext_dim(g.S, g.w2, g.w2);
  CHECK(r22.dim_mn == 0);
  CHECK(r22.intersection == 0);
}

TEST_CASE("triangles of the cluster category") {
  Golden g;
  auto tri = cluster_triangles(g.S, g.w1, g.w2);
  REQUIRE(tri.size() == 4);

  // crossings are ordered: module 6, module 3<4, arrow 2->7, 3-cycle
  const auto& [a1, a2] = tri[2];  // the arrow crossing
  REQUIRE(a1.middle.size() == 2);
  CHECK(a1.middle[1].kind == ArcValue::TArc);  // the arc labelled 1 survives in C
  CHECK(g.S.T.label(a1.middle[1].edge) == "1");
  REQUIRE(a2.middle.size() == 2);
  CHECK(value_is(g.S, a2.middle[0], "1>2<3<4>5"));
  CHECK(value_is(g.S, a2.middle[1], "4>3<6"));

  auto self = cluster_triangles(g.S, g.w1, g.w1);
  REQUIRE(self.size() == 1);
  CHECK(self[0].first.middle.size() == 2);
  CHECK(self[0].second.middle.size() == 1);  // gamma5 vanishes
  CHECK(value_is(g.S, self[0].second.middle[0], "2>6<5<4>3<6<5<4>3>2<1"));

  CHECK(cluster_triangles(g.S, parse_word(g.S, "(1)"), parse_word(g.S, "(5)")).empty());
}

TEST_CASE("crossings mirror when the pair is swapped") {
  Golden g;
  auto a = enumerate_crossings(g.S, g.w1, g.w2);
  auto b = enumerate_crossings(g.S, g.w2, g.w1);
  REQUIRE(a.size() == b.size());
  std::map<CrossKind, int> da, db;
  for (const auto& c : a) da[c.kind] += c.m1_crosses_m2 ? 1 : -1;
  for (const auto& c : b) db[c.kind] += c.m1_crosses_m2 ? 1 : -1;
  for (const auto& [k, v] : da) CHECK(db[k] == -v);
}

TEST_CASE("simple modules extend along arrows") {
  Surface S = corpus::pentagon();
  // arrow 2->1: the only crossing of the two simples
  auto cr = enumerate_crossings(S, parse_word(S, "(2)"), parse_word(S, "(1)"));
  REQUIRE(cr.size() == 1);
  CHECK(cr[0].kind == CrossKind::Arrow);
  CHECK(cr[0].m1_crosses_m2);
  SmoothingResult sm = smooth(S, cr[0]);
  CHECK(value_is(S, sm.w3, "2>1"));
  CHECK(sm.w4.kind == ArcValue::Boundary);
  CHECK(sm.w5.kind == ArcValue::Zero);
  CHECK(sm.w6.kind == ArcValue::Zero);
}

TEST_CASE("staggered overlaps cross: interval modules over A3") {
  // strings 1>2 and 2>3 over a fan triangulation share the staggered simple 2
  Surface S = Surface::load(R"({
    "edges": [
      {"id":"1","boundary":false},{"id":"2","boundary":false},
      {"id":"3","boundary":false},
      {"id":"p","boundary":true},{"id":"q","boundary":true},
      {"id":"r","boundary":true},{"id":"s","boundary":true},
      {"id":"t","boundary":true},{"id":"u","boundary":true}],
    "triangles": [["p","q","1"],["1","2","r"],["2","3","s"],["t","u","3"]]})");
  // quiver: 1->2 and 2->3 (no relations)
  REQUIRE(S.Q.arrows.size() == 2);
  StringWord a = parse_word(S, "1>2");
  StringWord b = parse_word(S, "2>3");
  auto cr = enumerate_crossings(S, a, b);
  REQUIRE(cr.size() == 1);
  CHECK(cr[0].kind == CrossKind::Module);
  CHECK(cr[0].m1_crosses_m2);
  SmoothingResult sm = smooth(S, cr[0]);
  CHECK(value_is(S, sm.w3, "1>2>3"));
  CHECK(value_is(S, sm.w4, "(2)"));
  CHECK(sm.w5.kind == ArcValue::Zero);
  CHECK(sm.w6.kind == ArcValue::Zero);
  ExtReport er = ext_dim(S, a, b);
  CHECK(er.dim_mn == 1);
  CHECK(er.dim_nm == 0);
}
