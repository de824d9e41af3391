#include "arcext/report.hpp"

#include <sstream>

namespace arcext {

using nlohmann::json;

json quiver_json(const Surface& S) {
  json j;
  j["vertices"] = json::array();
  for (EdgeIx v : S.Q.vertices) j["vertices"].push_back(S.T.label(v));
  j["arrows"] = json::array();
  for (size_t a = 0; a < S.Q.arrows.size(); ++a)
    j["arrows"].push_back({{"id", a},
                           {"source", S.T.label(S.Q.arrows[a].source)},
                           {"target", S.T.label(S.Q.arrows[a].target)}});
  j["relations"] = json::array();
  for (const auto& [a, b] : S.Q.relations) j["relations"].push_back({a, b});
  j["cycles"] = json::array();
  for (const auto& c : S.Q.cycles) j["cycles"].push_back({c[0], c[1], c[2]});
  return j;
}

std::string quiver_text(const Surface& S) {
  std::ostringstream os;
  os << "vertices:";
  for (EdgeIx v : S.Q.vertices) os << " " << S.T.label(v);
  os << "\narrows:\n";
  for (size_t a = 0; a < S.Q.arrows.size(); ++a)
    os << "  [" << a << "] " << S.T.label(S.Q.arrows[a].source) << " -> "
       << S.T.label(S.Q.arrows[a].target) << "\n";
  os << "relations:";
  for (const auto& [a, b] : S.Q.relations) os << " (" << a << "," << b << ")";
  os << "\n3-cycles:";
  for (const auto& c : S.Q.cycles)
    os << " (" << c[0] << "," << c[1] << "," << c[2] << ")";
  os << "\n";
  return os.str();
}

json snake_json(const Triangulation& T, const SnakeGraph& G) {
  json j;
  if (G.is_single_edge()) {
    j["single_edge"] = T.label(*G.edge_only);
    return j;
  }
  j["tiles"] = json::array();
  for (const Tile& t : G.tiles)
    j["tiles"].push_back({{"diagonal", T.label(t.diag)},
                          {"north", T.label(t.north)},
                          {"east", T.label(t.east)},
                          {"south", T.label(t.south)},
                          {"west", T.label(t.west)}});
  j["glue"] = json::array();
  for (GlueDir g : G.glue)
    j["glue"].push_back(g == GlueDir::North ? "north" : "east");
  j["interior"] = json::array();
  for (int i = 1; i < G.tile_count(); ++i)
    j["interior"].push_back(T.label(G.interior_weight(i)));
  return j;
}

json arc_value_json(const Triangulation& T, const ArcValue& v) {
  switch (v.kind) {
    case ArcValue::Str:
      return {{"type", "string"}, {"value", print_word(T, canonicalize(T, v.word))}};
    case ArcValue::Zero: return {{"type", "zero"}};
    case ArcValue::TArc: return {{"type", "arc"}, {"value", T.label(v.edge)}};
    case ArcValue::Boundary:
      return {{"type", "boundary"}, {"value", T.label(v.edge)}};
  }
  return {};
}

json crossing_json(const Surface& S, int index, const Crossing& c) {
  json j;
  j["index"] = index;
  j["direction"] = c.m1_crosses_m2 ? "M1->M2" : "M2->M1";
  j["crosser"] = print_word(S.T, canonicalize(S.T, c.u));
  j["crossee"] = print_word(S.T, canonicalize(S.T, c.v));
  switch (c.kind) {
    case CrossKind::Module: {
      j["kind"] = "module";
      StringWord w = subword(c.u, c.su, c.tu);
      j["data"] = {{"overlap", print_word(S.T, canonicalize(S.T, w))},
                   {"range_w1", {c.ov.s, c.ov.t}},
                   {"range_w2", {c.ov.s2, c.ov.t2}},
                   {"orientation", c.ov.reversed ? "reversed" : "same"},
                   {"P1_empty", c.su == 1},
                   {"S1_empty", c.tu == c.u.vertex_count()},
                   {"P2_empty", c.sv == 1},
                   {"S2_empty", c.tv == c.v.vertex_count()}};
      break;
    }
    case CrossKind::Arrow:
      j["kind"] = "arrow";
      j["data"] = {{"arrow", S.T.label(S.Q.arrows[c.alpha].source) + "->" +
                                 S.T.label(S.Q.arrows[c.alpha].target)}};
      break;
    case CrossKind::ThreeCycle: {
      j["kind"] = "3-cycle";
      auto lab = [&](ArrowIx a) {
        return S.T.label(S.Q.arrows[a].source) + "->" + S.T.label(S.Q.arrows[a].target);
      };
      j["data"] = {{"cycle", {lab(c.cycle[0]), lab(c.cycle[1]), lab(c.cycle[2])}},
                   {"position", c.pos}};
      break;
    }
  }
  return j;
}

std::string crossing_text(const Surface& S, int index, const Crossing& c) {
  json j = crossing_json(S, index, c);
  std::ostringstream os;
  os << "[" << index << "] " << j["kind"].get<std::string>() << " "
     << j["direction"].get<std::string>() << " crosser="
     << j["crosser"].get<std::string>() << " crossee="
     << j["crossee"].get<std::string>();
  if (c.kind == CrossKind::Module)
    os << " overlap=" << j["data"]["overlap"].get<std::string>();
  if (c.kind == CrossKind::Arrow)
    os << " arrow=" << j["data"]["arrow"].get<std::string>();
  if (c.kind == CrossKind::ThreeCycle)
    os << " cycle=(" << j["data"]["cycle"][0].get<std::string>() << ", "
       << j["data"]["cycle"][1].get<std::string>() << ", "
       << j["data"]["cycle"][2].get<std::string>() << ")";
  return os.str();
}

json smoothing_json(const Surface& S, const SmoothingResult& r) {
  return {{"w3", arc_value_json(S.T, r.w3)},
          {"w4", arc_value_json(S.T, r.w4)},
          {"w5", arc_value_json(S.T, r.w5)},
          {"w6", arc_value_json(S.T, r.w6)}};
}

json triangle_json(const Surface& S, const Triangle& t) {
  json mid = json::array();
  for (const ArcValue& v : t.middle) mid.push_back(arc_value_json(S.T, v));
  return {{"source", arc_value_json(S.T, t.source)},
          {"middle", mid},
          {"target", arc_value_json(S.T, t.target)}};
}

json ext_report_json(const Surface& S, const StringWord& w1, const StringWord& w2) {
  json j;
  auto crossings = enumerate_crossings(S, w1, w2);
  j["crossings"] = json::array();
  j["smoothings"] = json::array();
  for (size_t i = 0; i < crossings.size(); ++i) {
    j["crossings"].push_back(crossing_json(S, static_cast<int>(i), crossings[i]));
    j["smoothings"].push_back(smoothing_json(S, smooth(S, crossings[i])));
  }
  ExtReport er = ext_dim(S, w1, w2);
  j["ext"] = {{"dim_MN", er.dim_mn},
              {"dim_NM", er.dim_nm},
              {"Int", er.intersection},
              {"k", er.k},
              {"k_prime", er.k_prime}};
  j["ses"] = json::array();
  for (const auto& ses : ext_basis(S, w1, w2)) {
    json mids = json::array();
    for (const auto& m : ses.middle) mids.push_back(print_word(S.T, m.word));
    j["ses"].push_back({{"sub", print_word(S.T, ses.sub.word)},
                        {"middle", mids},
                        {"quotient", print_word(S.T, ses.quotient.word)}});
  }
  j["triangles"] = json::array();
  auto tris = cluster_triangles(S, w1, w2);
  for (size_t i = 0; i < tris.size(); ++i) {
    json t1 = triangle_json(S, tris[i].first);
    json t2 = triangle_json(S, tris[i].second);
    t1["crossing"] = i;
    t2["crossing"] = i;
    j["triangles"].push_back(t1);
    j["triangles"].push_back(t2);
  }
  return j;
}

}  // namespace arcext
