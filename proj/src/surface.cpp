#include "arcext/surface.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

namespace arcext {

using nlohmann::json;

EdgeIx Triangulation::edge(const std::string& id) const {
  for (EdgeIx e = 0; e < static_cast<EdgeIx>(edges.size()); ++e)
    if (edges[e].id == id) return e;
  throw ValidationError("unknown-edge", "unknown edge label '" + id + "'");
}

std::vector<TriIx> Triangulation::shared_triangles(EdgeIx a, EdgeIx b) const {
  std::vector<TriIx> out;
  for (TriIx t : tris_of_edge[a])
    if (tri_contains(t, b)) out.push_back(t);
  return out;
}

TriIx Triangulation::shared_triangle(EdgeIx a, EdgeIx b) const {
  auto ts = shared_triangles(a, b);
  if (ts.empty())
    throw ValidationError("no-shared-triangle", "arcs '" + label(a) + "' and '" +
                                                    label(b) +
                                                    "' share no triangle");
  if (ts.size() > 1)
    throw ValidationError(
        "ambiguous-shared-triangle",
        "arcs '" + label(a) + "' and '" + label(b) +
            "' share two triangles; crossing sequences over such pairs are "
            "not supported");
  return ts[0];
}

std::array<TriIx, 2> Triangulation::adjacent_triangles(EdgeIx e) const {
  const auto& ts = tris_of_edge[e];
  if (ts.size() != 2)
    throw InternalFault("edge-incidence",
                        "internal edge '" + label(e) + "' not in 2 triangles");
  return {ts[0], ts[1]};
}

TriIx Triangulation::other_triangle(EdgeIx e, TriIx t) const {
  auto ts = adjacent_triangles(e);
  if (ts[0] == t) return ts[1];
  if (ts[1] == t) return ts[0];
  throw InternalFault("other-triangle", "triangle does not contain the edge");
}

bool Triangulation::tri_contains(TriIx t, EdgeIx e) const {
  const auto& tr = triangles[t];
  return tr[0] == e || tr[1] == e || tr[2] == e;
}

EdgeIx Triangulation::third_side(TriIx t, EdgeIx a, EdgeIx b) const {
  const auto& tr = triangles[t];
  for (EdgeIx e : tr)
    if (e != a && e != b) return e;
  throw InternalFault("third-side", "degenerate triangle");
}

std::array<EdgeIx, 2> Triangulation::flanks_ccw(TriIx t, EdgeIx diag) const {
  const auto& tr = triangles[t];
  for (int i = 0; i < 3; ++i)
    if (tr[i] == diag) return {tr[(i + 1) % 3], tr[(i + 2) % 3]};
  throw InternalFault("flanks", "edge not a side of the triangle");
}

void Triangulation::check_invariants() const {
  if (edges.empty() || triangles.empty())
    throw ValidationError("empty-document", "no edges or no triangles");
  std::set<std::string> seen;
  for (const auto& e : edges) {
    if (e.id.empty())
      throw ValidationError("bad-label", "empty edge label");
    if (e.id.find_first_of("<>(), \t\n") != std::string::npos)
      throw ValidationError("bad-label",
                            "edge label '" + e.id +
                                "' contains a character reserved by the "
                                "string grammar");
    if (!seen.insert(e.id).second)
      throw ValidationError("duplicate-label", "duplicate edge label '" + e.id + "'");
  }
  std::vector<int> count(edges.size(), 0);
  for (const auto& tr : triangles) {
    if (tr[0] == tr[1] || tr[1] == tr[2] || tr[0] == tr[2])
      throw ValidationError("repeated-side",
                            "triangle with a repeated side (self-folded "
                            "triangles are not supported)");
    for (EdgeIx e : tr) ++count[e];
  }
  bool any_internal = false;
  for (EdgeIx e = 0; e < static_cast<EdgeIx>(edges.size()); ++e) {
    int want = edges[e].boundary ? 1 : 2;
    if (count[e] != want)
      throw ValidationError(
          "edge-incidence",
          "edge '" + edges[e].id + "' occurs in " + std::to_string(count[e]) +
              " triangle slots, expected " + std::to_string(want));
    if (!edges[e].boundary) any_internal = true;
  }
  if (!any_internal)
    throw ValidationError("no-internal-edge", "triangulation has no internal edge");
}

Triangulation load_triangulation(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& ex) {
    throw ValidationError("bad-json", std::string("cannot parse document: ") + ex.what());
  }
  if (!doc.is_object() || !doc.contains("edges") || !doc.contains("triangles"))
    throw ValidationError("bad-schema", "expected {\"edges\": [...], \"triangles\": [...]}");

  Triangulation T;
  for (const auto& e : doc["edges"]) {
    if (!e.is_object() || !e.contains("id") || !e.contains("boundary") ||
        !e["id"].is_string() || !e["boundary"].is_boolean())
      throw ValidationError("bad-schema", "edge records need string id and boolean boundary");
    T.edges.push_back({e["id"].get<std::string>(), e["boundary"].get<bool>()});
  }
  for (const auto& tr : doc["triangles"]) {
    if (!tr.is_array() || tr.size() != 3)
      throw ValidationError("bad-schema", "triangles must be triples of edge ids");
    std::array<EdgeIx, 3> sides{};
    for (int i = 0; i < 3; ++i) {
      if (!tr[i].is_string())
        throw ValidationError("bad-schema", "triangle sides must be edge ids");
      sides[i] = T.edge(tr[i].get<std::string>());
    }
    T.triangles.push_back(sides);
  }
  T.tris_of_edge.assign(T.edges.size(), {});
  for (TriIx t = 0; t < static_cast<TriIx>(T.triangles.size()); ++t)
    for (EdgeIx e : T.triangles[t]) T.tris_of_edge[e].push_back(t);
  T.check_invariants();
  return T;
}

bool QuiverWithPotential::is_vertex(EdgeIx e) const {
  return std::find(vertices.begin(), vertices.end(), e) != vertices.end();
}

std::optional<ArrowIx> QuiverWithPotential::arrow_from_to(EdgeIx u, EdgeIx v) const {
  std::optional<ArrowIx> found;
  for (ArrowIx a : arrows_from[u])
    if (arrows[a].target == v) {
      if (found)
        throw ValidationError("parallel-arrows",
                              "two parallel arrows join the given arcs (as on "
                              "an annulus with one marked point per boundary "
                              "component); words over such pairs are ambiguous");
      found = a;
    }
  return found;
}

ArrowIx QuiverWithPotential::arrow_between(EdgeIx u, EdgeIx v) const {
  auto fwd = arrow_from_to(u, v);
  auto bwd = arrow_from_to(v, u);
  if (fwd && bwd)
    throw ValidationError("ambiguous-arrow",
                          "two arrows join the given arcs; the connecting "
                          "triangle is ambiguous");
  if (fwd) return *fwd;
  if (bwd) return *bwd;
  throw ValidationError("no-arrow", "no arrow joins the given arcs");
}

bool QuiverWithPotential::in_ideal(ArrowIx a, ArrowIx b) const {
  for (const auto& r : relations)
    if (r.first == a && r.second == b) return true;
  return false;
}

std::optional<int> QuiverWithPotential::cycle_of(ArrowIx a) const {
  for (int c = 0; c < static_cast<int>(cycles.size()); ++c)
    for (ArrowIx x : cycles[c])
      if (x == a) return c;
  return std::nullopt;
}

ArrowIx QuiverWithPotential::cycle_completion(ArrowIx alpha, ArrowIx gamma) const {
  if (arrows[alpha].target != arrows[gamma].source)
    throw ValidationError("not-composable", "arrows do not compose");
  if (!in_ideal(alpha, gamma))
    throw ValidationError("not-a-relation", "the composite path is not in the ideal");
  for (const auto& cyc : cycles) {
    for (int i = 0; i < 3; ++i) {
      if (cyc[i] == alpha && cyc[(i + 1) % 3] == gamma) {
        ArrowIx sigma = cyc[(i + 2) % 3];
        if (!in_ideal(gamma, sigma) || !in_ideal(sigma, alpha))
          throw InternalFault("potential-coherence",
                              "cycle completion fails the relation checks");
        return sigma;
      }
    }
  }
  throw InternalFault("no-cycle-completion",
                      "relation pair lies in no cycle of the potential");
}

void QuiverWithPotential::check_gentle() const {
  auto fail = [](const std::string& what) {
    throw ValidationError("not-gentle", "derived quiver violates " + what);
  };
  for (EdgeIx v : vertices) {
    if (arrows_from[v].size() > 2 || arrows_into[v].size() > 2)
      fail("(S1) at vertex");
  }
  for (ArrowIx a = 0; a < static_cast<ArrowIx>(arrows.size()); ++a) {
    int comp_out = 0, comp_in = 0, rel_out = 0, rel_in = 0;
    for (ArrowIx b = 0; b < static_cast<ArrowIx>(arrows.size()); ++b) {
      if (arrows[a].target == arrows[b].source)
        (in_ideal(a, b) ? rel_out : comp_out)++;
      if (arrows[b].target == arrows[a].source)
        (in_ideal(b, a) ? rel_in : comp_in)++;
    }
    if (comp_out > 1 || comp_in > 1) fail("(S2) at arrow");
    if (rel_out > 1 || rel_in > 1) fail("(S4) at arrow");
  }
  // Every relation sits inside exactly one cycle; every cycle contributes
  // exactly its three consecutive pairs.
  for (const auto& r : relations) {
    int hits = 0;
    for (const auto& cyc : cycles)
      for (int i = 0; i < 3; ++i)
        if (cyc[i] == r.first && cyc[(i + 1) % 3] == r.second) ++hits;
    if (hits != 1) fail("potential coverage of a relation");
  }
  for (const auto& cyc : cycles)
    for (int i = 0; i < 3; ++i)
      if (!in_ideal(cyc[i], cyc[(i + 1) % 3]))
        fail("relations of a potential cycle");

  // Finite-dimensionality: a cycle of relation-free compositions would give
  // arbitrarily long paths. Unpunctured surface algebras never have one, so
  // this is where smuggled punctured (or closed) inputs surface.
  int n = static_cast<int>(arrows.size());
  std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
  auto dfs = [&](auto&& self, ArrowIx a) -> bool {
    state[a] = 1;
    for (ArrowIx b = 0; b < n; ++b) {
      if (arrows[a].target != arrows[b].source || in_ideal(a, b)) continue;
      if (state[b] == 1) return false;
      if (state[b] == 0 && !self(self, b)) return false;
    }
    state[a] = 2;
    return true;
  };
  for (ArrowIx a = 0; a < n; ++a)
    if (state[a] == 0 && !dfs(dfs, a))
      fail("finite-dimensionality (the input hides a puncture or a closed "
           "surface)");
}

QuiverWithPotential derive_quiver(const Triangulation& T) {
  QuiverWithPotential Q;
  for (EdgeIx e = 0; e < static_cast<EdgeIx>(T.edges.size()); ++e)
    if (T.is_internal(e)) Q.vertices.push_back(e);

  Q.arrows_from.assign(T.edges.size(), {});
  Q.arrows_into.assign(T.edges.size(), {});

  // One arrow x->y per triangle and ccw-consecutive internal pair (x, y).
  std::vector<std::array<std::optional<ArrowIx>, 3>> slot_arrow(T.triangles.size());
  for (TriIx t = 0; t < static_cast<TriIx>(T.triangles.size()); ++t) {
    const auto& tr = T.triangles[t];
    for (int i = 0; i < 3; ++i) {
      EdgeIx x = tr[i], y = tr[(i + 1) % 3];
      if (T.is_internal(x) && T.is_internal(y)) {
        ArrowIx a = static_cast<ArrowIx>(Q.arrows.size());
        Q.arrows.push_back({x, y, t});
        Q.arrows_from[x].push_back(a);
        Q.arrows_into[y].push_back(a);
        slot_arrow[t][i] = a;
      }
    }
  }
  for (TriIx t = 0; t < static_cast<TriIx>(T.triangles.size()); ++t) {
    const auto& sl = slot_arrow[t];
    if (sl[0] && sl[1] && sl[2]) {
      Q.cycles.push_back({*sl[0], *sl[1], *sl[2]});
      for (int i = 0; i < 3; ++i)
        Q.relations.emplace_back(*sl[i], *sl[(i + 1) % 3]);
    }
  }
  Q.check_gentle();
  return Q;
}

Surface Surface::load(const std::string& json_text) {
  return from_triangulation(load_triangulation(json_text));
}

Surface Surface::from_triangulation(Triangulation T) {
  Surface S;
  S.T = std::move(T);
  S.Q = derive_quiver(S.T);
  return S;
}

}  // namespace arcext
